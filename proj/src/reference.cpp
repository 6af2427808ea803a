#include "nbhd/reference.hpp"

#include <stdexcept>
#include <vector>

namespace nbhd::reference {

Subset truth_set(const Model& m, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::variable:
      return m.value(f.name());
    case Formula::Kind::negation:
      return m.frame().universe() - reference::truth_set(m, f.child());
    case Formula::Kind::conjunction:
      return reference::truth_set(m, f.left()) & reference::truth_set(m, f.right());
    case Formula::Kind::box:
      return m.frame().box(reference::truth_set(m, f.child()));
  }
  return {};
}

Frame supplement(const Frame& frame) {
  std::vector<Subset> box(frame.subset_count());
  for (std::size_t x = 0; x < box.size(); ++x) {
    for (std::size_t y = 0; y < box.size(); ++y) {
      if ((y & ~x) == 0) box[x] |= frame.table()[y];
    }
  }
  return Frame(frame.worlds(), std::move(box));
}

Frame intersection_closure(const Frame& frame) {
  if (frame.worlds() > 3) throw std::invalid_argument("decomposition oracle is limited to 3 worlds");
  const std::size_t count = frame.subset_count();
  std::vector<Subset> box(count);
  for (std::size_t x = 0; x < count; ++x) {
    std::vector<std::size_t> supersets;
    for (std::size_t y = 0; y < count; ++y) {
      if ((x & ~y) == 0) supersets.push_back(y);
    }
    // Every nonempty family of supersets with intersection exactly X is a
    // decomposition X = X1 & ... & Xk (repetitions add nothing).
    for (std::size_t family = 1; family < (std::size_t{1} << supersets.size()); ++family) {
      std::size_t meet = count - 1;
      Subset image = frame.universe();
      for (std::size_t i = 0; i < supersets.size(); ++i) {
        if (family & (std::size_t{1} << i)) {
          meet &= supersets[i];
          image &= frame.table()[supersets[i]];
        }
      }
      if (meet == x) box[x] |= image;
    }
  }
  return Frame(frame.worlds(), std::move(box));
}

bool is_monotonic(const Frame& frame) {
  const auto t = frame.table();
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) {
      if ((x & ~y) == 0 && !t[x].subset_of(t[y])) return false;
    }
  }
  return true;
}

bool is_regular_ternary(const Frame& frame) {
  const auto t = frame.table();
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      for (std::size_t c = 0; c < t.size(); ++c) {
        if (!(t[a] & t[b] & t[c]).subset_of(t[a & b & c])) return false;
      }
    }
  }
  return true;
}

}  // namespace nbhd::reference
