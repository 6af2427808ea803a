#include "nbhd/transform.hpp"

#include <vector>

#include "nbhd/error.hpp"

namespace nbhd {

Frame supplement(const Frame& frame) {
  std::vector<Subset> box(frame.table().begin(), frame.table().end());
  // Subset-sum (zeta) transform over the lattice with union as the sum.
  for (int bit = 0; bit < frame.worlds(); ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t m = 0; m < box.size(); ++m) {
      if (m & step) box[m] |= box[m ^ step];
    }
  }
  return Frame(frame.worlds(), std::move(box));
}

Frame hat_closure(const Frame& frame) {
  std::vector<bool> in_image(frame.subset_count(), false);
  for (const Subset image : frame.table()) in_image[image.index()] = true;
  std::vector<Subset> box(frame.subset_count());
  for (std::size_t m = 0; m < box.size(); ++m) {
    if (in_image[m]) box[m] = Subset(static_cast<Subset::Bits>(m));
  }
  return Frame(frame.worlds(), std::move(box));
}

Frame intersection_closure(const Frame& frame) {
  const int n = frame.worlds();
  const auto table = frame.table();
  // Marks an empty family; has bits outside every world range, so it never
  // equals a genuine subset.
  constexpr Subset::Bits kNoFamily = ~Subset::Bits{0};

  std::vector<Subset> result(table.size());
  std::vector<Subset::Bits> meet(table.size());
  for (int w = 0; w < n; ++w) {
    for (std::size_t m = 0; m < table.size(); ++m) {
      meet[m] = table[m].contains(w) ? static_cast<Subset::Bits>(m) : kNoFamily;
    }
    // Superset-AND transform: meet[X] becomes the intersection over all Y >= X.
    for (int bit = 0; bit < n; ++bit) {
      const std::size_t step = std::size_t{1} << bit;
      for (std::size_t m = 0; m < table.size(); ++m) {
        if (!(m & step)) meet[m] &= meet[m | step];
      }
    }
    for (std::size_t m = 0; m < table.size(); ++m) {
      if (meet[m] == m) result[m] |= Subset::single(w);
    }
  }
  return Frame(n, std::move(result));
}

Frame rm_closure(const Frame& frame, Verification verify) {
  Frame closed = supplement(intersection_closure(frame));
  if (verify == Verification::on && closed != intersection_closure(supplement(frame))) {
    throw InternalError("rm-closure: supplement and intersection closure do not commute on this frame");
  }
  return closed;
}

}  // namespace nbhd
