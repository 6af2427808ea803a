#include "nbhd/generate.hpp"

#include <algorithm>

namespace nbhd {

namespace {

Formula random_formula_impl(Rng& rng, const FormulaShape& shape, int depth_left, int budget) {
  // Leaves become likelier as the node budget shrinks.
  if (budget <= 1 || uniform_below(rng, 4) == 0) {
    return Formula::var(shape.variables[uniform_below(rng, shape.variables.size())]);
  }
  switch (uniform_below(rng, depth_left > 0 ? 4 : 2)) {
    case 0:
      return Formula::neg(random_formula_impl(rng, shape, depth_left, budget - 1));
    case 1: {
      const int left_budget = 1 + static_cast<int>(uniform_below(rng, std::max(1, budget - 2)));
      return Formula::conj(random_formula_impl(rng, shape, depth_left, left_budget),
                           random_formula_impl(rng, shape, depth_left, std::max(1, budget - 1 - left_budget)));
    }
    default:
      return Formula::box(random_formula_impl(rng, shape, depth_left - 1, budget - 1));
  }
}

Formula random_variable_free_impl(Rng& rng, int depth_left, int budget) {
  if (budget <= 1 || uniform_below(rng, 4) == 0) return uniform_below(rng, 2) ? top() : bot();
  switch (uniform_below(rng, depth_left > 0 ? 4 : 2)) {
    case 0:
      return Formula::neg(random_variable_free_impl(rng, depth_left, budget - 1));
    case 1: {
      const int half = std::max(1, (budget - 1) / 2);
      return Formula::conj(random_variable_free_impl(rng, depth_left, half),
                           random_variable_free_impl(rng, depth_left, half));
    }
    default:
      return Formula::box(random_variable_free_impl(rng, depth_left - 1, budget - 1));
  }
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  return random_formula_impl(rng, shape, shape.max_depth, shape.max_nodes);
}

Formula random_variable_free_formula(Rng& rng, int max_depth, int max_nodes) {
  return random_variable_free_impl(rng, max_depth, max_nodes);
}

Frame random_frame(Rng& rng, int worlds) {
  std::vector<Subset> box(std::size_t{1} << worlds);
  for (auto& entry : box) entry = random_subset(rng, worlds);
  return Frame(worlds, std::move(box));
}

Frame random_reflexive_frame(Rng& rng, int worlds) {
  std::vector<Subset> box(std::size_t{1} << worlds);
  for (std::size_t m = 0; m < box.size(); ++m) {
    box[m] = random_subset(rng, worlds) & Subset(static_cast<Subset::Bits>(m));
  }
  return Frame(worlds, std::move(box));
}

Valuation random_valuation(Rng& rng, int worlds, const std::vector<std::string>& variables) {
  Valuation v;
  for (const auto& name : variables) v.emplace(name, random_subset(rng, worlds));
  return v;
}

std::vector<Subset> random_relation(Rng& rng, int worlds) {
  const bool sparse = uniform_below(rng, 2) == 0;
  std::vector<Subset> successors(worlds);
  for (auto& s : successors) {
    s = random_subset(rng, worlds);
    if (sparse) s &= random_subset(rng, worlds);
  }
  return successors;
}

std::vector<Subset> transitive_closure(std::vector<Subset> successors) {
  const int n = static_cast<int>(successors.size());
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (successors[i].contains(k)) successors[i] |= successors[k];
    }
  }
  return successors;
}

std::vector<Subset> reflexive_closure(std::vector<Subset> successors) {
  for (std::size_t w = 0; w < successors.size(); ++w) successors[w] |= Subset::single(static_cast<int>(w));
  return successors;
}

Frame grow_until_transitive(const Frame& frame) {
  std::vector<Subset> box(frame.table().begin(), frame.table().end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t m = 0; m < box.size(); ++m) {
      const Subset image = box[m];
      Subset& target = box[image.index()];
      if (!image.subset_of(target)) {
        target |= image;
        changed = true;
      }
    }
  }
  return Frame(frame.worlds(), std::move(box));
}

}  // namespace nbhd
