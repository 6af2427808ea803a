#ifndef NBHD_GENERATE_HPP
#define NBHD_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nbhd/formula.hpp"
#include "nbhd/model.hpp"

namespace nbhd {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240613;

/// Uniform integer in [0, bound). Plain modulo keeps streams identical across
/// standard libraries.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

inline Subset random_subset(Rng& rng, int worlds) {
  return Subset(static_cast<Subset::Bits>(rng())) & Subset::full(worlds);
}

struct FormulaShape {
  std::vector<std::string> variables = {"p", "q", "r"};
  int max_depth = 3;   // modal depth bound
  int max_nodes = 12;  // soft bound on node count
};

Formula random_formula(Rng& rng, const FormulaShape& shape);

/// Random formula without variable tokens, built from top/bot and the connectives.
Formula random_variable_free_formula(Rng& rng, int max_depth, int max_nodes);

/// Every box entry drawn uniformly.
Frame random_frame(Rng& rng, int worlds);
/// Random frame with box X restricted to X.
Frame random_reflexive_frame(Rng& rng, int worlds);

Valuation random_valuation(Rng& rng, int worlds, const std::vector<std::string>& variables);

/// Successor bitmask per world; each edge present with probability 1/2 or
/// 1/4 (chosen per relation).
std::vector<Subset> random_relation(Rng& rng, int worlds);
std::vector<Subset> transitive_closure(std::vector<Subset> successors);
std::vector<Subset> reflexive_closure(std::vector<Subset> successors);

/// Enlarges entries until box X <= box box X holds everywhere: whenever the
/// inclusion fails, box(box X) absorbs box X. Entries only grow, so this
/// terminates. A sampling device for transitive frames, not a closure operator.
Frame grow_until_transitive(const Frame& frame);

}  // namespace nbhd

#endif  // NBHD_GENERATE_HPP
