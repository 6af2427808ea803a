#ifndef NBHD_REFERENCE_HPP
#define NBHD_REFERENCE_HPP

// Brute-force definitions used as independent oracles by the test and lemma
// suites. Nothing in the core library depends on these.

#include "nbhd/formula.hpp"
#include "nbhd/model.hpp"

namespace nbhd::reference {

/// Direct recursion over the formula tree.
Subset truth_set(const Model& m, const Formula& f);

/// Union of box(Y) over every Y contained in X, by enumerating all pairs.
Frame supplement(const Frame& frame);

/// Union of box(X1) & ... & box(Xk) over every family of supersets of X whose
/// intersection is X. Exponential in 2^worlds; only for worlds <= 3.
Frame intersection_closure(const Frame& frame);

/// Pairwise X <= Y check.
bool is_monotonic(const Frame& frame);

/// box X1 & box X2 & box X3 <= box(X1 & X2 & X3) for all triples.
bool is_regular_ternary(const Frame& frame);

}  // namespace nbhd::reference

#endif  // NBHD_REFERENCE_HPP
