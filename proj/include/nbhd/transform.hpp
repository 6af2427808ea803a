#ifndef NBHD_TRANSFORM_HPP
#define NBHD_TRANSFORM_HPP

#include "nbhd/model.hpp"

namespace nbhd {

/// Upward closure: box#(X) is the union of box(Y) over all Y contained in X.
Frame supplement(const Frame& frame);

/// box^(X) = X when X is in the image of box, and the empty set otherwise.
Frame hat_closure(const Frame& frame);

/// Closure under finite intersections of arguments:
/// box*(X) = union of box(X1) & ... & box(Xk) over all X = X1 & ... & Xk.
///
/// Computed per world w through the family F_w(X) = {Y >= X : w in box(Y)}:
/// w is in box*(X) exactly when F_w(X) is nonempty and its intersection is X.
/// The family intersections for all X come from one superset-AND sweep.
Frame intersection_closure(const Frame& frame);

enum class Verification { off, on };

#ifdef NDEBUG
inline constexpr Verification kDefaultVerification = Verification::off;
#else
inline constexpr Verification kDefaultVerification = Verification::on;
#endif

/// supplement(intersection_closure(frame)). With verification on, the other
/// composition order is computed as well and InternalError is thrown if the
/// two tables differ.
Frame rm_closure(const Frame& frame, Verification verify = kDefaultVerification);

}  // namespace nbhd

#endif  // NBHD_TRANSFORM_HPP
