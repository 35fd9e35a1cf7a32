#pragma once

// Explicit geometric bounds in the symmetric space. Bounds that can underflow
// a double are returned as LogScalar; bounds with side conditions are returned
// as BoundResult, whose value is computed even when a condition fails.

#include "anosov/conditions.hpp"
#include "anosov/log_scalar.hpp"

namespace anosov {

/// Regularity surviving a perturbation of both endpoints of a segment of length l:
/// alpha0 - (dx + dy)(alpha0 + kappa0) / (l - dx - dy). Requires l > dx + dy.
double regular_projection_alpha(double alpha0, double kappa0, double delta_x, double delta_y, double l);

/// Distance between strongly asymptotic geodesics after time l: D e^{kappa0 D - alpha0 l}.
LogScalar strong_asymptote_bound(double D, double l, double alpha0, double kappa0);

/// Rotation of a cone point: 2 D e^{kappa0 D - alpha0 l}.
BoundResult cone_rotation_bound(double D, double l, double alpha0, double alpha0_prime, double kappa0);

/// Distance from far points to an asymptotic Weyl cone: D e^{kappa0 D - alpha0 l}.
BoundResult weyl_cone_attraction_bound(double D, double l, double alpha0, double alpha0_prime, double kappa0,
                                       double zeta0);

/// Distance from a midpoint to the Weyl cone: 5 D e^{2 kappa0 D - alpha0 l}.
BoundResult midpoint_projection_bound(double D, double l, double alpha0, double alpha0_prime, double kappa0,
                                      double zeta0);

/// Angle moved by a simplex under a transvection of the given length: 2 asin(min(1, kappa0 |X| / 2)).
double simplex_displacement_bound(double transvection_norm, double kappa0);

/// pi - 4 asin(kappa0 dist / 2); may be <= 0 (vacuous). Requires dist <= 2 / kappa0.
double distance_to_angle(double dist, double kappa0);

/// Distance to the parallel set from an angle gap: delta / zeta0, valid when
/// delta <= zeta0^2 / (2 kappa0^2).
BoundResult angle_to_distance(double delta, double zeta0, double kappa0);

/// Lipschitz constant 1 / (alpha0 zeta0) of the projection to zeta-directions.
double zeta_projection_lipschitz(double alpha0, double zeta0);

}  // namespace anosov
