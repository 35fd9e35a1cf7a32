#include "anosov/estimates.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace anosov {
namespace {

void require_nonnegative(double x, const char* name) {
  if (!(x >= 0) || !std::isfinite(x)) throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
}

/// scale * D * e^{rate}, with D = 0 giving exactly zero.
LogScalar scaled_exponential(double scale, double D, double rate) {
  if (D == 0) return LogScalar::zero();
  return LogScalar::from_double(scale * D) * LogScalar::from_ln(rate);
}

/// ln sinh(x) for x > 0 without overflow.
double log_sinh(double x) {
  if (x > 20) return x + std::log1p(-std::exp(-2 * x)) - std::numbers::ln2;
  return std::log(std::sinh(x));
}

/// 1/2 (e^{c} - 1) sinh(x)^{-2} <= 3 e^{c}, evaluated in log form.
Condition sinh_condition(std::string name, double c, double x) {
  LogScalar lhs;
  if (c == 0) {
    lhs = LogScalar::zero();
  } else if (x == 0) {
    lhs = LogScalar::infinity();
  } else {
    lhs = LogScalar::from_double(0.5 * std::expm1(c)) / LogScalar::from_ln(2 * log_sinh(std::abs(x)));
  }
  return make_condition(std::move(name), lhs, LogScalar::from_ln(c) * 3.0);
}

/// alpha0 - num / den as a right-hand side, with den <= 0 mapped to -inf.
LogScalar regularity_rhs(double alpha0, double num, double den) {
  if (num == 0) return LogScalar::from_double(alpha0);
  if (!(den > 0)) return LogScalar::infinity(-1);
  return LogScalar::from_double(alpha0 - num / den);
}

}  // namespace

double regular_projection_alpha(double alpha0, double kappa0, double delta_x, double delta_y, double l) {
  require_nonnegative(delta_x, "delta_x");
  require_nonnegative(delta_y, "delta_y");
  const double room = l - delta_x - delta_y;
  if (!(room > 0)) throw std::invalid_argument("regular_projection_alpha: need l > delta_x + delta_y");
  return alpha0 - (delta_x + delta_y) * (alpha0 + kappa0) / room;
}

LogScalar strong_asymptote_bound(double D, double l, double alpha0, double kappa0) {
  require_nonnegative(D, "D");
  require_nonnegative(l, "l");
  return scaled_exponential(1.0, D, kappa0 * D - alpha0 * l);
}

BoundResult cone_rotation_bound(double D, double l, double alpha0, double alpha0_prime, double kappa0) {
  require_nonnegative(D, "D");
  require_nonnegative(l, "l");
  BoundResult r;
  r.value = scaled_exponential(2.0, D, kappa0 * D - alpha0 * l);
  r.preconditions.push_back(make_condition("alpha0' <= alpha0 - D(kappa0+alpha0)/(2l-D)", LogScalar::from_double(alpha0_prime),
                                           regularity_rhs(alpha0, D * (kappa0 + alpha0), 2 * l - D)));
  r.preconditions.push_back(make_condition("0 < alpha0'", 0.0, alpha0_prime, Relation::Less));
  r.preconditions.push_back(
      sinh_condition("(e^{2 kappa0 D}-1)/(2 sinh(alpha0'(2l-D))^2) <= 3 e^{2 kappa0 D}", 2 * kappa0 * D,
                     alpha0_prime * (2 * l - D)));
  return r;
}

BoundResult weyl_cone_attraction_bound(double D, double l, double alpha0, double alpha0_prime, double kappa0,
                                       double zeta0) {
  require_nonnegative(D, "D");
  require_nonnegative(l, "l");
  BoundResult r;
  r.value = scaled_exponential(1.0, D, kappa0 * D - alpha0 * l);
  r.preconditions.push_back(make_condition("alpha0' <= alpha0 - D(alpha0+kappa0)/(l-D)", LogScalar::from_double(alpha0_prime),
                                           regularity_rhs(alpha0, D * (alpha0 + kappa0), l - D)));
  const LogScalar ratio = D == 0 ? LogScalar::zero()
                                 : LogScalar::from_double(D) / LogScalar::from_double(alpha0_prime * zeta0 * l);
  r.preconditions.push_back(make_condition("D/(alpha0' zeta0 l) <= zeta0^2/kappa0^2", ratio,
                                           LogScalar::from_double(zeta0 * zeta0 / (kappa0 * kappa0))));
  return r;
}

BoundResult midpoint_projection_bound(double D, double l, double alpha0, double alpha0_prime, double kappa0,
                                      double zeta0) {
  require_nonnegative(D, "D");
  require_nonnegative(l, "l");
  BoundResult r;
  r.value = scaled_exponential(5.0, D, 2 * kappa0 * D - alpha0 * l);
  r.preconditions.push_back(make_condition("alpha0' <= alpha0 - 2D(alpha0+kappa0)/(l-2D)",
                                           LogScalar::from_double(alpha0_prime),
                                           regularity_rhs(alpha0, 2 * D * (alpha0 + kappa0), l - 2 * D)));
  r.preconditions.push_back(make_condition("0 < alpha0'", 0.0, alpha0_prime, Relation::Less));
  r.preconditions.push_back(
      sinh_condition("(e^{4 kappa0 D}-1)/(2 sinh(alpha0'(2l-2D))^2) <= 3 e^{4 kappa0 D}", 4 * kappa0 * D,
                     alpha0_prime * (2 * l - 2 * D)));
  const LogScalar ratio = D == 0 ? LogScalar::zero()
                                 : LogScalar::from_double(2 * D) / LogScalar::from_double(alpha0_prime * zeta0 * l);
  r.preconditions.push_back(make_condition("2D/(alpha0' zeta0 l) <= zeta0^2/kappa0^2", ratio,
                                           LogScalar::from_double(zeta0 * zeta0 / (kappa0 * kappa0))));
  return r;
}

double simplex_displacement_bound(double transvection_norm, double kappa0) {
  require_nonnegative(transvection_norm, "transvection_norm");
  return 2 * std::asin(std::min(1.0, kappa0 * transvection_norm / 2));
}

double distance_to_angle(double dist, double kappa0) {
  require_nonnegative(dist, "dist");
  const double x = kappa0 * dist / 2;
  if (x > 1 + 1e-12) throw std::invalid_argument("distance_to_angle: need dist <= 2/kappa0");
  return std::numbers::pi - 4 * std::asin(std::min(1.0, x));
}

BoundResult angle_to_distance(double delta, double zeta0, double kappa0) {
  require_nonnegative(delta, "delta");
  if (!(zeta0 > 0)) throw std::invalid_argument("angle_to_distance: zeta0 must be positive");
  BoundResult r;
  r.value = LogScalar::from_double(delta / zeta0);
  r.preconditions.push_back(make_condition("delta <= zeta0^2/(2 kappa0^2)", delta, zeta0 * zeta0 / (2 * kappa0 * kappa0)));
  return r;
}

double zeta_projection_lipschitz(double alpha0, double zeta0) {
  if (!(alpha0 > 0) || !(zeta0 > 0)) throw std::invalid_argument("zeta_projection_lipschitz: inputs must be positive");
  return 1.0 / (alpha0 * zeta0);
}

}  // namespace anosov
