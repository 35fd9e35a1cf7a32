#include "anosov/perturb.hpp"

#include <cmath>
#include <stdexcept>

namespace anosov {
namespace {

void require_A(double A) {
  if (!(A >= 1) || !std::isfinite(A)) throw std::invalid_argument("generator bound A must be finite and >= 1");
}

}  // namespace

BoundResult word_perturbation_bound(double A, const LogScalar& eps, std::int64_t k) {
  require_A(A);
  if (eps.sign() < 0) throw std::invalid_argument("word_perturbation_bound: eps must be >= 0");
  if (k < 1) throw std::invalid_argument("word_perturbation_bound: k must be >= 1");
  const double kd = static_cast<double>(k);
  BoundResult r;
  r.value = LogScalar::from_double(2 * kd) * pow_real(A, kd - 1) * eps;
  r.preconditions.push_back(make_condition("k >= 3", 3.0, kd));
  r.preconditions.push_back(make_condition("(k-1) eps/(2A) <= 1", eps * ((kd - 1) / (2 * A)), LogScalar::from_double(1)));
  return r;
}

LogScalar frob_to_distance(int d, const LogScalar& frob_diff) {
  if (d < 2) throw std::invalid_argument("frob_to_distance: d must be >= 2");
  const double dd = d;
  return frob_diff * (std::sqrt(dd) * (dd - 1) * std::sqrt(2 * dd));
}

BoundResult orbit_displacement_bound(const PerturbationScenario& sc) {
  if (sc.d < 2) throw std::invalid_argument("orbit_displacement_bound: d must be >= 2");
  const double dd = sc.d;
  const double kd = static_cast<double>(sc.k);
  BoundResult r = word_perturbation_bound(sc.A, sc.eps, 2 * sc.k - 1);
  r.preconditions.insert(r.preconditions.begin(), make_condition("scenario k >= 3", 3.0, kd));
  r.value = LogScalar::from_double(std::sqrt(8.0) * dd * (dd - 1) * kd) * pow_real(sc.A, 2 * kd - 1) * sc.eps;
  return r;
}

LogScalar neighborhood_radius(int d, double A, std::int64_t k, double target_disp) {
  require_A(A);
  if (d < 2) throw std::invalid_argument("neighborhood_radius: d must be >= 2");
  if (k < 3) throw std::invalid_argument("neighborhood_radius: k must be >= 3");
  if (!(target_disp > 0)) throw std::invalid_argument("neighborhood_radius: target displacement must be positive");
  const double dd = d;
  const double kd = static_cast<double>(k);
  const LogScalar eps = LogScalar::from_double(target_disp) /
                        (LogScalar::from_double(std::sqrt(8.0) * dd * (dd - 1) * kd) * pow_real(A, 2 * kd - 1));
  const BoundResult check = orbit_displacement_bound({d, A, k, eps, target_disp});
  if (!check.valid()) throw std::logic_error("neighborhood_radius: preconditions fail at the computed radius");
  return eps;
}

std::int64_t radius_power_of_ten(const LogScalar& eps) {
  if (eps.sign() <= 0 || eps.is_infinite()) throw std::invalid_argument("radius_power_of_ten: need a finite positive radius");
  return static_cast<std::int64_t>(std::floor(eps.log10_abs()));
}

double generator_frob_bound(int d, double two_R_plus_1) {
  if (d < 2 || !(two_R_plus_1 >= 0)) throw std::invalid_argument("generator_frob_bound: need d >= 2 and 2R+1 >= 0");
  return std::exp(two_R_plus_1 / std::sqrt(2.0 * d));
}

LocalMorseTransfer local_morse_transfer(const MorseQIParams& base, double eps_disp, std::int64_t k_w) {
  if (!(eps_disp >= 0)) throw std::invalid_argument("local_morse_transfer: eps must be >= 0");
  if (k_w < 1) throw std::invalid_argument("local_morse_transfer: k_w must be >= 1");
  LocalMorseTransfer t;
  t.scale = 2 * k_w;
  t.params = base;
  t.params.D += eps_disp;
  t.params.c2 += eps_disp;
  t.params.c4 += eps_disp;
  return t;
}

}  // namespace anosov
