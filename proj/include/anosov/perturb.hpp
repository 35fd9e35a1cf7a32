#pragma once

// Matrix estimates for perturbed representations, in log-domain arithmetic so
// that radii such as 10^-15309 are carried without underflow.

#include <cstdint>

#include "anosov/conditions.hpp"
#include "anosov/l2g.hpp"
#include "anosov/log_scalar.hpp"

namespace anosov {

/// Generators bounded by A in Frobenius norm, perturbed by at most eps, words of radius k.
struct PerturbationScenario {
  int d = 3;
  double A = 1;
  std::int64_t k = 3;
  LogScalar eps;
  double target_disp = 0;
};

/// |w' - w|_Fr <= 2 k A^{k-1} eps for words of length k; valid when k >= 3 and (k-1) eps / (2A) <= 1.
BoundResult word_perturbation_bound(double A, const LogScalar& eps, std::int64_t k);

/// d(gp, p) <= sqrt(d) (d-1) sqrt(2d) |g - 1|_Fr.
LogScalar frob_to_distance(int d, const LogScalar& frob_diff);

/// sqrt(8) d (d-1) k A^{2k-1} eps, with the word-perturbation preconditions for words of length 2k-1.
BoundResult orbit_displacement_bound(const PerturbationScenario& sc);

/// Largest eps for which orbit_displacement_bound equals target_disp. Throws
/// std::logic_error if the preconditions fail at the returned value.
LogScalar neighborhood_radius(int d, double A, std::int64_t k, double target_disp);

/// Conservative certificate exponent: floor(log10 eps).
std::int64_t radius_power_of_ten(const LogScalar& eps);

/// exp((2R+1) / sqrt(2d)).
double generator_frob_bound(int d, double two_R_plus_1);

struct LocalMorseTransfer {
  std::int64_t scale = 0;  // 2 k_w
  MorseQIParams params;
};

/// Parameters of the perturbed orbit map: (alpha0, D + eps, c1, c2 + eps, c3, c4 + eps), 2 k_w-local.
LocalMorseTransfer local_morse_transfer(const MorseQIParams& base, double eps_disp, std::int64_t k_w);

}  // namespace anosov
