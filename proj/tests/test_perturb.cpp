#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "anosov/groups.hpp"
#include "anosov/perturb.hpp"

using namespace anosov;

namespace {

double log10_orbit_bound(int d, double A, double k, double log10_eps) {
  return std::log10(std::sqrt(8.0) * d * (d - 1) * k) + (2 * k - 1) * std::log10(A) + log10_eps;
}

/// Taylor series exponential; exact to rounding for the tiny arguments used here.
Eigen::MatrixXd small_exp(const Eigen::MatrixXd& x) {
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(x.rows(), x.cols());
  Eigen::MatrixXd sum = term;
  for (int i = 1; i < 12; ++i) {
    term = term * x / i;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST(WordPerturbation, Examples) {
  const BoundResult r = word_perturbation_bound(2, LogScalar::from_double(0.001), 3);
  EXPECT_NEAR(r.value.to_double(), 0.024, 1e-15);
  EXPECT_TRUE(r.valid());
  EXPECT_NEAR(r.preconditions[1].lhs.to_double(), 0.0005, 1e-15);
  EXPECT_TRUE(word_perturbation_bound(2, LogScalar::zero(), 5).value.is_zero());
  EXPECT_FALSE(word_perturbation_bound(2, LogScalar::from_double(0.001), 2).valid());
  EXPECT_FALSE(word_perturbation_bound(1, LogScalar::from_double(1), 10).valid());

  const BoundResult deep = word_perturbation_bound(2.8536, LogScalar::from_log10(-15309), 16801);
  EXPECT_NEAR(deep.value.log10_abs(), std::log10(2.0 * 16801) + 16800 * std::log10(2.8536) - 15309, 1e-6);
  EXPECT_TRUE(deep.valid());
  EXPECT_THROW(word_perturbation_bound(0.5, LogScalar::from_double(0.1), 3), std::invalid_argument);
}

TEST(FrobToDistance, Examples) {
  EXPECT_NEAR(frob_to_distance(3, LogScalar::from_double(1)).to_double(), 2 * std::sqrt(18.0), 1e-12);
  EXPECT_NEAR(frob_to_distance(2, LogScalar::from_double(1)).to_double(), 2.8284271, 1e-7);
  EXPECT_TRUE(frob_to_distance(3, LogScalar::zero()).is_zero());
  EXPECT_THROW(frob_to_distance(1, LogScalar::from_double(1)), std::invalid_argument);
}

TEST(FrobToDistance, BoundsTrueDisplacementOfNearIdentityElements) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> n(0, 1e-3);
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::MatrixXd x(3, 3);
    for (int i = 0; i < 9; ++i) x(i / 3, i % 3) = n(rng);
    x -= Eigen::MatrixXd::Identity(3, 3) * (x.trace() / 3);
    const Eigen::MatrixXd g = small_exp(x);
    const double frob = (g - Eigen::MatrixXd::Identity(3, 3)).norm();
    const double dist = cartan_vector<double>(g, small_exp(-x)).norm();
    EXPECT_LE(dist, frob_to_distance(3, LogScalar::from_double(frob)).to_double());
  }
}

TEST(OrbitDisplacement, FreeGroupRadius) {
  const PerturbationScenario sc{3, 2.8536, 16801, LogScalar::from_log10(-15309), 0.1};
  const BoundResult r = orbit_displacement_bound(sc);
  EXPECT_NEAR(r.value.log10_abs(), log10_orbit_bound(3, 2.8536, 16801, -15309), 1e-6);
  EXPECT_NEAR(r.value.log10_abs(), -1.88, 0.01);
  EXPECT_LE(r.value, LogScalar::from_double(0.1));
  EXPECT_TRUE(r.valid());
}

TEST(OrbitDisplacement, SurfaceRadiusNeedsTheExactGeneratorBound) {
  const double exact_A = generator_frob_bound(3, 2 * surface_covering_radius() + 1);
  const PerturbationScenario sc{3, exact_A, 1100000, LogScalar::from_log10(-3698433), 10};
  EXPECT_LE(orbit_displacement_bound(sc).value, LogScalar::from_double(10));
  // Rounding A up to 47.987 costs 2.2e6 * log10(47.987/47.9847) ~ 45 decades.
  const PerturbationScenario rounded{3, 47.987, 1100000, LogScalar::from_log10(-3698433), 10};
  EXPECT_GT(orbit_displacement_bound(rounded).value, LogScalar::from_double(10));
}

TEST(OrbitDisplacement, ZeroAndPreconditions) {
  EXPECT_TRUE(orbit_displacement_bound({3, 2, 5, LogScalar::zero(), 1}).value.is_zero());
  EXPECT_FALSE(orbit_displacement_bound({3, 2, 2, LogScalar::from_double(1e-9), 1}).valid());
}

TEST(OrbitDisplacement, MonotoneInEachArgument) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> uA(1, 50), ue(-400, -10);
  std::uniform_int_distribution<std::int64_t> uk(3, 100000);
  for (int i = 0; i < 1000; ++i) {
    const PerturbationScenario sc{3, uA(rng), uk(rng), LogScalar::from_log10(ue(rng)), 1};
    const LogScalar base = orbit_displacement_bound(sc).value;
    PerturbationScenario more = sc;
    more.A *= 1.01;
    EXPECT_GT(orbit_displacement_bound(more).value, base);
    more = sc;
    more.k += 1;
    EXPECT_GT(orbit_displacement_bound(more).value, base);
    more = sc;
    more.eps = sc.eps * 1.5;
    EXPECT_GT(orbit_displacement_bound(more).value, base);
  }
}

TEST(NeighborhoodRadius, FreeGroup) {
  const LogScalar eps = neighborhood_radius(3, 2.8536, 16801, 0.1);
  EXPECT_NEAR(eps.log10_abs(), -1 - log10_orbit_bound(3, 2.8536, 16801, 0), 1e-6);
  EXPECT_NEAR(eps.log10_abs(), -15308.12, 0.01);
  EXPECT_GE(eps.log10_abs(), -15309);
  EXPECT_EQ(radius_power_of_ten(eps), -15309);
}

TEST(NeighborhoodRadius, SurfaceGroup) {
  const double A = generator_frob_bound(3, 2 * surface_covering_radius() + 1);
  const LogScalar eps = neighborhood_radius(3, A, 1100000, 10);
  EXPECT_NEAR(eps.log10_abs(), -3698431.42, 0.05);
  EXPECT_GE(eps.log10_abs(), -3698433);
}

TEST(NeighborhoodRadius, RoundTripAndLinearity) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> uA(1, 50), ut(1e-3, 100);
  std::uniform_int_distribution<std::int64_t> uk(3, 2000000);
  for (int i = 0; i < 1000; ++i) {
    const double A = uA(rng), target = ut(rng);
    const std::int64_t k = uk(rng);
    const LogScalar eps = neighborhood_radius(3, A, k, target);
    const BoundResult back = orbit_displacement_bound({3, A, k, eps, target});
    EXPECT_TRUE(back.valid());
    EXPECT_LE(std::abs(back.value.log10_abs() - std::log10(target)), 1e-12 * std::abs(eps.log10_abs()) + 1e-12);
    const LogScalar doubled = neighborhood_radius(3, A, k, 2 * target);
    EXPECT_NEAR(doubled.log10_abs() - eps.log10_abs(), std::log10(2.0), 1e-9);
  }
  EXPECT_THROW(neighborhood_radius(3, 2, 2, 1), std::invalid_argument);
  EXPECT_THROW(neighborhood_radius(3, 2, 5, 0), std::invalid_argument);
}

TEST(RadiusPowerOfTen, RoundsDown) {
  EXPECT_EQ(radius_power_of_ten(LogScalar::from_log10(-15308.12)), -15309);
  EXPECT_EQ(radius_power_of_ten(LogScalar::from_log10(-3.0)), -3);
  EXPECT_EQ(radius_power_of_ten(LogScalar::from_double(0.5)), -1);
  EXPECT_THROW(radius_power_of_ten(LogScalar::zero()), std::invalid_argument);
}

TEST(GeneratorFrobBound, Examples) {
  EXPECT_NEAR(generator_frob_bound(3, 9.5), std::exp(9.5 / std::sqrt(6.0)), 1e-12);
  EXPECT_NEAR(generator_frob_bound(3, 9.5), 48.345, 1e-3);
  EXPECT_NEAR(generator_frob_bound(3, 2 * surface_covering_radius() + 1), 47.9847, 1e-4);
  EXPECT_EQ(generator_frob_bound(5, 0), 1);
}

TEST(GeneratorFrobBound, DominatesTheBallElements) {
  const double two_R_plus_1 = 2 * surface_covering_radius() + 1;
  const double A = generator_frob_bound(3, two_R_plus_1);
  const BallResult b = ball_generating_set(surface_group_model(), two_R_plus_1, 12);
  for (const auto& e : b.elements) EXPECT_LE(e.matrix.norm(), A * (1 + 1e-12)) << e.word;
}

TEST(LocalMorseTransfer, RelaxesAdditiveParameters) {
  MorseQIParams base;
  base.alpha0 = 1 / (2 * std::sqrt(3.0));
  base.D = 3.18;
  base.c1 = 1;
  base.c2 = 0;
  base.c3 = 3.38;
  base.c4 = 0;
  const auto same = local_morse_transfer(base, 0, 7);
  EXPECT_EQ(same.scale, 14);
  EXPECT_EQ(same.params.D, base.D);
  EXPECT_EQ(same.params.c2, 0);

  const auto relaxed = local_morse_transfer(base, 0.1, 16801);
  EXPECT_EQ(relaxed.scale, 33602);
  EXPECT_NEAR(relaxed.params.D, 3.28, 1e-12);
  EXPECT_NEAR(relaxed.params.c2, 0.1, 1e-15);
  EXPECT_NEAR(relaxed.params.c4, 0.1, 1e-15);
  EXPECT_EQ(relaxed.params.c1, 1);
  EXPECT_EQ(relaxed.params.c3, 3.38);
  EXPECT_EQ(relaxed.params.alpha0, base.alpha0);

  EXPECT_EQ(local_morse_transfer(base, 10, 1100000).scale, 2200000);
  EXPECT_THROW(local_morse_transfer(base, -1, 3), std::invalid_argument);
  EXPECT_THROW(local_morse_transfer(base, 0.1, 0), std::invalid_argument);
}
