#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "anosov/groups.hpp"

using namespace anosov;

namespace {

const ModelConstants kMc = model_constants(3, sigma_mod(3));

double displacement(const Eigen::MatrixXd& m) { return cartan_vector(GroupElementd(m)).norm(); }

/// All freely reduced words of length exactly n over g, G, h, H.
std::vector<std::string> reduced_words(int n) {
  const std::string letters = "gGhH";
  auto inverse = [](char c) { return static_cast<char>(std::islower(c) ? std::toupper(c) : std::tolower(c)); };
  std::vector<std::string> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (char c : letters)
        if (w.empty() || w.back() != inverse(c)) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

/// 2x2 matrices of the same free group acting on the upper half plane.
Eigen::Matrix2d sl2_generator(char c, double t) {
  Eigen::Matrix2d m;
  const double sign = std::islower(c) ? 1 : -1;
  if (std::tolower(c) == 'g') {
    m << std::exp(sign * t), 0, 0, std::exp(-sign * t);
  } else {
    m << std::cosh(t), sign * std::sinh(t), sign * std::sinh(t), std::cosh(t);
  }
  return m;
}

/// Hyperbolic distance from i to A.i (curvature -1), via the Moebius action.
double half_plane_distance(const Eigen::Matrix2d& a) {
  const std::complex<double> i(0, 1);
  const std::complex<double> z = (a(0, 0) * i + a(0, 1)) / (a(1, 0) * i + a(1, 1));
  return std::acosh(1 + std::norm(z - i) / (2 * z.imag()));
}

}  // namespace

TEST(FreeGroup, ConstantsAtStandardParameter) {
  const auto c = free_group_constants(0.75);
  EXPECT_NEAR(c.c1_inv, 1.27998, 1e-5);
  EXPECT_NEAR(c.c3, 3.3705, 1e-4);
  EXPECT_NEAR(c.R, 3.17534, 1e-5);
  EXPECT_LE(c.R, 3.18);
  EXPECT_LE(c.c3, 3.38);
}

TEST(FreeGroup, ConstantsAgainstExtendedPrecision) {
  for (double T : {0.72, 0.8, 0.9, 0.95}) {
    const long double Tl = T;
    const long double s3 = std::sqrt(3.0L);
    const long double t = std::atanh(Tl);
    const long double r = std::sqrt(2 * Tl * Tl - 1);
    const long double middle = 0.5L * std::log((Tl * Tl + r) / (Tl * Tl - r));
    const long double q = 2 * Tl * std::sqrt(1 - Tl * Tl);
    const long double third = 0.5L * std::log((1 + q) / (1 - q));
    const long double c1_inv = s3 * std::min({t, middle, third});
    const long double R = s3 * std::atanh(std::sqrt(1 / (Tl * Tl) - 2 + 2 * Tl * Tl));
    const auto c = free_group_constants(T);
    EXPECT_NEAR(c.c1_inv, static_cast<double>(c1_inv), 1e-12) << T;
    EXPECT_NEAR(c.R, static_cast<double>(R), 1e-12) << T;
    EXPECT_NEAR(c.t, static_cast<double>(t), 1e-14);
  }
  EXPECT_NEAR(free_group_constants(0.9).t, 1.4722, 1e-4);
}

TEST(FreeGroup, DegeneratesAtTheCocompactnessBoundary) {
  EXPECT_THROW(free_group_constants(1 / std::sqrt(2.0)), std::invalid_argument);
  EXPECT_THROW(free_group_constants(0.5), std::invalid_argument);
  const auto near = free_group_constants(1 / std::sqrt(2.0) + 1e-9);
  EXPECT_LT(near.c1_inv, 1e-3);
  EXPECT_GT(near.R, 10);
}

TEST(FreeGroup, Generators) {
  const GroupModel m = free_group_generators(0.75);
  ASSERT_EQ(m.generators.size(), 4u);
  EXPECT_TRUE(m.free);
  const double t = std::atanh(0.75);
  for (const auto& g : m.generators) {
    EXPECT_NEAR(displacement(g.matrix), 2 * std::sqrt(3.0) * t, 1e-12) << g.label;
    EXPECT_LE((g.matrix * m.generators[g.inverse].matrix - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(),
              1e-12);
  }
  EXPECT_NEAR(m.generators[0].matrix.norm(), 2.8536, 1e-4);
  EXPECT_NEAR(m.generators[0].matrix.norm(), std::sqrt(std::exp(2 * t) + 1 + std::exp(-2 * t)), 1e-14);
}

TEST(FreeGroup, OrbitDistancesMatchTheHyperbolicPlane) {
  const double T = 0.75;
  const double t = std::atanh(T);
  const GroupModel m = free_group_generators(T);
  double worst = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : reduced_words(n)) {
      Eigen::Matrix2d a = Eigen::Matrix2d::Identity();
      for (char c : w) a = a * sl2_generator(c, t);
      const double want = std::sqrt(3.0) * half_plane_distance(a);
      worst = std::max(worst, std::abs(displacement(evaluate_word(m, w)) - want) / std::max(1.0, want));
    }
  }
  EXPECT_LE(worst, 1e-9);
}

TEST(FreeGroup, ReducedWordsAreDistinctElements) {
  const GroupModel m = free_group_generators(0.75);
  std::set<std::vector<double>> keys;
  std::size_t count = 1;
  keys.insert(element_key(Eigen::MatrixXd::Identity(3, 3)));
  for (int n = 1; n <= 10; ++n) {
    for (const auto& w : reduced_words(n)) {
      keys.insert(element_key(evaluate_word(m, w)));
      ++count;
    }
  }
  EXPECT_EQ(keys.size(), count);
}

TEST(FreeGroup, UpperQuasiIsometryBound) {
  const GroupModel m = free_group_generators(0.75);
  const double step = free_group_constants(0.75).c3;
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : reduced_words(n)) EXPECT_LE(displacement(evaluate_word(m, w)), step * n + 1e-9) << w;
}

TEST(SurfaceGroup, GeneratorsAndRelator) {
  const GroupModel m = surface_group_model();
  ASSERT_EQ(m.generators.size(), 8u);
  EXPECT_FALSE(m.free);
  const double want = 2 * std::sqrt(3.0) * std::acosh(1 / std::tan(std::numbers::pi / 8));
  EXPECT_NEAR(want, 5.2951, 1e-4);
  for (const auto& g : m.generators) {
    EXPECT_NEAR(displacement(g.matrix), want, 1e-12) << g.label;
    EXPECT_NEAR(g.matrix.determinant(), 1, 1e-12);
  }
  const Eigen::MatrixXd r = evaluate_word(m, surface_relator());
  const double to_identity = std::min((r - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(),
                                      (r + Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff());
  EXPECT_LE(to_identity, 1e-9);
  // Any proper cyclic piece of the relator is nontrivial.
  const Eigen::MatrixXd piece = evaluate_word(m, surface_relator().substr(0, 4));
  EXPECT_GT((piece - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-3);
  EXPECT_THROW(evaluate_word(m, "ax"), std::invalid_argument);
}

TEST(SurfaceGroup, CoveringRadius) {
  const double R = surface_covering_radius();
  const double cot = 1 / std::tan(std::numbers::pi / 8);
  EXPECT_NEAR(R, std::sqrt(3.0) * std::acosh(cot * cot), 1e-15);
  EXPECT_NEAR(2 * R + 1, 9.481688, 1e-6);
  EXPECT_LE(2 * R + 1, 9.5);
}

TEST(Ball, RadiusZeroIsEmpty) {
  const BallResult b = ball_generating_set(surface_group_model(), 0, 8);
  EXPECT_TRUE(b.elements.empty());
  EXPECT_TRUE(b.complete);
}

TEST(Ball, SmallRadiusGivesTheGenerators) {
  const BallResult b = ball_generating_set(surface_group_model(), 5.3, 8);
  EXPECT_EQ(b.elements.size(), 8u);
  EXPECT_TRUE(b.complete);
}

TEST(Ball, GeneratingRadiusIsSymmetricAndSound) {
  const GroupModel m = surface_group_model();
  const BallResult b = ball_generating_set(m, 9.5, 12);
  EXPECT_TRUE(b.complete);
  EXPECT_EQ(b.elements.size(), 64u);  // regression value
  std::set<std::vector<double>> keys;
  for (const auto& e : b.elements) {
    EXPECT_LE(e.displacement, 9.5);
    EXPECT_NEAR(displacement(e.matrix), e.displacement, 1e-9);
    EXPECT_LE((evaluate_word(m, e.word) - e.matrix).cwiseAbs().maxCoeff(), 1e-9);
    keys.insert(element_key(e.matrix));
  }
  EXPECT_EQ(keys.size(), b.elements.size());
  for (const auto& e : b.elements) EXPECT_TRUE(keys.count(element_key(e.matrix.inverse()))) << e.word;
  for (const auto& g : m.generators) EXPECT_TRUE(keys.count(element_key(g.matrix))) << g.label;
}

TEST(Ball, DepthCapMarksIncomplete) {
  const BallResult b = ball_generating_set(surface_group_model(), 30, 1);
  EXPECT_FALSE(b.complete);
}

TEST(MilnorSchwarz, ConstantsAndUpperBound) {
  const QIConstants q = milnor_schwarz_constants(4.25);
  EXPECT_EQ(q.c1, 1);
  EXPECT_EQ(q.c2, 1);
  EXPECT_EQ(q.c3, 9.5);
  EXPECT_EQ(q.c4, 0);
  EXPECT_THROW(milnor_schwarz_constants(0), std::invalid_argument);
  // Words over the radius-9.5 generating set move the base point at most 9.5 per letter.
  const BallResult b = ball_generating_set(surface_group_model(), 9.5, 12);
  for (const auto& x : b.elements)
    for (const auto& y : b.elements) EXPECT_LE(displacement(x.matrix * y.matrix), 2 * 9.5 + 1e-9);
  EXPECT_NEAR(std::exp((2 * surface_covering_radius() + 1) / std::sqrt(6.0)), 47.99, 0.01);
}

TEST(ClassicalMorse, Example) {
  const ClassicalMorse c = classical_morse_constants({0.6376, 9.5, 1, 1});
  EXPECT_NEAR(c.D0, 6.88, 0.01);
  EXPECT_NEAR(c.R, 163, 0.5);
  EXPECT_NEAR(c.R, c.D0 + 9.5 * c.D0 + 9.5 * 9.5 + 0.5, 1e-12);
}

TEST(ClassicalMorse, SupremumIsSharp) {
  const HyperbolicityInput h{0.6376, 9.5, 1, 1};
  auto slack = [&](double D) {
    return h.delta_hyp * std::abs(std::log2(2 * D + 2 * h.M * h.M * h.l + 6 * D * h.M * h.l + h.a * h.M)) - (D - 1);
  };
  const double D0 = classical_morse_constants(h).D0;
  EXPECT_GE(slack(D0), 0);
  EXPECT_LE(slack(D0), 1e-5);
  EXPECT_LT(slack(D0 + 1e-3), 0);
}

TEST(ClassicalMorse, LimitsAndMonotonicity) {
  const ClassicalMorse tiny = classical_morse_constants({1e-9, 9.5, 1, 1});
  EXPECT_NEAR(tiny.D0, 1, 1e-5);
  EXPECT_NEAR(tiny.R, 1 + 9.5 + 9.5 * 9.5 + 0.5, 1e-3);
  double prev = 0;
  for (int i = 1; i <= 10; ++i) {
    const double R = classical_morse_constants({0.1 * i, 9.5, 1, 1}).R;
    EXPECT_GT(R, prev);
    prev = R;
  }
  EXPECT_THROW(classical_morse_constants({0, 9.5, 1, 1}), std::invalid_argument);
}

TEST(LocalMorse, FreeModelIsUniformlyRegular) {
  const auto fc = free_group_constants(0.75);
  MorseQIParams target;
  target.alpha0 = 0.95 * kMc.zeta0;
  target.c1 = std::max(1.0, 1 / fc.c1_inv);
  target.c3 = fc.c3;
  StraightSpacedParams st;
  st.epsilon = 0.025;
  st.s = 5;
  const VerifyReport r = local_morse_verify(free_group_generators(0.75), kMc, target, st, 6);
  EXPECT_TRUE(r.verdict());
  EXPECT_GT(r.regular_segments, 0);
  EXPECT_NEAR(r.min_margin, kMc.zeta0, 1e-9);
  EXPECT_NEAR(r.max_margin, kMc.zeta0, 1e-9);
  EXPECT_EQ(r.words, 4 * (1 + 3 + 9 + 27 + 81 + 243));
}

TEST(LocalMorse, SingleLettersAreVacuous) {
  MorseQIParams target;
  target.alpha0 = 0.95 * kMc.zeta0;
  target.c3 = 10;
  StraightSpacedParams st;
  st.epsilon = 0.025;
  st.s = 100;
  const VerifyReport r = local_morse_verify(free_group_generators(0.75), kMc, target, st, 1);
  EXPECT_TRUE(r.verdict());
  EXPECT_EQ(r.regular_segments, 0);
  EXPECT_EQ(r.angle_triples, 0);
}

TEST(LocalMorse, RegularityCannotExceedTheModelBound) {
  MorseQIParams target;
  target.alpha0 = 1.01 * kMc.zeta0;
  target.c3 = 10;
  StraightSpacedParams st;
  st.epsilon = 0.025;
  st.s = 1;
  const VerifyReport r = local_morse_verify(free_group_generators(0.75), kMc, target, st, 4);
  EXPECT_FALSE(r.regularity_pass);
  EXPECT_FALSE(r.verdict());
  EXPECT_NEAR(r.min_tested_margin, kMc.zeta0, 1e-9);
  EXPECT_FALSE(r.regularity_witness.empty());
}

TEST(LocalMorse, QuasiIsometryViolationHasAWitness) {
  MorseQIParams target;
  target.alpha0 = 0.5 * kMc.zeta0;
  target.c3 = 1;  // far below the generator displacement
  StraightSpacedParams st;
  st.s = 1;
  const VerifyReport r = local_morse_verify(free_group_generators(0.75), kMc, target, st, 2);
  EXPECT_FALSE(r.qi_pass);
  EXPECT_LT(r.qi_upper_margin, 0);
  EXPECT_FALSE(r.qi_witness.empty());
}

TEST(GroupModelBuilder, AppendsInversesAndRejectsIdentity) {
  Eigen::MatrixXd a = Eigen::Vector3d(2, 1, 0.5).asDiagonal();
  const GroupModel m = make_group_model("custom", {a});
  ASSERT_EQ(m.generators.size(), 2u);
  EXPECT_EQ(m.generators[1].label, "s1^-1");
  EXPECT_EQ(m.generators[0].inverse, 1);
  EXPECT_THROW(make_group_model("bad", {Eigen::MatrixXd::Identity(3, 3)}), std::invalid_argument);
  EXPECT_THROW(make_group_model("bad", {Eigen::MatrixXd(2 * Eigen::MatrixXd::Identity(3, 3))}), std::invalid_argument);
  // Given inverse pairs are matched rather than duplicated.
  const GroupModel paired = make_group_model("pair", {a, a.inverse()});
  EXPECT_EQ(paired.generators.size(), 2u);
  EXPECT_EQ(element_key(-a), element_key(a));
}
