#pragma once

// Concrete discrete groups in SL(3,R) preserving a totally geodesic hyperbolic
// plane, word enumeration, quasi-isometry constants, and a desk-scale
// verifier for the local Morse property of orbit maps.

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "anosov/l2g.hpp"
#include "anosov/symspace.hpp"

namespace anosov {

struct Generator {
  std::string label;
  Eigen::MatrixXd matrix;
  int inverse = -1;  // index of the inverse generator
};

/// Symmetric generating set. For free groups the freely reduced words are
/// geodesic; otherwise words come from breadth-first search with dedup.
struct GroupModel {
  std::string name;
  std::vector<Generator> generators;
  bool free = false;

  int dim() const { return static_cast<int>(generators.front().matrix.rows()); }
};

/// Builds a model from matrices, appending inverses that are not already
/// present (labels get a "^-1" suffix). Throws for non-SL(d) input or the identity.
GroupModel make_group_model(std::string name, const std::vector<Eigen::MatrixXd>& matrices, bool free = false,
                            std::vector<std::string> labels = {});

/// Dedup key: entries rounded to 9 decimals, with g and -g identified.
std::vector<double> element_key(const Eigen::MatrixXd& m);

struct FreeGroupConstants {
  double t = 0;       // atanh(T)
  double c1_inv = 0;  // lower quasi-isometry slope
  double c3 = 0;      // upper slope, 2 sqrt(3) t
  double R = 0;       // Morse constant of the orbit map
};

/// Constants of the Schottky-type free group with tanh t = T. Requires 1/sqrt(2) < T < 1.
FreeGroupConstants free_group_constants(double T);

/// Generators g = diag(e^t, 1, e^-t) and h = the hyperbolic rotation in the (1,3)-plane, with inverses.
GroupModel free_group_generators(double T);

/// Genus-two surface group: conjugates of diag(lambda, 1, 1/lambda) by rotations
/// of angle 0, pi/8, pi/4, 3pi/8 in the (1,3)-plane, log lambda = acosh(cot(pi/8)).
GroupModel surface_group_model();

/// A defining relator over the surface generators (labels a, b, c, d and inverses A, B, C, D).
std::string surface_relator();

/// sqrt(3) acosh(cot^2(pi/8)): covering radius of the surface group on its convex hull.
double surface_covering_radius();

/// Product of labelled generators, left to right.
Eigen::MatrixXd evaluate_word(const GroupModel& model, const std::string& word);

struct BallElement {
  Eigen::MatrixXd matrix;
  std::string word;
  double displacement = 0;
};

struct BallResult {
  std::vector<BallElement> elements;
  int depth = 0;          // number of layers expanded
  bool complete = true;   // false if the depth cap stopped a layer that still met the ball
};

/// All distinct non-identity elements gamma with d(I, gamma I) <= radius, by breadth-first
/// search that stops after a layer contributes nothing inside the ball.
BallResult ball_generating_set(const GroupModel& model, double radius, int depth_cap);

struct QIConstants {
  double c1 = 1, c2 = 0, c3 = 1, c4 = 0;
};

/// (1, 1, 2R+1, 0) for the generating set of radius 2R+1.
QIConstants milnor_schwarz_constants(double R);

struct HyperbolicityInput {
  double delta_hyp = 0;
  double M = 0;
  double l = 0;
  double a = 0;
};

struct ClassicalMorse {
  double D0 = 0;
  double R = 0;
};

/// D0 = sup{D : D - 1 <= delta |log2(2D + 2 M^2 l + 6 D M l + a M)|} to 1e-6 (the
/// returned D0 satisfies the inequality), and R = D0 + l M D0 + l M^2 + a/2.
ClassicalMorse classical_morse_constants(const HyperbolicityInput& h);

struct VerifyReport {
  std::int64_t words = 0;
  std::int64_t segments = 0;
  int max_len = 0;

  bool qi_pass = true;
  double qi_lower_margin = 0;  // min of d - (N/c1 - c2)
  double qi_upper_margin = 0;  // min of c3 N + c4 - d
  std::string qi_witness;

  bool regularity_pass = true;
  std::int64_t regular_segments = 0;  // segments long enough to be tested
  double min_margin = 0;              // over all nontrivial segments
  double max_margin = 0;
  double min_tested_margin = 0;       // over tested segments only
  std::string regularity_witness;

  bool straightness_pass = true;
  std::int64_t angle_triples = 0;
  double min_zeta_angle = 0;
  double angle_threshold = 0;
  std::string straightness_witness;

  /// Quasi-isometry sandwich and regularity; straightness is reported on its own.
  bool verdict() const { return qi_pass && regularity_pass; }
};

/// Checks every orbit segment of every enumerated word of length <= max_len against the
/// target quasi-isometry constants and regularity, and the zeta-angles of the greedy
/// s-coarsification against pi - eps. Throws std::length_error past 10^7 segments.
VerifyReport local_morse_verify(const GroupModel& model, const ModelConstants& mc, const MorseQIParams& target,
                                const StraightSpacedParams& straightness, int max_len);

}  // namespace anosov
