#pragma once

// Local-to-global machinery: condition checkers for straight-and-spaced and
// midpoint (quadruple) sequences, and a solver producing the scale L = 3k with
// the resulting global Morse quasigeodesic constants.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "anosov/conditions.hpp"
#include "anosov/symspace.hpp"

namespace anosov {

/// (alpha0, tau_mod, D)-Morse (c1, c2, c3, c4)-quasigeodesic parameters.
struct MorseQIParams {
  double alpha0 = 0;
  double D = 0;
  double c1 = 1;
  double c2 = 0;
  double c3 = 1;
  double c4 = 0;

  /// Throws std::invalid_argument unless c1 >= 1, c2, c4, D >= 0, c3 > 0, 1/c1 <= c3, alpha0 > 0.
  void validate() const;
};

/// Inputs to the straight-and-spaced criterion.
struct StraightSpacedParams {
  double alpha_in = 0;   // regularity of the given sequence
  double alpha_out = 0;  // regularity of the conclusion
  double delta = 0;
  double epsilon = 0;
  double s = 0;
};

/// Inputs to the midpoint-sequence criterion.
struct QuadrupleParams {
  double alpha0 = 0;
  double alpha_int = 0;  // internal auxiliary regularity
  double alpha_out = 0;  // regularity of the midpoint sequence
  double D = 0;
  double epsilon = 0;
  double c1 = 1;
  double c2 = 0;
  double s = 0;
  double l = 0;
  double delta_aux = 0;
  std::int64_t k = 0;
};

struct CheckReport {
  std::vector<Condition> conditions;
  bool degenerate = false;
  /// Named by-products, e.g. the spacing constant of the conclusion.
  std::vector<std::pair<std::string, double>> derived;

  bool pass() const { return all_pass(conditions); }
};

/// The five straight-and-spaced conditions. The unknown antipodality gap is
/// replaced by its lower bound zeta0^2/kappa0^2. Throws if s <= 2 delta.
CheckReport check_straight_spaced(const ModelConstants& mc, const StraightSpacedParams& p);

/// The midpoint-sequence conditions 1, 2a-c, 3, 4a-b, 5. Vanishing
/// denominators show up as failed conditions with an infinite side.
CheckReport check_quadruple(const ModelConstants& mc, const QuadrupleParams& p);

/// Which regularities the two criteria are applied with.
enum class AuxPolicy {
  /// Straight-and-spaced with (alpha_mid -> alpha_out); midpoint with (alpha0, alpha_int -> alpha_mid).
  Default,
  /// Straight-and-spaced with (alpha0 -> alpha_mid); same midpoint wiring.
  Paper52,
};

const char* policy_name(AuxPolicy policy);
/// Accepts "default" and "paper-5.2".
AuxPolicy parse_policy(const std::string& name);

struct SearchPolicy {
  AuxPolicy aux = AuxPolicy::Default;
  double s_granularity = 0.01;
  double l_granularity = 0.25;
  double cap = 1e9;
};

struct GlobalParams {
  double D_prime = 0;
  double c1_prime = 0;
  double c2_prime = 0;
  double c3_prime = 0;
  double c4_prime = 0;
};

struct L2GSolution {
  std::string policy;
  double alpha0 = 0;
  double alpha_mid = 0;
  double alpha_int = 0;
  double alpha_out = 0;
  double epsilon = 0;
  double delta = 0;
  double delta_aux = 0;
  double s = 0;
  double l = 0;
  std::int64_t k = 0;
  std::int64_t L = 0;
  GlobalParams global;
  StraightSpacedParams straight_params;
  QuadrupleParams quadruple_params;
  CheckReport straight;
  CheckReport quadruple;
};

/// No parameter up to the search cap satisfies some condition.
class InfeasibleError : public std::domain_error {
 public:
  InfeasibleError(const std::string& stage, const std::string& condition)
      : std::domain_error(stage + ": infeasible up to the search cap; blocking condition: " + condition),
        stage_(stage),
        condition_(condition) {}
  const std::string& stage() const { return stage_; }
  const std::string& condition() const { return condition_; }

 private:
  std::string stage_;
  std::string condition_;
};

/// Global constants for the local-to-global conclusion with L = 3k.
GlobalParams global_params(std::int64_t k, double s, double delta, double alpha_out, const ModelConstants& mc,
                           const MorseQIParams& morse);

/// Smallest s, then smallest l (on the search grid) satisfying both criteria,
/// k = ceil(c1(2l + c2)) and L = 3k. Both reports are re-evaluated at the
/// returned values.
L2GSolution solve_local_scale(const ModelConstants& mc, const MorseQIParams& morse, double alpha_out,
                              const SearchPolicy& policy = {});

}  // namespace anosov
