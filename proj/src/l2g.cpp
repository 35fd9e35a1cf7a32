#include "anosov/l2g.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace anosov {
namespace {

LogScalar L(double x) { return LogScalar::from_double(x); }

/// num / den where a nonpositive denominator makes the quotient unbounded.
LogScalar guarded_ratio(double num, double den) {
  if (num == 0) return LogScalar::zero();
  if (!(den > 0)) return LogScalar::infinity(num > 0 ? 1 : -1);
  return L(num) / L(den);
}

}  // namespace

void MorseQIParams::validate() const {
  if (!(alpha0 > 0)) throw std::invalid_argument("Morse parameters: alpha0 must be positive");
  if (!(D >= 0)) throw std::invalid_argument("Morse parameters: D must be >= 0");
  if (!(c1 >= 1)) throw std::invalid_argument("Morse parameters: c1 must be >= 1");
  if (!(c2 >= 0) || !(c4 >= 0)) throw std::invalid_argument("Morse parameters: c2, c4 must be >= 0");
  if (!(c3 > 0)) throw std::invalid_argument("Morse parameters: c3 must be positive");
  if (1 / c1 > c3) throw std::invalid_argument("Morse parameters: lower slope 1/c1 exceeds upper slope c3");
}

CheckReport check_straight_spaced(const ModelConstants& mc, const StraightSpacedParams& p) {
  const double k0 = mc.kappa0;
  const double z0 = mc.zeta0;
  const double a = p.alpha_in;
  if (!(p.alpha_out > 0) || !(p.alpha_out < a))
    throw std::invalid_argument("check_straight_spaced: need 0 < alpha_out < alpha_in");
  if (!(p.epsilon >= 0) || !(p.delta >= 0)) throw std::invalid_argument("check_straight_spaced: epsilon, delta must be >= 0");
  if (!(p.s > 2 * p.delta)) throw std::invalid_argument("check_straight_spaced: need s > 2 delta");

  CheckReport r;
  r.degenerate = p.epsilon == 0 || p.delta == 0;
  auto& c = r.conditions;
  c.push_back(make_condition("1: 5 eps <= zeta0^2/(2 kappa0^2)", 5 * p.epsilon, z0 * z0 / (2 * k0 * k0)));

  const LogScalar lhs2 = p.epsilon == 0 ? LogScalar::zero()
                                        : L(p.epsilon * k0 / z0) * LogScalar::from_ln(2 * k0 * p.epsilon / z0 - a * p.s);
  c.push_back(make_condition("2: (eps kappa0/zeta0) e^{2 kappa0 eps/zeta0 - alpha s} <= sin(eps/4)", lhs2,
                             L(std::sin(p.epsilon / 4))));
  c.push_back(make_condition("3: 5 eps/zeta0 <= delta", 5 * p.epsilon / z0, p.delta));
  c.push_back(make_condition("4: alpha_out <= alpha - 2 delta (alpha + kappa0)/(s - 2 delta)", p.alpha_out,
                             a - 2 * p.delta * (a + k0) / (p.s - 2 * p.delta)));
  // The true gap must be strict; its lower bound need only be non-strict.
  const double arg = std::min(1.0, 2 * p.delta / (a * z0 * p.s));
  c.push_back(make_condition("5: 2 eps + asin(2 delta/(alpha zeta0 s)) <= zeta0^2/kappa0^2",
                             2 * p.epsilon + std::asin(arg), mc.antipodal_threshold));
  r.derived.emplace_back("spacing_constant", 2 * p.alpha_out * z0 * mc.c0 * (p.s - 2 * p.delta));
  return r;
}

CheckReport check_quadruple(const ModelConstants& mc, const QuadrupleParams& p) {
  const double k0 = mc.kappa0;
  const double z0 = mc.zeta0;
  const double a0 = p.alpha0;
  const double ai = p.alpha_int;
  const double an = p.alpha_out;
  const double D = p.D;
  const double l = p.l;
  const double dl = p.delta_aux;
  if (!(an > 0) || !(an < ai) || !(ai < a0))
    throw std::invalid_argument("check_quadruple: need 0 < alpha_out < alpha_int < alpha0");
  if (!(D >= 0) || !(dl >= 0) || !(p.epsilon >= 0) || !(l > 0))
    throw std::invalid_argument("check_quadruple: D, delta_aux, epsilon must be >= 0 and l > 0");

  CheckReport r;
  r.degenerate = D == 0 || dl == 0;
  auto& c = r.conditions;
  c.push_back(make_condition("1: c1 (2l + c2) <= k", p.c1 * (2 * l + p.c2), static_cast<double>(p.k)));

  // 1 <= 6 sinh(x)^2 is asinh(1/sqrt 6) <= |x|; the midpoint estimate is vacuous for D = 0.
  if (D == 0) {
    c.push_back(make_condition("2a: 1 <= 6 sinh(alpha_int (2l - 2D))^2", 0.0, 0.0));
  } else {
    c.push_back(make_condition("2a: 1 <= 6 sinh(alpha_int (2l - 2D))^2", std::asinh(1 / std::sqrt(6.0)),
                               std::abs(ai * (2 * l - 2 * D))));
  }
  const LogScalar ratio_term = guarded_ratio(D, ai * z0 * l);
  c.push_back(make_condition("2b: D/(alpha_int zeta0 l) <= zeta0^2/kappa0^2", ratio_term, L(mc.antipodal_threshold)));
  const LogScalar proj = D == 0 ? LogScalar::zero() : L(5 * D) * LogScalar::from_ln(2 * k0 * D - a0 * l);
  c.push_back(make_condition("2c: 5D e^{2 kappa0 D - alpha0 l} <= delta_aux", proj, L(dl)));
  c.push_back(make_condition("3: s <= (2 alpha_int/kappa0)(l - delta_aux - D)", p.s, 2 * ai / k0 * (l - dl - D)));
  c.push_back(make_condition("4a: (alpha0 delta_aux + 3 alpha0 D + 2 kappa0 D)/(l - delta_aux - 2D) <= alpha0 - alpha_int",
                             guarded_ratio(a0 * dl + 3 * a0 * D + 2 * k0 * D, l - dl - 2 * D), L(a0 - ai)));
  const double rot_den = 2 * ai * (l - dl - D) - 2 * k0 * dl;
  c.push_back(make_condition(
      "4b: 2 kappa0 delta_aux (alpha_int + kappa0)/(2 alpha_int (l - delta_aux - D) - 2 kappa0 delta_aux) <= alpha_int - alpha_out",
      guarded_ratio(2 * k0 * dl * (ai + k0), rot_den), L(ai - an)));

  LogScalar sum = ratio_term;
  sum += guarded_ratio(k0 * dl, (2 * ai * (l - dl - D) - dl * k0) * an * z0);
  sum += guarded_ratio(dl, 2 * ai * z0 * (l - D));
  sum += guarded_ratio(dl, 2 * an * z0 * (l - dl));
  sum += L(2 * k0 * dl);
  c.push_back(make_condition("5: straightness sum <= eps/pi", sum, L(p.epsilon / std::numbers::pi)));
  r.derived.emplace_back("straightness_sum", sum.to_double());
  r.derived.emplace_back("straightness_budget", p.epsilon / std::numbers::pi);
  return r;
}

const char* policy_name(AuxPolicy policy) { return policy == AuxPolicy::Paper52 ? "paper-5.2" : "default"; }

AuxPolicy parse_policy(const std::string& name) {
  if (name == "default") return AuxPolicy::Default;
  if (name == "paper-5.2") return AuxPolicy::Paper52;
  throw std::invalid_argument("unknown auxiliary policy '" + name + "' (expected default or paper-5.2)");
}

GlobalParams global_params(std::int64_t k, double s, double delta, double alpha_out, const ModelConstants& mc,
                           const MorseQIParams& morse) {
  if (k < 1 || !(s > 2 * delta) || !(delta >= 0) || !(alpha_out > 0))
    throw std::invalid_argument("global_params: need k >= 1, alpha_out > 0 and s > 2 delta >= 0");
  const double kd = static_cast<double>(k);
  const double spacing = 2 * alpha_out * mc.zeta0 * mc.c0 * (s - 2 * delta);
  GlobalParams g;
  g.D_prime = morse.c3 * kd + 1.5 * morse.c4 + delta;
  g.c1_prime = kd / spacing;
  g.c2_prime = spacing + 2 * delta + 2 * morse.c3 * kd + 3 * morse.c4;
  g.c3_prime = morse.c3 + morse.c4 / (3 * kd);
  g.c4_prime = morse.c4;
  return g;
}

namespace {

/// Smallest grid value x > lo0 with ok(x), assuming monotone feasibility.
/// Throws InfeasibleError if ok fails at the cap.
double monotone_search(double lo0, double granularity, double cap, const std::function<bool(double)>& ok,
                       const std::function<std::string(double)>& blocker, const std::string& stage) {
  double excess = 1.0;
  double hi = lo0 + excess;
  double lo = lo0;
  while (!ok(hi)) {
    lo = hi;
    if (hi >= cap) throw InfeasibleError(stage, blocker(cap));
    excess *= 2;
    hi = std::min(cap, lo0 + excess);
  }
  while (hi - lo > granularity / 8) {
    const double mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  double x = std::ceil(hi / granularity) * granularity;
  while (!(x > lo0) || !ok(x)) x += granularity;  // guards against rounding at the grid boundary
  return x;
}

std::string first_failure_name(const CheckReport& r) {
  const Condition* f = first_failure(r.conditions);
  return f ? f->name : std::string("none");
}

}  // namespace

L2GSolution solve_local_scale(const ModelConstants& mc, const MorseQIParams& morse, double alpha_out,
                              const SearchPolicy& policy) {
  morse.validate();
  if (!(alpha_out > 0) || !(alpha_out < morse.alpha0))
    throw std::invalid_argument("solve_local_scale: need 0 < alpha_out < alpha0 (empty regularity chain)");

  L2GSolution sol;
  sol.policy = policy_name(policy.aux);
  sol.alpha0 = morse.alpha0;
  sol.alpha_out = alpha_out;
  sol.alpha_mid = 0.5 * morse.alpha0 + 0.5 * alpha_out;
  sol.alpha_int = 0.8 * morse.alpha0 + 0.2 * sol.alpha_mid;
  const double k0 = mc.kappa0;
  const double z0 = mc.zeta0;
  sol.epsilon = z0 * z0 / (10 * k0 * k0);
  sol.delta = z0 / (2 * k0 * k0);
  sol.delta_aux = sol.epsilon / (20 * std::numbers::pi * k0);

  StraightSpacedParams sp;
  if (policy.aux == AuxPolicy::Paper52) {
    sp.alpha_in = morse.alpha0;
    sp.alpha_out = sol.alpha_mid;
  } else {
    sp.alpha_in = sol.alpha_mid;
    sp.alpha_out = alpha_out;
  }
  sp.delta = sol.delta;
  sp.epsilon = sol.epsilon;
  auto straight_at = [&](double s) {
    StraightSpacedParams q = sp;
    q.s = s;
    return check_straight_spaced(mc, q);
  };
  sol.s = monotone_search(
      2 * sol.delta, policy.s_granularity, policy.cap, [&](double s) { return straight_at(s).pass(); },
      [&](double s) { return first_failure_name(straight_at(s)); }, "straight-and-spaced");
  sp.s = sol.s;

  QuadrupleParams qp;
  qp.alpha0 = morse.alpha0;
  qp.alpha_int = sol.alpha_int;
  qp.alpha_out = sol.alpha_mid;
  qp.D = morse.D;
  qp.epsilon = sol.epsilon;
  qp.c1 = morse.c1;
  qp.c2 = morse.c2;
  qp.s = sol.s;
  qp.delta_aux = sol.delta_aux;
  auto k_for = [&](double l) { return static_cast<std::int64_t>(std::ceil(morse.c1 * (2 * l + morse.c2))); };
  auto quad_at = [&](double l) {
    QuadrupleParams q = qp;
    q.l = l;
    q.k = k_for(l);
    return check_quadruple(mc, q);
  };
  sol.l = monotone_search(
      sol.delta_aux + 2 * morse.D, policy.l_granularity, policy.cap, [&](double l) { return quad_at(l).pass(); },
      [&](double l) { return first_failure_name(quad_at(l)); }, "midpoint-sequence");
  qp.l = sol.l;
  qp.k = k_for(sol.l);

  sol.k = qp.k;
  sol.L = 3 * sol.k;
  sol.straight_params = sp;
  sol.quadruple_params = qp;
  sol.straight = check_straight_spaced(mc, sp);
  sol.quadruple = check_quadruple(mc, qp);
  if (!sol.straight.pass() || !sol.quadruple.pass())
    throw std::logic_error("solve_local_scale: returned parameters fail re-verification");
  sol.global = global_params(sol.k, sol.s, sol.delta, alpha_out, mc, morse);
  return sol;
}

}  // namespace anosov
