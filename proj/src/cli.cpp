#include "anosov/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "anosov/groups.hpp"
#include "anosov/json_report.hpp"
#include "anosov/l2g.hpp"
#include "anosov/matrix_io.hpp"
#include "anosov/numeric_policy.hpp"
#include "anosov/perturb.hpp"
#include "anosov/symspace.hpp"

namespace anosov {
namespace {

/// Bad input that is reported with exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Parameter files

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

/// Typed access to a flat JSON object that rejects unknown keys.
class ParamFile {
 public:
  ParamFile(nlohmann::json j, std::string origin) : j_(std::move(j)), origin_(std::move(origin)) {
    if (!j_.is_object()) throw UsageError(origin_ + ": expected a JSON object");
  }

  double number(const std::string& key) {
    used_.insert(key);
    if (!j_.contains(key)) throw UsageError(origin_ + ": missing key '" + key + "'");
    if (!j_[key].is_number()) throw UsageError(origin_ + ": '" + key + "' must be a number");
    return j_[key].get<double>();
  }
  double number_or(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

  std::int64_t integer(const std::string& key) {
    used_.insert(key);
    if (!j_.contains(key) || !j_[key].is_number_integer())
      throw UsageError(origin_ + ": '" + key + "' must be an integer");
    return j_[key].get<std::int64_t>();
  }

  std::string string_or(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    if (!j_.contains(key)) return fallback;
    if (!j_[key].is_string()) throw UsageError(origin_ + ": '" + key + "' must be a string");
    return j_[key].get<std::string>();
  }

  std::vector<int> int_list_or(const std::string& key, std::vector<int> fallback) {
    used_.insert(key);
    if (!j_.contains(key)) return fallback;
    try {
      return j_[key].get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
      throw UsageError(origin_ + ": '" + key + "' must be a list of integers");
    }
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  /// Call after all reads.
  void reject_unknown() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!used_.count(it.key())) throw UsageError(origin_ + ": unknown key '" + it.key() + "'");
  }

  Json echo() const { return Json::parse(j_.dump()); }

 private:
  nlohmann::json j_;
  std::string origin_;
  std::set<std::string> used_;
};

ModelConstants constants_from(ParamFile& f) {
  const int d = static_cast<int>(f.has("d") ? f.integer("d") : 3);
  if (d < 2) throw UsageError("d must be >= 2");
  auto tau = f.int_list_or("tau", sigma_mod(d));
  if (f.has("zeta0")) return model_constants_with_zeta0(d, tau, f.number("zeta0"));
  return model_constants(d, tau);
}

MorseQIParams morse_from(ParamFile& f) {
  MorseQIParams m;
  m.alpha0 = f.number("alpha0");
  m.D = f.number("D");
  m.c1 = f.number("c1");
  m.c2 = f.number("c2");
  m.c3 = f.number("c3");
  m.c4 = f.number("c4");
  m.validate();
  return m;
}

std::vector<int> parse_tau(const std::string& text, int d) {
  if (text.empty()) return sigma_mod(d);
  std::vector<int> tau;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      tau.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--tau: '" + item + "' is not an integer");
    }
  }
  return tau;
}

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["numeric_slack"] = numeric_policy().comparison_slack;
  return j;
}

/// FNV-1a over the canonical text form of the generators; identifies inputs in reports.
std::string generators_digest(const GroupModel& model) {
  std::vector<Eigen::MatrixXd> mats;
  for (const auto& g : model.generators) mats.push_back(g.matrix);
  std::ostringstream text;
  write_matrices(text, mats);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text.str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double max_frobenius(const std::vector<Eigen::MatrixXd>& mats) {
  double a = 0;
  for (const auto& m : mats) a = std::max(a, m.norm());
  return a;
}

// ---------------------------------------------------------------------------
// Certification pipeline

struct CertifyOptions {
  double alpha_out_ratio = 0.95;
  double slack = 0.1;
  double target_disp = 0.1;
  std::string policy = "default";
};

struct Certification {
  Json report;
  int exit_code = kExitPass;
};

/// Relax the base parameters, solve for L, pick the word radius and invert the
/// perturbation estimate. `stage_conditions` carries preset-specific checks.
Certification certify_pipeline(Json report, const ModelConstants& mc, const MorseQIParams& base, Json provenance,
                               double A, const std::string& A_method, std::vector<Condition> preset_conditions,
                               const CertifyOptions& opt) {
  if (!(opt.slack > 0)) throw UsageError("--slack must be positive");
  if (!(opt.target_disp > 0)) throw UsageError("--target-disp must be positive");
  if (!(opt.alpha_out_ratio > 0) || !(opt.alpha_out_ratio < 1)) throw UsageError("--alpha-out-ratio must lie in (0, 1)");
  SearchPolicy search;
  search.aux = parse_policy(opt.policy);
  base.validate();

  report["policy"] = opt.policy;
  report["constants"] = to_json(mc);
  report["base"] = {{"params", to_json(base)}, {"provenance", std::move(provenance)}};

  Json stages = Json::object();
  std::vector<Condition> pipeline = std::move(preset_conditions);
  pipeline.push_back(make_condition("target displacement <= slack", opt.target_disp, opt.slack));

  const MorseQIParams relaxed = local_morse_transfer(base, opt.slack, 1).params;
  report["relaxation"] = {{"slack", opt.slack}, {"params", to_json(relaxed)}};
  const double alpha_out = opt.alpha_out_ratio * base.alpha0;

  L2GSolution sol;
  try {
    sol = solve_local_scale(mc, relaxed, alpha_out, search);
  } catch (const InfeasibleError& e) {
    stages["preset"] = to_json(pipeline);
    report["stages"] = stages;
    report["infeasible"] = {{"stage", e.stage()}, {"blocking_condition", e.condition()}};
    report["verdict"] = "infeasible";
    return {report, kExitFail};
  }
  report["solution"] = to_json(sol);

  const std::int64_t k_w = (sol.L + 1) / 2;
  const LocalMorseTransfer transfer = local_morse_transfer(base, opt.slack, k_w);
  pipeline.push_back(make_condition("L <= 2 k_w", static_cast<double>(sol.L), static_cast<double>(transfer.scale)));
  report["word_radius"] = k_w;
  report["local_scale"] = transfer.scale;
  report["generator_bound"] = {{"method", A_method}, {"A", A}};

  const LogScalar eps = neighborhood_radius(mc.d, A, k_w, opt.target_disp);
  const BoundResult check = orbit_displacement_bound({mc.d, A, k_w, eps, opt.target_disp});
  std::vector<Condition> perturbation = check.preconditions;
  perturbation.push_back(make_condition("orbit displacement <= target", check.value, LogScalar::from_double(opt.target_disp)));
  report["radius"] = {{"epsilon", eps.to_string()},
                      {"log10_epsilon", eps.log10_abs()},
                      {"epsilon_power_of_ten", radius_power_of_ten(eps)},
                      {"orbit_displacement", log_scalar_json(check.value)}};

  stages["preset"] = to_json(pipeline);
  stages["straight_spaced"] = to_json(sol.straight.conditions);
  stages["quadruple"] = to_json(sol.quadruple.conditions);
  stages["perturbation"] = to_json(perturbation);
  report["stages"] = stages;

  const bool ok = all_pass(pipeline) && sol.straight.pass() && sol.quadruple.pass() && all_pass(perturbation);
  report["verdict"] = ok ? "certified" : "infeasible";
  return {report, ok ? kExitPass : kExitFail};
}

Certification certify_free(double T, const CertifyOptions& opt) {
  const FreeGroupConstants fc = free_group_constants(T);
  const GroupModel model = free_group_generators(T);
  const ModelConstants mc = model_constants(3, sigma_mod(3));

  Json report = envelope("certify");
  report["model"] = "free";
  report["inputs"] = {{"tanh_t", T},
                      {"alpha_out_ratio", opt.alpha_out_ratio},
                      {"slack", opt.slack},
                      {"target_disp", opt.target_disp},
                      {"generators_digest", generators_digest(model)}};
  report["free_group"] = {{"t", fc.t}, {"c1_inv", fc.c1_inv}, {"c3", fc.c3}, {"R", fc.R}};

  MorseQIParams base;
  base.alpha0 = mc.zeta0;
  base.D = fc.R;
  base.c1 = std::max(1.0, 1 / fc.c1_inv);
  base.c2 = 0;
  base.c3 = fc.c3;
  base.c4 = 0;
  Json provenance = {{"alpha0", "zeta0: orbit segments lie in a totally geodesic hyperbolic plane"},
                     {"D", "Morse constant R of the orbit map"},
                     {"c1", "max(1, 1/c1_inv)"},
                     {"c2", "0"},
                     {"c3", "generator displacement 2 sqrt(3) t"},
                     {"c4", "0"}};
  std::vector<Eigen::MatrixXd> mats;
  for (const auto& g : model.generators) mats.push_back(g.matrix);
  return certify_pipeline(std::move(report), mc, base, std::move(provenance), max_frobenius(mats), "direct", {}, opt);
}

struct SurfaceOptions {
  double delta_hyp = 0.6376;
  double qi_radius = 9.5;
  std::string generator_bound = "lemma";
  int depth_cap = 12;
};

Certification certify_surface(const SurfaceOptions& so, const CertifyOptions& opt) {
  if (so.generator_bound != "lemma" && so.generator_bound != "direct")
    throw UsageError("--generator-bound must be 'lemma' or 'direct'");
  const GroupModel model = surface_group_model();
  const ModelConstants mc = model_constants(3, sigma_mod(3));
  const double R = surface_covering_radius();
  const QIConstants ms = milnor_schwarz_constants(R);

  Json report = envelope("certify");
  report["model"] = "surface";
  report["inputs"] = {{"alpha_out_ratio", opt.alpha_out_ratio},
                      {"slack", opt.slack},
                      {"target_disp", opt.target_disp},
                      {"delta_hyp", so.delta_hyp},
                      {"qi_radius", so.qi_radius},
                      {"generator_bound", so.generator_bound},
                      {"depth_cap", so.depth_cap},
                      {"generators_digest", generators_digest(model)}};

  const BallResult ball = ball_generating_set(model, so.qi_radius, so.depth_cap);
  double max_disp = 0;
  std::vector<Eigen::MatrixXd> mats;
  for (const auto& e : ball.elements) {
    max_disp = std::max(max_disp, e.displacement);
    mats.push_back(e.matrix);
  }
  report["generating_set"] = {{"size", ball.elements.size()},
                              {"layers", ball.depth},
                              {"complete", ball.complete},
                              {"max_displacement", max_disp},
                              {"covering_radius", R},
                              {"two_R_plus_1", ms.c3}};
  if (!ball.complete) {
    report["verdict"] = "incomplete";
    return {report, kExitFail};
  }

  std::vector<Condition> preset;
  preset.push_back(make_condition("2R+1 <= generating radius", ms.c3, so.qi_radius));

  const ClassicalMorse cm = classical_morse_constants({so.delta_hyp, so.qi_radius, 1.0, 1.0});
  report["classical_morse"] = {{"delta_hyp", so.delta_hyp},
                               {"delta_hyp_note", "back-solved regression value, not taken from a published source"},
                               {"M", so.qi_radius},
                               {"l", 1.0},
                               {"a", 1.0},
                               {"D0", cm.D0},
                               {"R", cm.R}};

  MorseQIParams base;
  base.alpha0 = mc.zeta0;
  base.D = cm.R;
  base.c1 = ms.c1;
  base.c2 = ms.c2;
  base.c3 = so.qi_radius;
  base.c4 = ms.c4;
  Json provenance = {{"alpha0", "zeta0: orbit segments lie in a totally geodesic hyperbolic plane"},
                     {"D", "classical Morse lemma constant"},
                     {"c1", "Milnor-Schwarz"},
                     {"c2", "Milnor-Schwarz"},
                     {"c3", "radius of the ball generating set"},
                     {"c4", "Milnor-Schwarz"}};

  double A = 0;
  if (so.generator_bound == "lemma") {
    preset.push_back(make_condition("max generator displacement <= 2R+1", max_disp, ms.c3));
    A = generator_frob_bound(mc.d, ms.c3);
  } else {
    A = max_frobenius(mats);
  }
  return certify_pipeline(std::move(report), mc, base, std::move(provenance), A, so.generator_bound, std::move(preset),
                          opt);
}

Certification certify_custom(const std::string& generators_path, const std::string& params_path,
                             const CertifyOptions& opt) {
  ParamFile f(read_json_file(params_path), params_path);
  const ModelConstants mc = constants_from(f);
  const MorseQIParams base = morse_from(f);
  f.reject_unknown();
  const auto mats = read_matrix_file(generators_path);
  const GroupModel model = make_group_model("custom", mats);
  if (model.dim() != mc.d) throw UsageError("generator dimension differs from d in the parameter file");

  Json report = envelope("certify");
  report["model"] = "custom";
  report["inputs"] = {{"generators", generators_path},
                      {"params", f.echo()},
                      {"alpha_out_ratio", opt.alpha_out_ratio},
                      {"slack", opt.slack},
                      {"target_disp", opt.target_disp},
                      {"generators_digest", generators_digest(model)}};
  std::vector<Eigen::MatrixXd> all;
  for (const auto& g : model.generators) all.push_back(g.matrix);
  Json provenance = {{"all", "user supplied"}};
  return certify_pipeline(std::move(report), mc, base, std::move(provenance), max_frobenius(all), "direct", {}, opt);
}

// ---------------------------------------------------------------------------
// Other subcommands

int cmd_constants(int d, const std::string& tau_text, double zeta0, std::ostream& out) {
  if (d < 2) throw UsageError("--d must be >= 2");
  const auto tau = parse_tau(tau_text, d);
  const ModelConstants mc = std::isnan(zeta0) ? model_constants(d, tau) : model_constants_with_zeta0(d, tau, zeta0);
  Json j = envelope("constants");
  j["constants"] = to_json(mc);
  out << dump_json(j);
  return kExitPass;
}

int cmd_check(const std::string& which, const std::string& path, std::ostream& out) {
  ParamFile f(read_json_file(path), path);
  const ModelConstants mc = constants_from(f);
  Json j = envelope("check " + which);
  CheckReport r;
  if (which == "straight") {
    StraightSpacedParams p;
    p.alpha_in = f.number("alpha_in");
    p.alpha_out = f.number("alpha_out");
    p.delta = f.number("delta");
    p.epsilon = f.number("epsilon");
    p.s = f.number("s");
    f.reject_unknown();
    r = check_straight_spaced(mc, p);
    j["inputs"] = to_json(p);
  } else {
    QuadrupleParams p;
    p.alpha0 = f.number("alpha0");
    p.alpha_int = f.number("alpha_int");
    p.alpha_out = f.number("alpha_out");
    p.D = f.number("D");
    p.epsilon = f.number("epsilon");
    p.c1 = f.number("c1");
    p.c2 = f.number("c2");
    p.s = f.number("s");
    p.l = f.number("l");
    p.delta_aux = f.number("delta_aux");
    p.k = f.integer("k");
    f.reject_unknown();
    r = check_quadruple(mc, p);
    j["inputs"] = to_json(p);
  }
  j["constants"] = to_json(mc);
  j["report"] = to_json(r);
  out << dump_json(j);
  return r.pass() ? kExitPass : kExitFail;
}

int cmd_solve(const std::string& path, const std::string& policy_flag, std::ostream& out) {
  ParamFile f(read_json_file(path), path);
  const ModelConstants mc = constants_from(f);
  const MorseQIParams morse = morse_from(f);
  double alpha_out = 0;
  if (f.has("alpha_out")) {
    alpha_out = f.number("alpha_out");
  } else {
    alpha_out = f.number("alpha_out_ratio") * morse.alpha0;
  }
  const std::string policy = policy_flag.empty() ? f.string_or("policy", "default") : policy_flag;
  f.reject_unknown();
  SearchPolicy search;
  search.aux = parse_policy(policy);

  Json j = envelope("solve");
  j["policy"] = policy;
  j["inputs"] = {{"morse", to_json(morse)}, {"alpha_out", alpha_out}};
  j["constants"] = to_json(mc);
  try {
    const L2GSolution sol = solve_local_scale(mc, morse, alpha_out, search);
    j["solution"] = to_json(sol);
    j["verdict"] = "feasible";
    out << dump_json(j);
    return kExitPass;
  } catch (const InfeasibleError& e) {
    j["infeasible"] = {{"stage", e.stage()}, {"blocking_condition", e.condition()}};
    j["verdict"] = "infeasible";
    out << dump_json(j);
    return kExitFail;
  }
}

struct VerifyOptions {
  std::string generators;
  std::string preset;
  double tanh_t = 0.75;
  bool free = false;
  int max_len = 4;
  double alpha0 = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> qi;
  double spacing = 0;
  double epsilon = std::numeric_limits<double>::quiet_NaN();
  std::string tau;
};

int cmd_verify_local(const VerifyOptions& vo, std::ostream& out) {
  GroupModel model;
  if (!vo.preset.empty()) {
    if (!vo.generators.empty()) throw UsageError("give either --preset or --generators, not both");
    if (vo.preset == "free") {
      model = free_group_generators(vo.tanh_t);
    } else if (vo.preset == "surface") {
      model = surface_group_model();
    } else {
      throw UsageError("--preset must be 'free' or 'surface'");
    }
  } else {
    if (vo.generators.empty()) throw UsageError("--generators or --preset is required");
    model = make_group_model("custom", read_matrix_file(vo.generators), vo.free);
  }
  const int d = model.dim();
  const ModelConstants mc = model_constants(d, parse_tau(vo.tau, d));
  if (vo.qi.size() != 4) throw UsageError("--qi expects c1,c2,c3,c4");
  MorseQIParams target;
  target.alpha0 = std::isnan(vo.alpha0) ? mc.zeta0 : vo.alpha0;
  target.c1 = vo.qi[0];
  target.c2 = vo.qi[1];
  target.c3 = vo.qi[2];
  target.c4 = vo.qi[3];
  // Only a sandwich to test here, so c1 < 1 (a lower slope above one) is allowed.
  if (!(target.alpha0 > 0) || !(target.c1 > 0) || !(target.c3 > 0) || !(target.c2 >= 0) || !(target.c4 >= 0))
    throw UsageError("--qi needs c1, c3 > 0 and c2, c4 >= 0; alpha0 must be positive");
  StraightSpacedParams straight;
  straight.s = vo.spacing;
  straight.epsilon = std::isnan(vo.epsilon) ? mc.zeta0 * mc.zeta0 / (10 * mc.kappa0 * mc.kappa0) : vo.epsilon;
  if (vo.max_len < 0) throw UsageError("--max-len must be >= 0");

  const VerifyReport rep = local_morse_verify(model, mc, target, straight, vo.max_len);
  Json j = envelope("verify-local");
  j["model"] = model.name;
  j["inputs"] = {{"generators_digest", generators_digest(model)},
                 {"free", model.free},
                 {"max_len", vo.max_len},
                 {"alpha0", target.alpha0},
                 {"qi", vo.qi},
                 {"spacing", straight.s},
                 {"epsilon", straight.epsilon}};
  j["constants"] = to_json(mc);
  j["report"] = to_json(rep);
  out << dump_json(j);
  return rep.verdict() ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify the Anosov property of matrix groups via the local-to-global principle", "anosov-cert"};
  app.require_subcommand(1);

  auto* constants = app.add_subcommand("constants", "Model constants kappa0, zeta0, c0 for SL(d,R)");
  int d = 3;
  std::string tau;
  double zeta0 = std::numeric_limits<double>::quiet_NaN();
  constants->add_option("--d", d, "Matrix size")->capture_default_str();
  constants->add_option("--tau", tau, "Comma-separated simple roots of the face (default: all)");
  constants->add_option("--zeta0", zeta0, "Override zeta0");

  auto* check = app.add_subcommand("check", "Evaluate one criterion on a JSON parameter file");
  check->require_subcommand(1);
  std::string check_file;
  auto* straight = check->add_subcommand("straight", "Straight-and-spaced sequence criterion");
  auto* quadruple = check->add_subcommand("quadruple", "Midpoint-sequence criterion");
  for (auto* sub : {straight, quadruple})
    sub->add_option("--file", check_file, "JSON parameter file")->required();

  auto* solve = app.add_subcommand("solve", "Solve for the local-to-global scale L");
  std::string solve_file;
  std::string policy;
  solve->add_option("--file", solve_file, "JSON file with d, alpha0, D, c1..c4 and alpha_out")->required();
  solve->add_option("--policy", policy, "Auxiliary parameter policy: default or paper-5.2");

  auto* certify = app.add_subcommand("certify", "End-to-end perturbation neighborhood");
  certify->require_subcommand(1);
  CertifyOptions co;
  SurfaceOptions so;
  double tanh_t = 0.75;
  std::string gen_file;
  std::string params_file;
  auto* cfree = certify->add_subcommand("free", "Free group generated by g, h with tanh t = T");
  auto* csurface = certify->add_subcommand("surface", "Genus-two surface group");
  auto* ccustom = certify->add_subcommand("custom", "User generators and base Morse parameters");
  cfree->add_option("--tanh-t", tanh_t, "T = tanh t")->capture_default_str();
  ccustom->add_option("--generators", gen_file, "Generator file (matrix text format)")->required();
  ccustom->add_option("--params", params_file, "JSON with alpha0, D, c1..c4 (and optionally d, tau)")->required();
  csurface->add_option("--delta-hyp", so.delta_hyp, "Hyperbolicity constant for the classical Morse lemma")
      ->capture_default_str();
  csurface->add_option("--qi-radius", so.qi_radius, "Radius of the ball generating set")->capture_default_str();
  csurface->add_option("--generator-bound", so.generator_bound, "lemma or direct")->capture_default_str();
  csurface->add_option("--depth-cap", so.depth_cap, "Breadth-first depth cap")->capture_default_str();
  for (auto* sub : {cfree, csurface, ccustom}) {
    sub->add_option("--alpha-out-ratio", co.alpha_out_ratio, "alpha_out / alpha0");
    sub->add_option("--slack", co.slack, "Relaxation of D, c2, c4");
    sub->add_option("--target-disp", co.target_disp, "Allowed orbit displacement");
    sub->add_option("--policy", co.policy, "Auxiliary parameter policy")->capture_default_str();
  }

  auto* verify = app.add_subcommand("verify-local", "Desk-scale check of orbit segments of short words");
  VerifyOptions vo;
  verify->add_option("--generators", vo.generators, "Generator file (matrix text format)");
  verify->add_option("--preset", vo.preset, "free or surface instead of a file");
  verify->add_option("--tanh-t", vo.tanh_t, "T for the free preset")->capture_default_str();
  verify->add_flag("--free", vo.free, "Generators are free: enumerate reduced words");
  verify->add_option("--max-len", vo.max_len, "Maximal word length")->capture_default_str();
  verify->add_option("--alpha0", vo.alpha0, "Required regularity (default zeta0)");
  verify->add_option("--qi", vo.qi, "c1,c2,c3,c4")->delimiter(',')->required();
  verify->add_option("--spacing", vo.spacing, "Spacing s")->capture_default_str();
  verify->add_option("--epsilon", vo.epsilon, "Straightness tolerance (default zeta0^2/(10 kappa0^2))");
  verify->add_option("--tau", vo.tau, "Comma-separated simple roots (default: all)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  // Presets use defaults matching their published setups unless overridden.
  if (csurface->parsed()) {
    if (csurface->count("--alpha-out-ratio") == 0) co.alpha_out_ratio = 0.5;
    if (csurface->count("--slack") == 0) co.slack = 10;
    if (csurface->count("--target-disp") == 0) co.target_disp = 10;
  }

  try {
    (void)numeric_policy();  // surfaces a malformed environment override as a usage error
    if (constants->parsed()) return cmd_constants(d, tau, zeta0, out);
    if (straight->parsed()) return cmd_check("straight", check_file, out);
    if (quadruple->parsed()) return cmd_check("quadruple", check_file, out);
    if (solve->parsed()) return cmd_solve(solve_file, policy, out);
    if (verify->parsed()) return cmd_verify_local(vo, out);
    Certification c;
    if (cfree->parsed()) c = certify_free(tanh_t, co);
    if (csurface->parsed()) c = certify_surface(so, co);
    if (ccustom->parsed()) c = certify_custom(gen_file, params_file, co);
    out << dump_json(c.report);
    return c.exit_code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace anosov
