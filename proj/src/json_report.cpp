#include "anosov/json_report.hpp"

#include <cmath>
#include <cstdio>

namespace anosov {
namespace {

void write_float(std::string& out, double v) {
  if (std::isnan(v)) {
    out += "\"nan\"";
  } else if (std::isinf(v)) {
    out += v > 0 ? "\"inf\"" : "\"-inf\"";
  } else {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
  }
}

void write(std::string& out, const Json& j, int indent, int level) {
  const auto newline = [&](int lvl) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * lvl), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(level + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(out, it.value(), indent, level + 1);
      }
      newline(level);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(level + 1);
        write(out, v, indent, level + 1);
      }
      newline(level);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      write_float(out, j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  out += '\n';
  return out;
}

Json log_scalar_json(const LogScalar& x) {
  Json j;
  j["value"] = x.to_double();
  j["log10_abs"] = x.log10_abs();
  j["sign"] = x.sign();
  return j;
}

Json to_json(const Condition& c) {
  Json j;
  j["name"] = c.name;
  j["relation"] = c.relation == Relation::Less ? "<" : "<=";
  j["lhs"] = c.lhs.to_double();
  j["rhs"] = c.rhs.to_double();
  j["lhs_log10"] = c.lhs.log10_abs();
  j["rhs_log10"] = c.rhs.log10_abs();
  j["margin"] = c.margin;
  j["pass"] = c.pass;
  return j;
}

Json to_json(const std::vector<Condition>& conditions) {
  Json arr = Json::array();
  for (const auto& c : conditions) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["pass"] = r.pass();
  j["degenerate"] = r.degenerate;
  j["conditions"] = to_json(r.conditions);
  Json derived = Json::object();
  for (const auto& [name, value] : r.derived) derived[name] = value;
  j["derived"] = derived;
  return j;
}

Json to_json(const ModelConstants& mc) {
  Json j;
  j["d"] = mc.d;
  j["tau_mod"] = mc.tau_mod;
  j["kappa0"] = mc.kappa0;
  j["zeta0"] = mc.zeta0;
  j["c0"] = mc.c0;
  j["antipodal_threshold"] = mc.antipodal_threshold;
  j["zeta_profile"] = std::vector<double>(mc.zeta_profile.data(), mc.zeta_profile.data() + mc.zeta_profile.size());
  return j;
}

Json to_json(const MorseQIParams& p) {
  Json j;
  j["alpha0"] = p.alpha0;
  j["D"] = p.D;
  j["c1"] = p.c1;
  j["c2"] = p.c2;
  j["c3"] = p.c3;
  j["c4"] = p.c4;
  return j;
}

Json to_json(const StraightSpacedParams& p) {
  Json j;
  j["alpha_in"] = p.alpha_in;
  j["alpha_out"] = p.alpha_out;
  j["delta"] = p.delta;
  j["epsilon"] = p.epsilon;
  j["s"] = p.s;
  return j;
}

Json to_json(const QuadrupleParams& p) {
  Json j;
  j["alpha0"] = p.alpha0;
  j["alpha_int"] = p.alpha_int;
  j["alpha_out"] = p.alpha_out;
  j["D"] = p.D;
  j["epsilon"] = p.epsilon;
  j["c1"] = p.c1;
  j["c2"] = p.c2;
  j["s"] = p.s;
  j["l"] = p.l;
  j["delta_aux"] = p.delta_aux;
  j["k"] = p.k;
  return j;
}

Json to_json(const GlobalParams& g) {
  Json j;
  j["D_prime"] = g.D_prime;
  j["c1_prime"] = g.c1_prime;
  j["c2_prime"] = g.c2_prime;
  j["c3_prime"] = g.c3_prime;
  j["c4_prime"] = g.c4_prime;
  return j;
}

Json to_json(const L2GSolution& s) {
  Json j;
  j["policy"] = s.policy;
  j["alpha0"] = s.alpha0;
  j["alpha_mid"] = s.alpha_mid;
  j["alpha_int"] = s.alpha_int;
  j["alpha_out"] = s.alpha_out;
  j["epsilon"] = s.epsilon;
  j["delta"] = s.delta;
  j["delta_aux"] = s.delta_aux;
  j["s"] = s.s;
  j["l"] = s.l;
  j["k"] = s.k;
  j["L"] = s.L;
  j["global"] = to_json(s.global);
  j["straight_spaced"] = {{"params", to_json(s.straight_params)}, {"report", to_json(s.straight)}};
  j["quadruple"] = {{"params", to_json(s.quadruple_params)}, {"report", to_json(s.quadruple)}};
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["verdict"] = r.verdict() ? "pass" : "fail";
  j["max_len"] = r.max_len;
  j["words"] = r.words;
  j["segments"] = r.segments;
  j["quasi_isometry"] = {{"pass", r.qi_pass},
                         {"worst_lower_margin", r.qi_lower_margin},
                         {"worst_upper_margin", r.qi_upper_margin},
                         {"witness", r.qi_witness}};
  j["regularity"] = {{"pass", r.regularity_pass},
                     {"tested_segments", r.regular_segments},
                     {"min_tested_margin", r.min_tested_margin},
                     {"min_margin", r.min_margin},
                     {"max_margin", r.max_margin},
                     {"witness", r.regularity_witness}};
  j["straightness"] = {{"pass", r.straightness_pass},
                       {"in_verdict", false},
                       {"triples", r.angle_triples},
                       {"min_zeta_angle", r.min_zeta_angle},
                       {"threshold", r.angle_threshold},
                       {"witness", r.straightness_witness}};
  return j;
}

}  // namespace anosov
