#include "anosov/groups.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace anosov {
namespace {

constexpr std::int64_t kSegmentGuard = 10'000'000;

Eigen::Matrix3d rotation13(double theta) {
  Eigen::Matrix3d r;
  r << std::cos(theta), 0, std::sin(theta), 0, 1, 0, -std::sin(theta), 0, std::cos(theta);
  return r;
}

bool single_char_labels(const GroupModel& model) {
  for (const auto& g : model.generators)
    if (g.label.size() != 1) return false;
  return true;
}

std::string render_word(const GroupModel& model, const std::vector<int>& gens) {
  const bool compact = single_char_labels(model);
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!compact && i) out += ' ';
    out += model.generators[gens[i]].label;
  }
  return out.empty() ? std::string("e") : out;
}

/// Enumeration tree of words; every prefix of a node's word is an ancestor.
struct WordTree {
  struct Node {
    int parent = -1;
    int gen = -1;
    int depth = 0;
    Eigen::MatrixXd m;
    Eigen::MatrixXd m_inv;
  };
  std::vector<Node> nodes;

  std::vector<int> word(int idx) const {
    std::vector<int> w;
    for (int i = idx; i > 0; i = nodes[i].parent) w.push_back(nodes[i].gen);
    return {w.rbegin(), w.rend()};
  }
};

/// Expands one breadth-first layer. Free models extend by reduced words; others dedup by key.
std::vector<int> expand_layer(const GroupModel& model, WordTree& tree, const std::vector<int>& frontier,
                              std::map<std::vector<double>, int>& seen) {
  std::vector<int> next;
  for (int idx : frontier) {
    for (int g = 0; g < static_cast<int>(model.generators.size()); ++g) {
      const auto& parent = tree.nodes[idx];
      if (model.free && parent.gen >= 0 && model.generators[parent.gen].inverse == g) continue;
      WordTree::Node child;
      child.parent = idx;
      child.gen = g;
      child.depth = parent.depth + 1;
      child.m = parent.m * model.generators[g].matrix;
      child.m_inv = model.generators[model.generators[g].inverse].matrix * parent.m_inv;
      if (!model.free) {
        auto [it, inserted] = seen.emplace(element_key(child.m), static_cast<int>(tree.nodes.size()));
        if (!inserted) continue;
      }
      next.push_back(static_cast<int>(tree.nodes.size()));
      tree.nodes.push_back(std::move(child));
    }
  }
  return next;
}

WordTree root_tree(const GroupModel& model, std::map<std::vector<double>, int>& seen) {
  WordTree tree;
  WordTree::Node root;
  root.m = Eigen::MatrixXd::Identity(model.dim(), model.dim());
  root.m_inv = root.m;
  seen.emplace(element_key(root.m), 0);
  tree.nodes.push_back(std::move(root));
  return tree;
}

}  // namespace

std::vector<double> element_key(const Eigen::MatrixXd& m) {
  std::vector<double> key(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i) key[i] = std::round(m.data()[i] * 1e9) / 1e9 + 0.0;
  for (double v : key) {
    if (v == 0) continue;
    if (v < 0)
      for (double& x : key) x = -x + 0.0;
    break;
  }
  return key;
}

GroupModel make_group_model(std::string name, const std::vector<Eigen::MatrixXd>& matrices, bool free,
                            std::vector<std::string> labels) {
  if (matrices.empty()) throw std::invalid_argument("group model needs at least one generator");
  if (!labels.empty() && labels.size() != matrices.size())
    throw std::invalid_argument("group model: one label per generator expected");
  GroupModel model;
  model.name = std::move(name);
  model.free = free;
  const auto d = matrices.front().rows();
  const auto identity_key = element_key(Eigen::MatrixXd::Identity(d, d));
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (matrices[i].rows() != d) throw std::invalid_argument("group model: generators of different sizes");
    GroupElementd checked(matrices[i]);  // validates shape, finiteness and determinant
    if (element_key(matrices[i]) == identity_key) throw std::invalid_argument("group model: identity is not a generator");
    model.generators.push_back({labels.empty() ? "s" + std::to_string(i + 1) : labels[i], matrices[i], -1});
  }
  const std::size_t given = model.generators.size();
  for (std::size_t i = 0; i < given; ++i) {
    if (model.generators[i].inverse >= 0) continue;
    const Eigen::MatrixXd inv = model.generators[i].matrix.inverse();
    const auto key = element_key(inv);
    int found = -1;
    for (std::size_t j = 0; j < model.generators.size(); ++j)
      if (element_key(model.generators[j].matrix) == key) found = static_cast<int>(j);
    if (found < 0) {
      found = static_cast<int>(model.generators.size());
      model.generators.push_back({model.generators[i].label + "^-1", inv, static_cast<int>(i)});
    }
    model.generators[i].inverse = found;
    model.generators[found].inverse = static_cast<int>(i);
  }
  return model;
}

FreeGroupConstants free_group_constants(double T) {
  if (!(std::sqrt(2.0) * T > 1) || !(T < 1))
    throw std::invalid_argument("free_group_constants: need 1/sqrt(2) < T < 1 (cocompactness)");
  FreeGroupConstants c;
  c.t = std::atanh(T);
  const double T2 = T * T;
  const double r = std::sqrt(2 * T2 - 1);
  const double middle = 0.5 * std::log((T2 + r) / (T2 - r));
  const double q = 2 * T * std::sqrt(1 - T2);
  const double third = 0.5 * std::log((1 + q) / (1 - q));
  c.c1_inv = std::sqrt(3.0) * std::min({c.t, middle, third});
  c.c3 = 2 * std::sqrt(3.0) * c.t;
  c.R = std::sqrt(3.0) * std::atanh(std::sqrt(1 / T2 - 2 + 2 * T2));
  return c;
}

GroupModel free_group_generators(double T) {
  const double t = free_group_constants(T).t;
  const double c = std::cosh(t), s = std::sinh(t);
  Eigen::MatrixXd g = Eigen::Vector3d(std::exp(t), 1, std::exp(-t)).asDiagonal();
  Eigen::MatrixXd g_inv = Eigen::Vector3d(std::exp(-t), 1, std::exp(t)).asDiagonal();
  Eigen::MatrixXd h(3, 3), h_inv(3, 3);
  h << c, 0, s, 0, 1, 0, s, 0, c;
  h_inv << c, 0, -s, 0, 1, 0, -s, 0, c;
  GroupModel model;
  model.name = "free";
  model.free = true;
  model.generators = {{"g", g, 1}, {"G", g_inv, 0}, {"h", h, 3}, {"H", h_inv, 2}};
  return model;
}

GroupModel surface_group_model() {
  const double log_lambda = std::acosh(1 / std::tan(std::numbers::pi / 8));
  const Eigen::Vector3d stretch(std::exp(log_lambda), 1, std::exp(-log_lambda));
  const Eigen::Vector3d shrink(std::exp(-log_lambda), 1, std::exp(log_lambda));
  GroupModel model;
  model.name = "surface";
  const char* names = "abcd";
  for (int i = 0; i < 4; ++i) {
    const Eigen::Matrix3d r = rotation13(i * std::numbers::pi / 8);
    const Eigen::MatrixXd a = r * stretch.asDiagonal() * r.transpose();
    const Eigen::MatrixXd a_inv = r * shrink.asDiagonal() * r.transpose();
    const int base = static_cast<int>(model.generators.size());
    model.generators.push_back({std::string(1, names[i]), a, base + 1});
    model.generators.push_back({std::string(1, static_cast<char>(names[i] - 'a' + 'A')), a_inv, base});
  }
  return model;
}

std::string surface_relator() { return "aBcDAbCd"; }

double surface_covering_radius() {
  const double cot = 1 / std::tan(std::numbers::pi / 8);
  return std::sqrt(3.0) * std::acosh(cot * cot);
}

Eigen::MatrixXd evaluate_word(const GroupModel& model, const std::string& word) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(model.dim(), model.dim());
  std::vector<std::string> tokens;
  if (single_char_labels(model)) {
    for (char ch : word)
      if (ch != ' ') tokens.emplace_back(1, ch);
  } else {
    std::size_t pos = 0;
    while (pos < word.size()) {
      const auto end = word.find(' ', pos);
      const auto tok = word.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      if (!tok.empty()) tokens.push_back(tok);
      if (end == std::string::npos) break;
      pos = end + 1;
    }
  }
  for (const auto& tok : tokens) {
    auto it = std::find_if(model.generators.begin(), model.generators.end(),
                           [&](const Generator& g) { return g.label == tok; });
    if (it == model.generators.end()) throw std::invalid_argument("unknown generator label '" + tok + "'");
    m = m * it->matrix;
  }
  return m;
}

BallResult ball_generating_set(const GroupModel& model, double radius, int depth_cap) {
  if (!(radius >= 0)) throw std::invalid_argument("ball_generating_set: radius must be >= 0");
  if (depth_cap < 1) throw std::invalid_argument("ball_generating_set: depth_cap must be >= 1");
  GroupModel bfs = model;
  bfs.free = false;  // dedup needed even for free models to make elements distinct
  std::map<std::vector<double>, int> seen;
  WordTree tree = root_tree(bfs, seen);
  BallResult result;
  std::vector<int> frontier{0};
  bool last_layer_hit = false;
  for (int depth = 1; depth <= depth_cap; ++depth) {
    frontier = expand_layer(bfs, tree, frontier, seen);
    result.depth = depth;
    last_layer_hit = false;
    for (int idx : frontier) {
      const auto& node = tree.nodes[idx];
      const double disp = cartan_vector<double>(node.m, node.m_inv).norm();
      if (disp <= radius) {
        result.elements.push_back({node.m, render_word(model, tree.word(idx)), disp});
        last_layer_hit = true;
      }
    }
    if (!last_layer_hit) break;
  }
  result.complete = !last_layer_hit;
  return result;
}

QIConstants milnor_schwarz_constants(double R) {
  if (!(R > 0)) throw std::invalid_argument("milnor_schwarz_constants: R must be positive");
  return {1.0, 1.0, 2 * R + 1, 0.0};
}

ClassicalMorse classical_morse_constants(const HyperbolicityInput& h) {
  if (!(h.delta_hyp > 0) || !(h.M > 0) || !(h.l > 0) || !(h.a > 0))
    throw std::invalid_argument("classical_morse_constants: all inputs must be positive");
  auto holds = [&](double D) {
    const double arg = 2 * D + 2 * h.M * h.M * h.l + 6 * D * h.M * h.l + h.a * h.M;
    return D - 1 <= h.delta_hyp * std::abs(std::log2(arg));
  };
  double lo = 1;  // always in the set
  double hi = 2;
  while (holds(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > 1e15) throw std::domain_error("classical_morse_constants: search diverged");
  }
  while (hi - lo > 1e-7) {
    const double mid = lo + (hi - lo) / 2;
    (holds(mid) ? lo : hi) = mid;
  }
  ClassicalMorse out;
  out.D0 = lo;
  out.R = lo + h.l * h.M * lo + h.l * h.M * h.M + h.a / 2;
  return out;
}

VerifyReport local_morse_verify(const GroupModel& model, const ModelConstants& mc, const MorseQIParams& target,
                                const StraightSpacedParams& straightness, int max_len) {
  if (max_len < 0) throw std::invalid_argument("local_morse_verify: max_len must be >= 0");
  if (model.dim() != mc.d) throw std::invalid_argument("local_morse_verify: model and constants differ in dimension");
  const auto& policy = numeric_policy();
  VerifyReport rep;
  rep.max_len = max_len;
  rep.qi_lower_margin = rep.qi_upper_margin = std::numeric_limits<double>::infinity();
  rep.min_margin = rep.min_tested_margin = rep.min_zeta_angle = std::numeric_limits<double>::infinity();
  rep.max_margin = -std::numeric_limits<double>::infinity();
  rep.angle_threshold = std::numbers::pi - straightness.epsilon;

  const auto& gens = model.generators;
  std::map<std::vector<double>, int> seen;
  WordTree tree = root_tree(model, seen);
  std::vector<int> frontier{0};
  const SpdPointd origin = SpdPointd::identity(mc.d);

  for (int depth = 1; depth <= max_len; ++depth) {
    frontier = expand_layer(model, tree, frontier, seen);
    for (int idx : frontier) {
      const std::vector<int> w = tree.word(idx);
      const int n = static_cast<int>(w.size());
      ++rep.words;
      rep.segments += n;
      if (rep.segments > kSegmentGuard) throw std::length_error("local_morse_verify: more than 10^7 orbit segments");

      // Segments x_i -> x_n, i.e. the subword w[i..n) translated to start at the origin.
      Eigen::MatrixXd h = Eigen::MatrixXd::Identity(mc.d, mc.d);
      Eigen::MatrixXd h_inv = h;
      for (int i = n - 1; i >= 0; --i) {
        h = gens[w[i]].matrix * h;
        h_inv = h_inv * gens[gens[w[i]].inverse].matrix;
        const int N = n - i;
        const CartanVectord lambda = cartan_vector<double>(h, h_inv);
        const double dist = lambda.norm();
        const double tol = policy.dist_rel_tol * std::max(1.0, dist);
        const double lower = dist - (N / target.c1 - target.c2);
        const double upper = target.c3 * N + target.c4 - dist;
        if (std::min(lower, upper) < std::min(rep.qi_lower_margin, rep.qi_upper_margin))
          rep.qi_witness = render_word(model, {w.begin() + i, w.end()});
        rep.qi_lower_margin = std::min(rep.qi_lower_margin, lower);
        rep.qi_upper_margin = std::min(rep.qi_upper_margin, upper);
        if (lower < -tol || upper < -tol) rep.qi_pass = false;

        if (!(dist > 0)) continue;
        const double margin = regularity_margin(lambda, mc);
        rep.min_margin = std::min(rep.min_margin, margin);
        rep.max_margin = std::max(rep.max_margin, margin);
        if (dist >= straightness.s) {
          ++rep.regular_segments;
          if (margin < rep.min_tested_margin) {
            rep.min_tested_margin = margin;
            rep.regularity_witness = render_word(model, {w.begin() + i, w.end()});
          }
          if (margin < target.alpha0 * (1 - policy.comparison_slack)) rep.regularity_pass = false;
        }
      }

      // Greedy s-coarsification of the orbit sequence along w, then zeta-angles at interior points.
      std::vector<int> coarse{0};
      {
        Eigen::MatrixXd step = Eigen::MatrixXd::Identity(mc.d, mc.d);
        Eigen::MatrixXd step_inv = step;
        for (int i = 1; i <= n; ++i) {
          step = step * gens[w[i - 1]].matrix;
          step_inv = gens[gens[w[i - 1]].inverse].matrix * step_inv;
          if (cartan_vector<double>(step, step_inv).norm() >= straightness.s) {
            coarse.push_back(i);
            step.setIdentity();
            step_inv.setIdentity();
          }
        }
      }
      auto subword = [&](int from, int to) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(mc.d, mc.d);
        for (int i = from; i < to; ++i) m = m * gens[w[i]].matrix;
        return m;
      };
      auto subword_inv = [&](int from, int to) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(mc.d, mc.d);
        for (int i = to - 1; i >= from; --i) m = m * gens[gens[w[i]].inverse].matrix;
        return m;
      };
      for (std::size_t j = 1; j + 1 < coarse.size(); ++j) {
        const SpdPointd back = orbit_point<double>(subword_inv(coarse[j - 1], coarse[j]));
        const SpdPointd ahead = orbit_point<double>(subword(coarse[j], coarse[j + 1]));
        double angle = 0;
        try {
          angle = zeta_angle(origin, back, ahead, mc);
        } catch (const RegularityError&) {
          angle = 0;  // undefined angle counts as maximally bent
        }
        ++rep.angle_triples;
        if (angle < rep.min_zeta_angle) {
          rep.min_zeta_angle = angle;
          rep.straightness_witness = render_word(model, w);
        }
        if (angle < rep.angle_threshold) rep.straightness_pass = false;
      }
    }
  }
  if (rep.segments == 0) {
    rep.qi_lower_margin = rep.qi_upper_margin = 0;
    rep.min_margin = rep.max_margin = rep.min_tested_margin = 0;
  }
  if (rep.regular_segments == 0) rep.min_tested_margin = 0;
  if (rep.angle_triples == 0) rep.min_zeta_angle = std::numbers::pi;
  return rep;
}

}  // namespace anosov
