#include "anosov/symspace.hpp"

#include <set>

namespace anosov {

std::vector<int> sigma_mod(int d) {
  if (d < 2) throw std::invalid_argument("sigma_mod: d must be >= 2");
  std::vector<int> all(static_cast<std::size_t>(d - 1));
  std::iota(all.begin(), all.end(), 1);
  return all;
}

namespace {

ModelConstants build(int d, std::vector<int> tau_mod, const double* zeta0_override) {
  if (d < 2) throw std::invalid_argument("model_constants: d must be >= 2");
  if (tau_mod.empty()) throw std::invalid_argument("model_constants: tau_mod must be nonempty");
  std::set<int> tau(tau_mod.begin(), tau_mod.end());
  for (int i : tau) {
    if (i < 1 || i > d - 1)
      throw std::invalid_argument("model_constants: simple root index " + std::to_string(i) + " out of range");
    if (!tau.count(d - i))
      throw std::invalid_argument("model_constants: tau_mod is not invariant under i -> d - i (missing " +
                                  std::to_string(d - i) + ")");
  }

  // Blocks of coordinates not separated by a root of tau share a zeta value.
  std::vector<int> block(static_cast<std::size_t>(d));
  for (int i = 1; i < d; ++i) block[i] = block[i - 1] + (tau.count(i) ? 1 : 0);

  Eigen::VectorXd stair(d);
  for (int i = 0; i < d; ++i) stair(i) = d - 1 - 2 * i;  // d + 1 - 2i with 1-based i
  Eigen::VectorXd zeta(d);
  for (int i = 0; i < d;) {
    int j = i;
    while (j < d && block[j] == block[i]) ++j;
    zeta.segment(i, j - i).setConstant(stair.segment(i, j - i).mean());
    i = j;
  }
  zeta /= killing_norm(zeta);

  ModelConstants mc;
  mc.d = d;
  mc.tau_mod.assign(tau.begin(), tau.end());
  mc.kappa0 = 1.0 / std::sqrt(static_cast<double>(d));
  mc.zeta_profile = zeta;
  mc.zeta0 = std::numeric_limits<double>::infinity();
  for (int i : tau) mc.zeta0 = std::min(mc.zeta0, zeta(i - 1) - zeta(i));
  if (zeta0_override) {
    if (!(*zeta0_override > 0) || *zeta0_override > mc.kappa0)
      throw std::invalid_argument("model_constants: zeta0 must lie in (0, kappa0]");
    mc.zeta0 = *zeta0_override;
  }
  mc.c0 = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (block[i] != block[j]) ++mc.c0;
  mc.antipodal_threshold = mc.zeta0 * mc.zeta0 / (mc.kappa0 * mc.kappa0);
  return mc;
}

}  // namespace

ModelConstants model_constants(int d, std::vector<int> tau_mod) { return build(d, std::move(tau_mod), nullptr); }

ModelConstants model_constants_with_zeta0(int d, std::vector<int> tau_mod, double zeta0) {
  return build(d, std::move(tau_mod), &zeta0);
}

}  // namespace anosov
