#pragma once

namespace anosov {

/// Process-wide tolerances. Read once at startup; the comparison slack can be
/// overridden through the ANOSOV_CERT_NUMERIC_SLACK environment variable.
struct NumericPolicy {
  double log_abs_tol = 1e-10;       // log-scale quantities (Cartan vectors)
  double dist_rel_tol = 1e-9;       // distances
  double eigen_gap_rel = 1e-8;      // minimal relative eigenvalue gap for ordered eigenbases
  double symmetry_rel_tol = 1e-12;  // SpdPoint symmetry check
  double det_rel_tol = 1e-9;        // determinant-one checks
  double comparison_slack = 1e-12;  // relative slack applied when an inequality is tested
};

const NumericPolicy& numeric_policy();

/// Replaces the global policy. Not synchronized; call before any concurrent work.
void set_numeric_policy(const NumericPolicy& policy);

}  // namespace anosov
