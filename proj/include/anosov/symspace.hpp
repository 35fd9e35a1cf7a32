#pragma once

// Geometry of the symmetric space of SL(d,R), realized as determinant-one
// symmetric positive-definite matrices with the action g.p = g p g^T and the
// Riemannian metric induced by the Killing form (2d times Frobenius at I).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "anosov/numeric_policy.hpp"

namespace anosov {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// A direction is too close to a Weyl chamber wall for the requested
/// operation. `root` is the 1-based simple root whose gap failed.
class RegularityError : public std::domain_error {
 public:
  RegularityError(const std::string& what, int root) : std::domain_error(what), root_(root) {}
  int root() const { return root_; }

 private:
  int root_;
};

/// d, the chosen face tau_mod, and the constants derived from the model type zeta.
struct ModelConstants {
  int d = 0;
  std::vector<int> tau_mod;  // 1-based simple roots positive on the face
  double kappa0 = 0;
  double zeta0 = 0;
  int c0 = 0;
  double antipodal_threshold = 0;  // zeta0^2 / kappa0^2
  Eigen::VectorXd zeta_profile;    // diagonal of the unit model vector zeta, non-increasing
};

/// Full chamber {1, ..., d-1}.
std::vector<int> sigma_mod(int d);

/// Constants for SL(d,R) with the block-averaged staircase type on tau_mod.
/// Throws std::invalid_argument for d < 2 or a tau_mod that is empty, out of
/// range, or not invariant under i -> d - i.
ModelConstants model_constants(int d, std::vector<int> tau_mod);

/// Same as model_constants but with an externally supplied zeta0 (0 < zeta0 <= kappa0).
ModelConstants model_constants_with_zeta0(int d, std::vector<int> tau_mod, double zeta0);

namespace detail {

template <typename Scalar>
Scalar max_abs(const MatrixX<Scalar>& m) {
  return m.size() == 0 ? Scalar(0) : m.cwiseAbs().maxCoeff();
}

template <typename Scalar>
void require_square_finite(const MatrixX<Scalar>& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw std::invalid_argument(std::string(what) + ": expected a square matrix of size >= 2");
  if (!m.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

/// f applied to the spectrum of a symmetric matrix.
template <typename Scalar, typename F>
MatrixX<Scalar> spectral_apply(const MatrixX<Scalar>& sym, F f) {
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(sym);
  if (es.info() != Eigen::Success) throw std::domain_error("symmetric eigensolver failed");
  VectorX<Scalar> mapped = es.eigenvalues().unaryExpr(f);
  return es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().transpose();
}

template <typename Scalar>
MatrixX<Scalar> symmetrized(const MatrixX<Scalar>& m) {
  return (m + m.transpose()) / Scalar(2);
}

/// Sorted (non-increasing) half-log spectrum of an SPD matrix m. Each
/// eigenvalue is read from whichever of m, m_inv holds it with the better
/// relative accuracy: large ones from m, small ones from m_inv. The result is
/// projected to trace zero.
template <typename Scalar>
VectorX<Scalar> half_log_spectrum(const MatrixX<Scalar>& m, const MatrixX<Scalar>& m_inv) {
  using std::log;
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(m, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es_inv(m_inv, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success || es_inv.info() != Eigen::Success)
    throw std::domain_error("symmetric eigensolver failed");
  const auto n = m.rows();
  const VectorX<Scalar>& up = es.eigenvalues();        // ascending
  const VectorX<Scalar>& down = es_inv.eigenvalues();  // ascending; down(k) ~ 1 / (k-th largest of m)
  if (!(up(n - 1) > Scalar(0)) || !(down(n - 1) > Scalar(0)))
    throw std::invalid_argument("matrix is not positive-definite");
  // An eigenvalue mu is exact to relative precision in whichever matrix holds
  // it as the larger number (mu in m, 1/mu in m_inv); the other copy may be
  // pure rounding noise, even with the wrong sign.
  VectorX<Scalar> lambda(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar mu = up(n - 1 - k);
    const Scalar mu_inv = down(k);
    if (mu >= mu_inv && mu > Scalar(0)) {
      lambda(k) = log(mu) / Scalar(2);
    } else if (mu_inv > Scalar(0)) {
      lambda(k) = -log(mu_inv) / Scalar(2);
    } else {
      throw std::invalid_argument("matrix is not positive-definite");
    }
  }
  std::sort(lambda.data(), lambda.data() + n, [](Scalar a, Scalar b) { return a > b; });
  lambda.array() -= lambda.mean();
  return lambda;
}

}  // namespace detail

/// A point of the symmetric space: symmetric, positive-definite, det 1.
template <typename Scalar>
class SpdPoint {
 public:
  explicit SpdPoint(MatrixX<Scalar> m) : m_(std::move(m)) { validate(); }

  static SpdPoint identity(Eigen::Index d) { return SpdPoint(MatrixX<Scalar>::Identity(d, d)); }

  /// Symmetrizes and rescales to determinant one before validating.
  static SpdPoint normalized(const MatrixX<Scalar>& m) {
    using std::pow;
    detail::require_square_finite(m, "SpdPoint");
    MatrixX<Scalar> s = detail::symmetrized(m);
    Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(s, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success || !(es.eigenvalues().minCoeff() > Scalar(0)))
      throw std::invalid_argument("SpdPoint: matrix is not positive-definite");
    const Scalar log_det = es.eigenvalues().array().log().sum();
    using std::exp;
    s *= exp(-log_det / Scalar(s.rows()));
    return SpdPoint(std::move(s));
  }

  const MatrixX<Scalar>& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  MatrixX<Scalar> sqrt() const {
    return detail::spectral_apply(m_, [](Scalar x) { using std::sqrt; return sqrt(x); });
  }
  MatrixX<Scalar> inv_sqrt() const {
    return detail::spectral_apply(m_, [](Scalar x) { using std::sqrt; return Scalar(1) / sqrt(x); });
  }
  MatrixX<Scalar> inverse() const {
    return detail::spectral_apply(m_, [](Scalar x) { return Scalar(1) / x; });
  }

 private:
  void validate() const {
    using std::abs;
    const auto& policy = numeric_policy();
    detail::require_square_finite(m_, "SpdPoint");
    const Scalar scale = std::max(Scalar(1), detail::max_abs(m_));
    if (detail::max_abs<Scalar>(m_ - m_.transpose()) > Scalar(policy.symmetry_rel_tol) * scale)
      throw std::invalid_argument("SpdPoint: matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(detail::symmetrized(m_), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success || !(es.eigenvalues().minCoeff() > Scalar(0)))
      throw std::invalid_argument("SpdPoint: matrix is not positive-definite");
    const Scalar det = es.eigenvalues().prod();
    if (abs(det - Scalar(1)) > Scalar(policy.det_rel_tol))
      throw std::invalid_argument("SpdPoint: determinant differs from 1");
  }

  MatrixX<Scalar> m_;
};

/// An element of SL(d,R).
template <typename Scalar>
class GroupElement {
 public:
  explicit GroupElement(MatrixX<Scalar> m) : m_(std::move(m)) {
    using std::abs;
    detail::require_square_finite(m_, "GroupElement");
    if (abs(m_.determinant() - Scalar(1)) > Scalar(numeric_policy().det_rel_tol))
      throw std::invalid_argument("GroupElement: determinant differs from 1");
  }

  static GroupElement identity(Eigen::Index d) { return GroupElement(MatrixX<Scalar>::Identity(d, d)); }

  const MatrixX<Scalar>& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  GroupElement inverse() const { return GroupElement(m_.inverse()); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.m_ * b.m_);
  }

 private:
  MatrixX<Scalar> m_;
};

/// Killing norm sqrt(2d * sum x_i^2) of a diagonal (Cartan) vector.
template <typename Derived>
typename Derived::Scalar killing_norm(const Eigen::MatrixBase<Derived>& lambda) {
  using std::sqrt;
  using S = typename Derived::Scalar;
  return sqrt(S(2 * lambda.size()) * lambda.squaredNorm());
}

/// Sorted, trace-zero half-log-eigenvalue vector; the vector-valued distance.
template <typename Scalar>
class CartanVector {
 public:
  explicit CartanVector(VectorX<Scalar> lambda) : lambda_(std::move(lambda)) {
    using std::abs;
    if (lambda_.size() < 2) throw std::invalid_argument("CartanVector: dimension must be >= 2");
    if (!lambda_.allFinite()) throw std::invalid_argument("CartanVector: non-finite entries");
    for (Eigen::Index i = 0; i + 1 < lambda_.size(); ++i)
      if (lambda_(i) < lambda_(i + 1)) throw std::invalid_argument("CartanVector: entries not sorted");
    if (abs(lambda_.sum()) > Scalar(numeric_policy().log_abs_tol))
      throw std::invalid_argument("CartanVector: entries do not sum to zero");
  }

  const VectorX<Scalar>& values() const { return lambda_; }
  Eigen::Index dim() const { return lambda_.size(); }
  Scalar operator[](Eigen::Index i) const { return lambda_(i); }

  /// Simple root alpha_i = lambda_i - lambda_{i+1}, i in [1, d-1].
  Scalar root(int i) const { return lambda_(i - 1) - lambda_(i); }
  Scalar norm() const { return killing_norm(lambda_); }

  /// Opposition involution: reverse and negate.
  CartanVector iota() const { return CartanVector(-lambda_.reverse().eval()); }

 private:
  VectorX<Scalar> lambda_;
};

/// Tangent vector at a point p, expressed in the frame p^{1/2}: the geodesic
/// with initial vector X is t -> p^{1/2} exp(2tX) p^{1/2}.
template <typename Scalar>
struct TangentSym {
  MatrixX<Scalar> m;

  Scalar killing_norm() const {
    using std::sqrt;
    return sqrt(Scalar(2 * m.rows()) * m.squaredNorm());
  }
};

template <typename Scalar>
SpdPoint<Scalar> act(const GroupElement<Scalar>& g, const SpdPoint<Scalar>& p) {
  return SpdPoint<Scalar>::normalized(g.matrix() * p.matrix() * g.matrix().transpose());
}

/// Orbit point g.I = g g^T.
template <typename Scalar>
SpdPoint<Scalar> orbit_point(const MatrixX<Scalar>& g) {
  return SpdPoint<Scalar>::normalized(g * g.transpose());
}

/// Cartan projection from the singular values of g. `g_inverse` should be an
/// accurately composed inverse (e.g. the product of inverse generators); the
/// small singular values are read from it.
template <typename Scalar>
CartanVector<Scalar> cartan_vector(const MatrixX<Scalar>& g, const MatrixX<Scalar>& g_inverse) {
  detail::require_square_finite(g, "cartan_vector");
  detail::require_square_finite(g_inverse, "cartan_vector");
  const MatrixX<Scalar> ggt = detail::symmetrized<Scalar>(g * g.transpose());
  const MatrixX<Scalar> inv = detail::symmetrized<Scalar>(g_inverse.transpose() * g_inverse);
  return CartanVector<Scalar>(detail::half_log_spectrum(ggt, inv));
}

template <typename Scalar>
CartanVector<Scalar> cartan_vector(const GroupElement<Scalar>& g) {
  return cartan_vector<Scalar>(g.matrix(), g.matrix().inverse());
}

namespace detail {

/// p^{-1/2} q p^{-1/2} and its inverse.
template <typename Scalar>
std::pair<MatrixX<Scalar>, MatrixX<Scalar>> relative_position(const SpdPoint<Scalar>& p,
                                                              const SpdPoint<Scalar>& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("points of different dimension");
  const MatrixX<Scalar> w = p.inv_sqrt();
  const MatrixX<Scalar> s = p.sqrt();
  return {symmetrized<Scalar>(w * q.matrix() * w), symmetrized<Scalar>(s * q.inverse() * s)};
}

}  // namespace detail

/// Vector-valued distance: half the sorted log-eigenvalues of p^{-1/2} q p^{-1/2}.
template <typename Scalar>
CartanVector<Scalar> vector_distance(const SpdPoint<Scalar>& p, const SpdPoint<Scalar>& q) {
  auto [m, m_inv] = detail::relative_position(p, q);
  return CartanVector<Scalar>(detail::half_log_spectrum(m, m_inv));
}

template <typename Scalar>
Scalar riem_distance(const SpdPoint<Scalar>& p, const SpdPoint<Scalar>& q) {
  return vector_distance(p, q).norm();
}

/// min over tau_mod simple roots of alpha(lambda) / |lambda|.
template <typename Scalar>
Scalar regularity_margin(const CartanVector<Scalar>& lambda, const ModelConstants& mc) {
  if (lambda.dim() != mc.d) throw std::invalid_argument("regularity_margin: dimension mismatch");
  const Scalar dist = lambda.norm();
  if (!(dist > Scalar(0))) throw std::invalid_argument("regularity_margin: undefined for coincident points");
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (int i : mc.tau_mod) best = std::min(best, lambda.root(i) / dist);
  return best;
}

template <typename Scalar>
Scalar regularity_margin(const SpdPoint<Scalar>& p, const SpdPoint<Scalar>& q, const ModelConstants& mc) {
  return regularity_margin(vector_distance(p, q), mc);
}

/// Unit direction of type zeta in the closed chamber of the direction pq.
/// Throws RegularityError when a tau_mod eigenvalue gap is below the policy tolerance.
template <typename Scalar>
TangentSym<Scalar> zeta_direction(const SpdPoint<Scalar>& p, const SpdPoint<Scalar>& q, const ModelConstants& mc) {
  using std::abs;
  if (p.dim() != mc.d) throw std::invalid_argument("zeta_direction: dimension mismatch");
  const auto [m, m_inv] = detail::relative_position(p, q);
  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> es(m);
  if (es.info() != Eigen::Success) throw std::domain_error("symmetric eigensolver failed");
  const VectorX<Scalar> lambda = detail::half_log_spectrum(m, m_inv);
  const Scalar scale = lambda.cwiseAbs().maxCoeff();
  for (int i : mc.tau_mod) {
    const Scalar gap = lambda(i - 1) - lambda(i);
    if (!(gap > Scalar(numeric_policy().eigen_gap_rel) * scale))
      throw RegularityError("zeta_direction: direction too close to the wall of simple root " + std::to_string(i), i);
  }
  // Eigen returns ascending eigenvalues; column d-1-j carries the j-th largest.
  const auto d = m.rows();
  MatrixX<Scalar> u(d, d);
  for (Eigen::Index j = 0; j < d; ++j) u.col(j) = es.eigenvectors().col(d - 1 - j);
  VectorX<Scalar> profile = mc.zeta_profile.template cast<Scalar>();
  return {u * profile.asDiagonal() * u.transpose()};
}

/// Killing inner product of tangent vectors in the same frame.
template <typename Scalar>
Scalar killing_inner(const TangentSym<Scalar>& a, const TangentSym<Scalar>& b) {
  return Scalar(2 * a.m.rows()) * (a.m.array() * b.m.array()).sum();
}

/// The tangent vector as an ambient symmetric matrix p^{1/2} X p^{1/2}; the
/// action of g on it is V -> g V g^T.
template <typename Scalar>
MatrixX<Scalar> to_ambient(const SpdPoint<Scalar>& p, const TangentSym<Scalar>& x) {
  const MatrixX<Scalar> s = p.sqrt();
  return s * x.m * s;
}

namespace detail {
template <typename Scalar>
Scalar clamped_acos(Scalar c) {
  using std::acos;
  return acos(std::clamp(c, Scalar(-1), Scalar(1)));
}
}  // namespace detail

/// Angle at p between the zeta-directions of px and py, in [0, pi].
template <typename Scalar>
Scalar zeta_angle(const SpdPoint<Scalar>& p, const SpdPoint<Scalar>& x, const SpdPoint<Scalar>& y,
                  const ModelConstants& mc) {
  const auto zx = zeta_direction(p, x, mc);
  const auto zy = zeta_direction(p, y, mc);
  return detail::clamped_acos(killing_inner(zx, zy));
}

/// Initial tangent vector (Killing length = distance) of the geodesic from p to q.
template <typename Scalar>
TangentSym<Scalar> log_map(const SpdPoint<Scalar>& p, const SpdPoint<Scalar>& q) {
  const auto [m, m_inv] = detail::relative_position(p, q);
  return {detail::spectral_apply(m, [](Scalar x) { using std::log; return log(x) / Scalar(2); })};
}

/// Riemannian angle at p between the geodesics to q and r.
template <typename Scalar>
Scalar riem_angle(const SpdPoint<Scalar>& p, const SpdPoint<Scalar>& q, const SpdPoint<Scalar>& r) {
  const auto x = log_map(p, q);
  const auto y = log_map(p, r);
  const Scalar nx = x.killing_norm();
  const Scalar ny = y.killing_norm();
  if (!(nx > Scalar(0)) || !(ny > Scalar(0))) throw std::invalid_argument("riem_angle: coincident points");
  return detail::clamped_acos(killing_inner(x, y) / (nx * ny));
}

/// Midpoint of the geodesic segment pq.
template <typename Scalar>
SpdPoint<Scalar> midpoint(const SpdPoint<Scalar>& p, const SpdPoint<Scalar>& q) {
  const auto [m, m_inv] = detail::relative_position(p, q);
  const MatrixX<Scalar> s = p.sqrt();
  const MatrixX<Scalar> half = detail::spectral_apply(m, [](Scalar x) { using std::sqrt; return sqrt(x); });
  return SpdPoint<Scalar>::normalized(s * half * s);
}

using SpdPointd = SpdPoint<double>;
using GroupElementd = GroupElement<double>;
using CartanVectord = CartanVector<double>;
using TangentSymd = TangentSym<double>;

}  // namespace anosov
