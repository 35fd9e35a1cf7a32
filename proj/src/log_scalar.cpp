#include "anosov/log_scalar.hpp"

#include <cstdio>
#include <ostream>

#include "anosov/numeric_policy.hpp"

namespace anosov {
namespace {

constexpr double kLn10 = 2.302585092994045684017991454684364;
// Magnitudes whose relative difference is below this cannot be subtracted
// meaningfully in base-10 exponent form.
constexpr double kCancellationThreshold = 1e-12;

}  // namespace

LogScalar LogScalar::from_double(double x) {
  if (std::isnan(x)) throw std::domain_error("LogScalar: NaN input");
  if (x == 0.0) return zero();
  return LogScalar(static_cast<std::int8_t>(x > 0 ? 1 : -1), std::log10(std::abs(x)));
}

LogScalar LogScalar::from_log10(double log10_mag, int sign) {
  if (std::isnan(log10_mag)) throw std::domain_error("LogScalar: NaN exponent");
  if (sign == 0 || log10_mag == -std::numeric_limits<double>::infinity()) return zero();
  return LogScalar(static_cast<std::int8_t>(sign > 0 ? 1 : -1), log10_mag);
}

LogScalar LogScalar::from_ln(double ln_mag, int sign) { return from_log10(ln_mag / kLn10, sign); }

double LogScalar::ln_abs() const { return log10_mag_ * kLn10; }

double LogScalar::to_double() const {
  if (sign_ == 0) return 0.0;
  if (log10_mag_ > 308.5) return sign_ * std::numeric_limits<double>::infinity();
  if (log10_mag_ < -330.0) return 0.0;
  return sign_ * std::pow(10.0, log10_mag_);
}

LogScalar LogScalar::operator-() const { return LogScalar(static_cast<std::int8_t>(-sign_), log10_mag_); }

LogScalar& LogScalar::operator+=(const LogScalar& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) return *this = rhs;
  if (is_infinite() || rhs.is_infinite()) {
    if (is_infinite() && rhs.is_infinite() && sign_ != rhs.sign_)
      throw std::domain_error("LogScalar: inf - inf");
    if (!is_infinite()) *this = rhs;
    return *this;
  }
  const bool this_larger = log10_mag_ >= rhs.log10_mag_;
  const double hi = this_larger ? log10_mag_ : rhs.log10_mag_;
  const double lo = this_larger ? rhs.log10_mag_ : log10_mag_;
  const std::int8_t hi_sign = this_larger ? sign_ : rhs.sign_;
  const double ratio_ln = (lo - hi) * kLn10;  // <= 0
  if (sign_ == rhs.sign_) {
    *this = LogScalar(hi_sign, hi + std::log1p(std::exp(ratio_ln)) / kLn10);
    return *this;
  }
  if (lo == hi) return *this = zero();
  const double remaining = -std::expm1(ratio_ln);  // 1 - |small|/|large|
  if (remaining < kCancellationThreshold)
    throw CancellationError("LogScalar: catastrophic cancellation in subtraction");
  *this = LogScalar(hi_sign, hi + std::log10(remaining));
  return *this;
}

LogScalar& LogScalar::operator-=(const LogScalar& rhs) { return *this += -rhs; }

LogScalar& LogScalar::operator*=(const LogScalar& rhs) {
  if ((is_zero() && rhs.is_infinite()) || (is_infinite() && rhs.is_zero()))
    throw std::domain_error("LogScalar: 0 * inf");
  if (sign_ == 0 || rhs.sign_ == 0) return *this = zero();
  *this = LogScalar(static_cast<std::int8_t>(sign_ * rhs.sign_), log10_mag_ + rhs.log10_mag_);
  return *this;
}

LogScalar& LogScalar::operator/=(const LogScalar& rhs) {
  if (rhs.sign_ == 0) throw std::domain_error("LogScalar: division by zero");
  if (is_infinite() && rhs.is_infinite()) throw std::domain_error("LogScalar: inf / inf");
  if (sign_ == 0) return *this;
  *this = LogScalar(static_cast<std::int8_t>(sign_ * rhs.sign_), log10_mag_ - rhs.log10_mag_);
  return *this;
}

std::partial_ordering operator<=>(const LogScalar& a, const LogScalar& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  if (a.sign_ == 0) return std::partial_ordering::equivalent;
  return a.sign_ > 0 ? a.log10_mag_ <=> b.log10_mag_ : b.log10_mag_ <=> a.log10_mag_;
}

std::string LogScalar::to_string() const {
  if (sign_ == 0) return "0";
  if (is_infinite()) return sign_ > 0 ? "inf" : "-inf";
  const double exponent = std::floor(log10_mag_);
  double mantissa = std::pow(10.0, log10_mag_ - exponent);
  double shown_exponent = exponent;
  if (mantissa >= 9.9995) {  // keep "10.000e5" from appearing after rounding
    mantissa /= 10.0;
    shown_exponent += 1.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.4fe%.0f", sign_ < 0 ? "-" : "", mantissa, shown_exponent);
  return buf;
}

LogScalar pow(const LogScalar& x, double p) {
  if (x.sign() < 0) throw std::domain_error("LogScalar pow: negative base");
  if (x.is_zero()) {
    if (p > 0) return LogScalar::zero();
    if (p == 0) return LogScalar::from_double(1.0);
    return LogScalar::infinity();
  }
  return LogScalar::from_log10(p * x.log10_abs());
}

LogScalar abs(const LogScalar& x) { return x.sign() < 0 ? -x : x; }

LogScalar pow_real(double base, double p) {
  if (!(base > 0)) throw std::domain_error("pow_real: base must be positive");
  return LogScalar::from_log10(p * std::log10(base));
}

bool less_equal_with_slack(const LogScalar& lhs, const LogScalar& rhs, double rel_slack) {
  if (lhs <= rhs) return true;
  if (lhs.is_infinite() || rel_slack <= 0) return false;
  if (lhs.sign() > 0 && rhs.sign() > 0)
    return lhs.log10_abs() - rhs.log10_abs() <= std::log10(1.0 + rel_slack);
  if (lhs.sign() < 0 && rhs.sign() < 0)
    return rhs.log10_abs() - lhs.log10_abs() <= -std::log10(1.0 - std::min(rel_slack, 0.5));
  return false;
}

bool less_equal_with_slack(const LogScalar& lhs, const LogScalar& rhs) {
  return less_equal_with_slack(lhs, rhs, numeric_policy().comparison_slack);
}

std::ostream& operator<<(std::ostream& os, const LogScalar& x) { return os << x.to_string(); }

}  // namespace anosov
