#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>

namespace anosov {

/// Raised when subtracting two LogScalars whose magnitudes agree to better
/// than the representable relative precision.
class CancellationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Signed real number stored as sign and base-10 exponent of the magnitude.
 *
 * Covers magnitudes far outside the double range, e.g. 10^-3698433. Zero is
 * sign 0 with exponent -inf; an exponent of +inf encodes an unbounded value
 * (used for degenerate inequality sides).
 */
class LogScalar {
 public:
  constexpr LogScalar() = default;

  static LogScalar from_double(double x);
  /// sign * 10^log10_mag
  static LogScalar from_log10(double log10_mag, int sign = 1);
  /// sign * e^ln_mag
  static LogScalar from_ln(double ln_mag, int sign = 1);
  static constexpr LogScalar zero() { return LogScalar{}; }
  static LogScalar infinity(int sign = 1) { return from_log10(std::numeric_limits<double>::infinity(), sign); }

  int sign() const { return sign_; }
  /// Base-10 exponent of |x|; -inf for zero.
  double log10_abs() const { return log10_mag_; }
  double ln_abs() const;
  bool is_zero() const { return sign_ == 0; }
  bool is_infinite() const { return sign_ != 0 && std::isinf(log10_mag_); }

  /// Nearest double; saturates to +-inf or 0 outside the double range.
  double to_double() const;

  LogScalar operator-() const;
  LogScalar& operator+=(const LogScalar& rhs);
  LogScalar& operator-=(const LogScalar& rhs);
  LogScalar& operator*=(const LogScalar& rhs);
  LogScalar& operator/=(const LogScalar& rhs);

  friend LogScalar operator+(LogScalar a, const LogScalar& b) { return a += b; }
  friend LogScalar operator-(LogScalar a, const LogScalar& b) { return a -= b; }
  friend LogScalar operator*(LogScalar a, const LogScalar& b) { return a *= b; }
  friend LogScalar operator/(LogScalar a, const LogScalar& b) { return a /= b; }
  friend LogScalar operator*(LogScalar a, double b) { return a *= from_double(b); }
  friend LogScalar operator*(double a, LogScalar b) { return b *= from_double(a); }
  friend LogScalar operator/(LogScalar a, double b) { return a /= from_double(b); }

  friend bool operator==(const LogScalar& a, const LogScalar& b) {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.log10_mag_ == b.log10_mag_);
  }
  friend std::partial_ordering operator<=>(const LogScalar& a, const LogScalar& b);

  std::string to_string() const;

 private:
  constexpr LogScalar(std::int8_t sign, double log10_mag) : sign_(sign), log10_mag_(log10_mag) {}

  std::int8_t sign_ = 0;
  double log10_mag_ = -std::numeric_limits<double>::infinity();
};

/// |x|^p for x > 0 (or x = 0 and p > 0).
LogScalar pow(const LogScalar& x, double p);
LogScalar abs(const LogScalar& x);
/// x^p with exact treatment of large integer exponents via log10.
LogScalar pow_real(double base, double p);

/// True iff lhs <= rhs, allowing rhs to be exceeded by a relative slack
/// (numeric_policy().comparison_slack unless given).
bool less_equal_with_slack(const LogScalar& lhs, const LogScalar& rhs);
bool less_equal_with_slack(const LogScalar& lhs, const LogScalar& rhs, double rel_slack);

std::ostream& operator<<(std::ostream& os, const LogScalar& x);

}  // namespace anosov
