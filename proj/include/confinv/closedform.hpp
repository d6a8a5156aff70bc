#pragma once

// Exact closed-form values of the shape
//
//     coeff * prod_p p^(e_p) * pi^k * E^m
//
// where coeff is rational, each e_p lies in (0, 1), and E = E(2*sqrt(2)/3) is
// the complete elliptic integral of the second kind at that modulus. Square
// roots are the special case e_p = 1/2 (a square-free radicand); the wider
// exponent range is needed for powers such as (2*pi^2)^(2/3).

#include "confinv/numeric.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confinv {

/// Complete elliptic integral of the second kind, E(k) with modulus k
/// (integrand sqrt(1 - k^2 sin^2)), by the arithmetic-geometric mean.
/// Throws DomainError unless 0 <= k < 1.
double elliptic_E(double modulus);
HighFloat elliptic_E(const HighFloat& modulus);

/// The modulus 2*sqrt(2)/3 and E at that modulus, to full HighFloat precision.
const HighFloat& klein_modulus();
const HighFloat& klein_elliptic_E();
const HighFloat& high_pi();

class ClosedFormValue {
 public:
  using Radical = std::map<unsigned long, Rational>;

  ClosedFormValue() = default;  // zero
  explicit ClosedFormValue(Rational coeff);
  ClosedFormValue(long num, long den) : ClosedFormValue(make_rational(num, den)) {}

  static ClosedFormValue zero() { return {}; }
  static ClosedFormValue one() { return ClosedFormValue(Rational(1)); }
  static ClosedFormValue pi(const Rational& exponent = 1);
  static ClosedFormValue ell(const Rational& exponent = 1);
  /// sqrt(r) for rational r >= 0.
  static ClosedFormValue sqrt(const Rational& r);
  /// base^exponent for rational base > 0 (base may be negative for an
  /// integral exponent).
  static ClosedFormValue power(const Rational& base, const Rational& exponent);

  const Rational& coeff() const { return coeff_; }
  const Radical& radical() const { return radical_; }
  const Rational& pi_exp() const { return pi_exp_; }
  const Rational& ell_exp() const { return ell_exp_; }

  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const;
  /// True when every radical exponent is 1/2, i.e. the value is
  /// coeff*sqrt(s)*pi^k*E^m with square-free s.
  bool is_square_root_form() const;
  /// The square-free radicand s when is_square_root_form().
  BigInt radicand() const;
  int sign() const { return sgn(coeff_); }

  ClosedFormValue pow(const Rational& exponent) const;
  ClosedFormValue inverse() const;

  friend ClosedFormValue operator*(const ClosedFormValue& a, const ClosedFormValue& b);
  friend ClosedFormValue operator/(const ClosedFormValue& a, const ClosedFormValue& b);
  friend ClosedFormValue operator-(const ClosedFormValue& a);
  friend bool operator==(const ClosedFormValue& a, const ClosedFormValue& b) = default;

  /// Same transcendental/radical part, so the two differ by a rational factor.
  bool same_shape(const ClosedFormValue& other) const;

  HighFloat eval() const;
  /// Decimal approximation with `digits` significant digits (1..50).
  std::string eval_string(int digits) const;
  /// Exact rendering, e.g. "8*sqrt(3)*pi^3" or "6*2^(2/3)*pi^(4/3)".
  std::string to_string() const;

 private:
  void normalize();

  Rational coeff_{0};
  Radical radical_;
  Rational pi_exp_{0};
  Rational ell_exp_{0};
};

/// Evaluates to `digits` significant digits; digits must be in 1..50.
HighFloat cf_eval(const ClosedFormValue& v, int digits);

/// A value that is either an exact formal sum of closed-form monomials or a
/// numeric-only approximation (produced by operations that leave the closed
/// class, such as the square root of a sum).
class Value {
 public:
  Value() = default;  // exact zero
  Value(const ClosedFormValue& v);  // NOLINT(google-explicit-constructor)
  Value(const Rational& r);         // NOLINT(google-explicit-constructor)
  Value(long n) : Value(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  static Value numeric(const HighFloat& v);

  bool is_exact() const { return exact_; }
  bool is_zero() const;
  bool is_monomial() const { return exact_ && terms_.size() <= 1; }
  /// The single monomial of an exact value with at most one term.
  ClosedFormValue as_monomial() const;
  std::optional<Rational> as_rational() const;
  const std::vector<ClosedFormValue>& terms() const { return terms_; }

  HighFloat eval() const;
  std::string eval_string(int digits) const;
  std::string to_string() const;

  Value pow(const Rational& exponent) const;
  Value sqrt() const { return pow(Rational(1, 2)); }

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator-(const Value& a);
  friend Value operator*(const Value& a, const Value& b);
  friend Value operator/(const Value& a, const Value& b);

  /// Exact equality for exact values; for numeric-only operands, agreement
  /// within max(1e-9 absolute, 1e-9 relative).
  bool equals(const Value& other) const;

 private:
  void add_term(const ClosedFormValue& t);

  bool exact_ = true;
  std::vector<ClosedFormValue> terms_;  // canonical: nonzero, sorted, distinct shapes
  HighFloat numeric_ = 0;
};

/// Default comparison tolerance for numeric-only values.
inline constexpr double kNumericTolerance = 1e-9;

bool approx_equal(const HighFloat& a, const HighFloat& b, double tol = kNumericTolerance);

}  // namespace confinv
