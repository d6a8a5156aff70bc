#include "confinv/closedform.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace confinv {

namespace {

template <class Real>
Real agm_elliptic_E(const Real& k, const Real& tol) {
  if (!(k >= 0) || !(k < 1)) throw DomainError("elliptic_E: modulus must lie in [0, 1)");
  using std::sqrt;
  using boost::multiprecision::sqrt;
  Real a = 1;
  Real b = sqrt(Real(1) - k * k);
  Real c = k;
  Real weight = Real(1) / 2;
  Real sum = weight * c * c;
  for (int iter = 0; iter < 200; ++iter) {
    if (c <= tol * a) break;
    Real next_a = (a + b) / 2;
    Real next_b = sqrt(a * b);
    Real next_c = (a - b) / 2;
    // At working precision c stalls at rounding level instead of reaching
    // tol; the doubling weight would then blow up the sum.
    if (next_c >= c) break;
    c = next_c;
    a = next_a;
    b = next_b;
    weight *= 2;
    sum += weight * c * c;
  }
  Real half_pi = boost::math::constants::half_pi<Real>();
  Real big_k = half_pi / a;
  return big_k * (Real(1) - sum);
}

}  // namespace

double elliptic_E(double modulus) {
  return agm_elliptic_E<double>(modulus, 1e-16);
}

HighFloat elliptic_E(const HighFloat& modulus) {
  return agm_elliptic_E<HighFloat>(modulus, HighFloat("1e-78"));
}

const HighFloat& high_pi() {
  static const HighFloat value = boost::math::constants::pi<HighFloat>();
  return value;
}

const HighFloat& klein_modulus() {
  static const HighFloat value = 2 * sqrt(HighFloat(2)) / 3;
  return value;
}

const HighFloat& klein_elliptic_E() {
  static const HighFloat value = elliptic_E(klein_modulus());
  return value;
}

// ---------------------------------------------------------------------------

ClosedFormValue::ClosedFormValue(Rational coeff) : coeff_(std::move(coeff)) {
  coeff_.canonicalize();
  normalize();
}

ClosedFormValue ClosedFormValue::pi(const Rational& exponent) {
  ClosedFormValue v = one();
  v.pi_exp_ = exponent;
  return v;
}

ClosedFormValue ClosedFormValue::ell(const Rational& exponent) {
  if (exponent < 0) throw DomainError("negative power of E");
  ClosedFormValue v = one();
  v.ell_exp_ = exponent;
  return v;
}

ClosedFormValue ClosedFormValue::sqrt(const Rational& r) {
  if (r < 0) throw DomainError("sqrt of negative rational");
  if (r == 0) return zero();
  return power(r, Rational(1, 2));
}

ClosedFormValue ClosedFormValue::power(const Rational& base, const Rational& exponent) {
  if (base == 0) {
    if (exponent <= 0) throw DomainError("0 raised to a non-positive power");
    return zero();
  }
  const bool integral_exp = exponent.get_den() == 1;
  if (base < 0 && !integral_exp) throw DomainError("fractional power of negative base");

  ClosedFormValue out = one();
  if (integral_exp) {
    const BigInt& k = exponent.get_num();
    if (!BigInt(abs(k)).fits_ulong_p()) throw DomainError("exponent too large");
    const unsigned long m = BigInt(abs(k)).get_ui();
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), m);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), m);
    out.coeff_ = k >= 0 ? make_rational(num, den) : make_rational(den, num);
    return out;
  }

  auto absorb = [&](const BigInt& n, int direction) {
    for (const auto& [p, k] : factorize(n)) {
      Rational e = exponent * Rational(static_cast<long>(k)) * direction;
      e.canonicalize();
      BigInt whole = floor(e);
      Rational frac = e - Rational(whole);
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), BigInt(p).get_mpz_t(), BigInt(abs(whole)).get_ui());
      if (whole >= 0) {
        out.coeff_ *= pw;
      } else {
        out.coeff_ /= pw;
      }
      if (frac != 0) out.radical_[p] += frac;
    }
  };
  absorb(abs(base.get_num()), 1);
  absorb(base.get_den(), -1);
  out.coeff_.canonicalize();
  out.normalize();
  return out;
}

void ClosedFormValue::normalize() {
  coeff_.canonicalize();
  if (coeff_ == 0) {
    radical_.clear();
    pi_exp_ = 0;
    ell_exp_ = 0;
    return;
  }
  for (auto it = radical_.begin(); it != radical_.end();) {
    Rational& e = it->second;
    e.canonicalize();
    BigInt whole = floor(e);
    if (whole != 0) {
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), BigInt(it->first).get_mpz_t(), BigInt(abs(whole)).get_ui());
      if (whole > 0) {
        coeff_ *= pw;
      } else {
        coeff_ /= pw;
      }
      e -= Rational(whole);
    }
    if (e == 0) {
      it = radical_.erase(it);
    } else {
      ++it;
    }
  }
  coeff_.canonicalize();
  pi_exp_.canonicalize();
  ell_exp_.canonicalize();
}

bool ClosedFormValue::is_rational() const {
  return radical_.empty() && pi_exp_ == 0 && ell_exp_ == 0;
}

bool ClosedFormValue::is_square_root_form() const {
  return std::all_of(radical_.begin(), radical_.end(),
                     [](const auto& kv) { return kv.second == Rational(1, 2); });
}

BigInt ClosedFormValue::radicand() const {
  if (!is_square_root_form()) throw DomainError("radical is not a square root");
  BigInt s = 1;
  for (const auto& kv : radical_) s *= kv.first;
  return s;
}

ClosedFormValue ClosedFormValue::pow(const Rational& exponent) const {
  if (is_zero()) {
    if (exponent <= 0) throw DomainError("zero raised to a non-positive power");
    return zero();
  }
  ClosedFormValue out = power(coeff_, exponent);
  for (const auto& [p, e] : radical_) {
    Rational scaled = e * exponent;
    out.radical_[p] += scaled;
  }
  out.pi_exp_ = pi_exp_ * exponent;
  out.ell_exp_ = ell_exp_ * exponent;
  if (out.ell_exp_ < 0) throw DomainError("negative power of E");
  out.normalize();
  return out;
}

ClosedFormValue ClosedFormValue::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  ClosedFormValue out = power(coeff_, Rational(-1));
  for (const auto& [p, e] : radical_) out.radical_[p] -= e;
  out.pi_exp_ = -pi_exp_;
  out.ell_exp_ = -ell_exp_;
  out.normalize();
  return out;
}

ClosedFormValue operator*(const ClosedFormValue& a, const ClosedFormValue& b) {
  if (a.is_zero() || b.is_zero()) return ClosedFormValue::zero();
  ClosedFormValue out = a;
  out.coeff_ *= b.coeff_;
  for (const auto& [p, e] : b.radical_) out.radical_[p] += e;
  out.pi_exp_ += b.pi_exp_;
  out.ell_exp_ += b.ell_exp_;
  out.normalize();
  return out;
}

ClosedFormValue operator/(const ClosedFormValue& a, const ClosedFormValue& b) {
  return a * b.inverse();
}

ClosedFormValue operator-(const ClosedFormValue& a) {
  ClosedFormValue out = a;
  out.coeff_ = -out.coeff_;
  return out;
}

bool ClosedFormValue::same_shape(const ClosedFormValue& other) const {
  return radical_ == other.radical_ && pi_exp_ == other.pi_exp_ &&
         ell_exp_ == other.ell_exp_;
}

HighFloat ClosedFormValue::eval() const {
  if (is_zero()) return HighFloat(0);
  HighFloat v = to_high(coeff_);
  for (const auto& [p, e] : radical_) v *= boost::multiprecision::pow(HighFloat(p), to_high(e));
  if (pi_exp_ != 0) v *= boost::multiprecision::pow(high_pi(), to_high(pi_exp_));
  if (ell_exp_ != 0) v *= boost::multiprecision::pow(klein_elliptic_E(), to_high(ell_exp_));
  return v;
}

HighFloat cf_eval(const ClosedFormValue& v, int digits) {
  if (digits < 1 || digits > 50) throw DomainError("precision must be within 1..50 digits");
  return v.eval();
}

std::string ClosedFormValue::eval_string(int digits) const {
  return format_high(cf_eval(*this, digits), digits);
}

namespace {

std::string exponent_text(const Rational& e) {
  if (e.get_den() == 1) return e.get_num().get_str();
  return "(" + to_string(e) + ")";
}

}  // namespace

std::string ClosedFormValue::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> factors;
  if (is_square_root_form() && !radical_.empty()) {
    factors.push_back("sqrt(" + radicand().get_str() + ")");
  } else {
    for (const auto& [p, e] : radical_) {
      factors.push_back(std::to_string(p) + "^" + exponent_text(e));
    }
  }
  if (pi_exp_ != 0) factors.push_back(pi_exp_ == 1 ? "pi" : "pi^" + exponent_text(pi_exp_));
  if (ell_exp_ != 0) factors.push_back(ell_exp_ == 1 ? "E" : "E^" + exponent_text(ell_exp_));

  std::string out;
  if (factors.empty()) return confinv::to_string(coeff_);
  if (coeff_ == -1) {
    out = "-";
  } else if (coeff_ != 1) {
    out = confinv::to_string(coeff_) + "*";
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
  return out;
}

// ---------------------------------------------------------------------------

bool approx_equal(const HighFloat& a, const HighFloat& b, double tol) {
  HighFloat diff = abs(a - b);
  HighFloat scale = std::max(abs(a), abs(b));
  return diff <= HighFloat(tol) || diff <= HighFloat(tol) * scale;
}

Value::Value(const ClosedFormValue& v) {
  if (!v.is_zero()) terms_.push_back(v);
}

Value::Value(const Rational& r) : Value(ClosedFormValue(r)) {}

Value Value::numeric(const HighFloat& v) {
  Value out;
  out.exact_ = false;
  out.numeric_ = v;
  return out;
}

bool Value::is_zero() const {
  if (exact_) return terms_.empty();
  return numeric_ == 0;
}

ClosedFormValue Value::as_monomial() const {
  if (!is_monomial()) throw DomainError("value is not a single closed-form monomial");
  return terms_.empty() ? ClosedFormValue::zero() : terms_.front();
}

std::optional<Rational> Value::as_rational() const {
  if (!is_monomial()) return std::nullopt;
  ClosedFormValue m = as_monomial();
  if (!m.is_rational()) return std::nullopt;
  return m.coeff();
}

HighFloat Value::eval() const {
  if (!exact_) return numeric_;
  HighFloat sum = 0;
  for (const auto& t : terms_) sum += t.eval();
  return sum;
}

std::string Value::eval_string(int digits) const {
  if (digits < 1 || digits > 50) throw DomainError("precision must be within 1..50 digits");
  return format_high(eval(), digits);
}

std::string Value::to_string() const {
  if (!exact_) return "~" + format_high(numeric_, 20);
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::string t = terms_[i].to_string();
    if (i == 0) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

void Value::add_term(const ClosedFormValue& t) {
  if (t.is_zero()) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->same_shape(t)) {
      Rational c = it->coeff() + t.coeff();
      ClosedFormValue merged = t * ClosedFormValue(c / t.coeff());
      if (merged.is_zero()) {
        terms_.erase(it);
      } else {
        *it = merged;
      }
      return;
    }
  }
  terms_.push_back(t);
  std::sort(terms_.begin(), terms_.end(), [](const ClosedFormValue& a, const ClosedFormValue& b) {
    if (a.pi_exp() != b.pi_exp()) return a.pi_exp() > b.pi_exp();
    if (a.ell_exp() != b.ell_exp()) return a.ell_exp() > b.ell_exp();
    return a.radical() < b.radical();
  });
}

Value operator+(const Value& a, const Value& b) {
  if (!a.exact_ || !b.exact_) return Value::numeric(a.eval() + b.eval());
  Value out = a;
  for (const auto& t : b.terms_) out.add_term(t);
  return out;
}

Value operator-(const Value& a) {
  if (!a.exact_) return Value::numeric(-a.numeric_);
  Value out = a;
  for (auto& t : out.terms_) t = -t;
  return out;
}

Value operator-(const Value& a, const Value& b) { return a + (-b); }

Value operator*(const Value& a, const Value& b) {
  if (!a.exact_ || !b.exact_) return Value::numeric(a.eval() * b.eval());
  Value out;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.add_term(x * y);
  }
  return out;
}

Value operator/(const Value& a, const Value& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.exact_ && b.is_monomial()) {
    ClosedFormValue inv = b.as_monomial().inverse();
    return a * Value(inv);
  }
  return Value::numeric(a.eval() / b.eval());
}

Value Value::pow(const Rational& exponent) const {
  if (is_monomial()) {
    ClosedFormValue m = as_monomial();
    if (m.sign() >= 0 || exponent.get_den() == 1) return Value(m.pow(exponent));
    throw DomainError("fractional power of a negative value");
  }
  if (exact_ && exponent.get_den() == 1 && exponent > 0) {
    Value out(Rational(1));
    for (unsigned long i = 0; i < exponent.get_num().get_ui(); ++i) out = out * *this;
    return out;
  }
  HighFloat v = eval();
  if (v < 0 && exponent.get_den() != 1) throw DomainError("fractional power of a negative value");
  return numeric(boost::multiprecision::pow(v, to_high(exponent)));
}

bool Value::equals(const Value& other) const {
  if (exact_ && other.exact_) return terms_ == other.terms_;
  return approx_equal(eval(), other.eval());
}

}  // namespace confinv
