#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace confinv {

using BigInt = mpz_class;
using Rational = mpq_class;

// ~80 significant decimal digits; enough headroom for 50-digit rendering.
using HighFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<80>, boost::multiprecision::et_off>;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Enumeration or search exceeded its configured work budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "a", "-a/b" or a finite decimal such as "0.5" into an exact rational.
Rational parse_rational(const std::string& text);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

HighFloat to_high(const BigInt& v);
HighFloat to_high(const Rational& v);

/// Fixed rendering with `digits` significant digits (scientific when the
/// magnitude makes fixed notation unreadable).
std::string format_high(const HighFloat& v, int digits);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor(const Rational& v);
BigInt round_nearest(const Rational& v);

/// Prime factorization of |n| for n != 0. Trial division; throws DomainError
/// when a cofactor is too large to certify as prime.
std::map<unsigned long, unsigned long> factorize(const BigInt& n);

/// Unsigned 64-bit gcd/lcm/modular helpers for small-number arithmetic.
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t mod_pos(std::int64_t a, std::int64_t m);
/// Inverse of a modulo m; requires gcd(a, m) = 1, m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace confinv
