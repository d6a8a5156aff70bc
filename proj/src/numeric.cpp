#include "confinv/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace confinv {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 ||
        den.set_str(text.substr(slash + 1), 10) != 0) {
      throw DomainError("malformed rational: " + text);
    }
    return make_rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") {
      throw DomainError("malformed decimal: " + text);
    }
    if (digits[0] == '+') digits.erase(0, 1);
    BigInt num;
    if (num.set_str(digits, 10) != 0) throw DomainError("malformed decimal: " + text);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    return make_rational(num, den);
  }
  std::string body = text[0] == '+' ? text.substr(1) : text;
  BigInt num;
  if (num.set_str(body, 10) != 0) throw DomainError("malformed integer: " + text);
  return Rational(num);
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

HighFloat to_high(const BigInt& v) { return HighFloat(v.get_str()); }

HighFloat to_high(const Rational& v) {
  return to_high(v.get_num()) / to_high(v.get_den());
}

std::string format_high(const HighFloat& v, int digits) {
  std::ostringstream out;
  if (v == 0) {
    out << std::fixed << std::setprecision(std::max(0, digits - 1)) << 0.0;
    return out.str();
  }
  HighFloat mag = abs(v);
  int exponent = static_cast<int>(std::floor(static_cast<double>(log10(mag))));
  if (exponent < -4 || exponent >= digits + 6) {
    out << std::scientific << std::setprecision(std::max(0, digits - 1)) << v;
  } else {
    int decimals = std::max(0, digits - 1 - exponent);
    out << std::fixed << std::setprecision(decimals) << v;
  }
  return out.str();
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt floor(const Rational& v) { return floor_div(v.get_num(), v.get_den()); }

BigInt round_nearest(const Rational& v) {
  Rational shifted = v + Rational(1, 2);
  return floor(shifted);
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor of the odd
// composite n, or 0 when the iteration budget runs out.
BigInt rho_factor(const BigInt& n) {
  constexpr unsigned long kIterations = 4'000'000;
  for (unsigned long c = 1; c < 20; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, spent = 0;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      v %= n;
    };
    while (g == 1 && spent < kIterations) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      for (unsigned long k = 0; k < r && g == 1; k += 128) {
        ys = y;
        for (unsigned long i = 0; i < std::min(128UL, r - k); ++i) {
          step(y);
          q = (q * abs(BigInt(x - y))) % n;
        }
        g = gcd(q, n);
        spent += 128;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time from the last checkpoint.
      do {
        step(ys);
        g = gcd(abs(BigInt(x - ys)), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

void split(const BigInt& m, std::map<unsigned long, unsigned long>& out) {
  if (m == 1) return;
  if (mpz_probab_prime_p(m.get_mpz_t(), 40) != 0) {
    if (!m.fits_ulong_p()) throw DomainError("prime factor exceeds 64 bits");
    ++out[m.get_ui()];
    return;
  }
  const BigInt d = rho_factor(m);
  if (d == 0) throw DomainError("cofactor too large to factor: " + m.get_str());
  split(d, out);
  split(BigInt(m / d), out);
}

}  // namespace

std::map<unsigned long, unsigned long> factorize(const BigInt& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  BigInt m = abs(n);
  std::map<unsigned long, unsigned long> out;
  auto strip = [&](unsigned long p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++out[p];
    }
  };
  strip(2);
  constexpr unsigned long kTrialLimit = 100'000;
  for (unsigned long p = 3; p <= kTrialLimit && m > 1; p += 2) {
    if (BigInt(p) * p > m) break;
    strip(p);
  }
  split(m, out);
  return out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod_pos(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("no modular inverse");
  return mod_pos(old_s, m);
}

}  // namespace confinv
