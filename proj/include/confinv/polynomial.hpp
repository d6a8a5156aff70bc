#pragma once

// Polynomials on R^4 = C^2 with exact coefficients, in two coordinate
// systems: real (x, y, z, w) with rational coefficients, and complex
// monomials z1^a conj(z1)^b z2^c conj(z2)^e with Gaussian-rational
// coefficients. Plus the exact rational row reduction used for kernels.

#include "confinv/numeric.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace confinv {

struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  std::string to_string() const;
};

using Exponent = std::array<int, 4>;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

/// All exponent tuples of total degree d, in lexicographic order.
std::vector<Exponent> monomials_of_degree(int d);

/// Real polynomial in x, y, z, w.
class RealPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  RealPoly() = default;
  explicit RealPoly(Terms terms);
  static RealPoly constant(const Rational& c);
  /// Coordinate function: 0 -> x, 1 -> y, 2 -> z, 3 -> w.
  static RealPoly variable(int index);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int d) const;

  RealPoly derivative(int index) const;
  Rational evaluate(const std::array<Rational, 4>& point) const;

  RealPoly& operator+=(const RealPoly& other);
  friend RealPoly operator+(RealPoly a, const RealPoly& b) { return a += b; }
  friend RealPoly operator-(const RealPoly& a, const RealPoly& b) { return a + b * Rational(-1); }
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator*(const RealPoly& a, const Rational& c);
  RealPoly pow(unsigned k) const;
  friend bool operator==(const RealPoly& a, const RealPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add(const Exponent& e, const Rational& c);
  Terms terms_;
};

/// How the second complex coordinate sits in R^4. Standard: z2 = z + i w.
/// Conjugate: z2 = z - i w (an orientation-reversing relabelling).
enum class Chart { Standard, Conjugate };

/// Polynomial in z1, conj(z1), z2, conj(z2); exponent (a, b, c, e).
class ComplexPoly {
 public:
  using Terms = std::map<Exponent, GaussianRational>;

  ComplexPoly() = default;
  explicit ComplexPoly(Terms terms);
  static ComplexPoly monomial(const Exponent& e, const GaussianRational& c = Rational(1));
  static ComplexPoly constant(const GaussianRational& c) { return monomial({0, 0, 0, 0}, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_homogeneous(int d) const;

  /// Complex conjugate: (a,b,c,e) -> (b,a,e,c) with conjugated coefficients.
  ComplexPoly conj() const;
  /// Real-valued on R^4 (conjugation symmetric).
  bool is_real() const { return conj() == *this; }
  ComplexPoly real_part() const;
  ComplexPoly imag_part() const;

  ComplexPoly& operator+=(const ComplexPoly& other);
  friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
  friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
    return a + b * GaussianRational(Rational(-1));
  }
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator*(const ComplexPoly& a, const GaussianRational& c);
  ComplexPoly pow(unsigned k) const;
  friend bool operator==(const ComplexPoly& a, const ComplexPoly& b) { return a.terms_ == b.terms_; }

  /// Real and imaginary parts as polynomials in x, y, z, w.
  std::pair<RealPoly, RealPoly> to_real(Chart chart = Chart::Standard) const;
  static ComplexPoly from_real(const RealPoly& p, Chart chart = Chart::Standard);

  std::string to_string() const;

 private:
  void add(const Exponent& e, const GaussianRational& c);
  Terms terms_;
};

/// |x|^2 = z1 conj(z1) + z2 conj(z2).
ComplexPoly squared_radius();

// ---------------------------------------------------------------------------

using RationalMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

/// Basis of the right kernel {x : M x = 0}, one vector per free column, in
/// canonical form (the free variable set to 1, others free set to 0).
RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols);

}  // namespace confinv
