#include "confinv/polynomial.hpp"

#include <sstream>

namespace confinv {

std::string GaussianRational::to_string() const {
  if (im == 0) return confinv::to_string(re);
  if (re == 0) return confinv::to_string(im) + "i";
  return "(" + confinv::to_string(re) + (im > 0 ? "+" : "") + confinv::to_string(im) + "i)";
}

std::vector<Exponent> monomials_of_degree(int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  for (int a = d; a >= 0; --a) {
    for (int b = d - a; b >= 0; --b) {
      for (int c = d - a - b; c >= 0; --c) out.push_back({a, b, c, d - a - b - c});
    }
  }
  return out;
}

namespace {

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

int degree_of(const auto& terms) {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, total_degree(e));
  return d;
}

template <class Terms>
bool homogeneous(const Terms& terms, int d) {
  for (const auto& [e, c] : terms) {
    if (total_degree(e) != d) return false;
  }
  return true;
}

const char* kRealNames[4] = {"x", "y", "z", "w"};
const char* kComplexNames[4] = {"z1", "cz1", "z2", "cz2"};

template <class Terms, class Format>
std::string render(const Terms& terms, const char* const* names, Format coeff_text) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    std::string text = coeff_text(c);
    if (!first) {
      if (text.front() == '-') {
        out << " - ";
        text.erase(0, 1);
      } else {
        out << " + ";
      }
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out << text;
    } else if (text == "1") {
      out << factors;
    } else if (text == "-1") {
      out << "-" << factors;
    } else {
      out << text << "*" << factors;
    }
  }
  return out.str();
}

}  // namespace

// --- RealPoly --------------------------------------------------------------

RealPoly::RealPoly(Terms terms) {
  for (auto& [e, c] : terms) add(e, c);
}

RealPoly RealPoly::constant(const Rational& c) {
  RealPoly p;
  p.add({0, 0, 0, 0}, c);
  return p;
}

RealPoly RealPoly::variable(int index) {
  Exponent e{0, 0, 0, 0};
  e.at(static_cast<std::size_t>(index)) = 1;
  RealPoly p;
  p.add(e, Rational(1));
  return p;
}

void RealPoly::add(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int RealPoly::degree() const { return degree_of(terms_); }
bool RealPoly::is_homogeneous(int d) const { return homogeneous(terms_, d); }

RealPoly RealPoly::derivative(int index) const {
  RealPoly out;
  const auto i = static_cast<std::size_t>(index);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    out.add(f, c * e[i]);
  }
  return out;
}

Rational RealPoly::evaluate(const std::array<Rational, 4>& point) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < 4; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

RealPoly& RealPoly::operator+=(const RealPoly& other) {
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
  RealPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add(add_exponents(ea, eb), ca * cb);
  }
  return out;
}

RealPoly operator*(const RealPoly& a, const Rational& c) {
  RealPoly out;
  for (const auto& [e, x] : a.terms_) out.add(e, x * c);
  return out;
}

RealPoly RealPoly::pow(unsigned k) const {
  RealPoly out = constant(Rational(1));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string RealPoly::to_string() const {
  return render(terms_, kRealNames, [](const Rational& c) { return confinv::to_string(c); });
}

// --- ComplexPoly -----------------------------------------------------------

ComplexPoly::ComplexPoly(Terms terms) {
  for (auto& [e, c] : terms) add(e, c);
}

ComplexPoly ComplexPoly::monomial(const Exponent& e, const GaussianRational& c) {
  ComplexPoly p;
  p.add(e, c);
  return p;
}

void ComplexPoly::add(const Exponent& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int ComplexPoly::degree() const { return degree_of(terms_); }
bool ComplexPoly::is_homogeneous(int d) const { return homogeneous(terms_, d); }

ComplexPoly ComplexPoly::conj() const {
  ComplexPoly out;
  for (const auto& [e, c] : terms_) out.add({e[1], e[0], e[3], e[2]}, c.conj());
  return out;
}

ComplexPoly ComplexPoly::real_part() const {
  return (*this + conj()) * GaussianRational(Rational(1, 2));
}

ComplexPoly ComplexPoly::imag_part() const {
  // (f - conj f) / (2i) = -i/2 (f - conj f)
  return (*this - conj()) * GaussianRational(Rational(0), Rational(-1, 2));
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& other) {
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  ComplexPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add(add_exponents(ea, eb), ca * cb);
  }
  return out;
}

ComplexPoly operator*(const ComplexPoly& a, const GaussianRational& c) {
  ComplexPoly out;
  for (const auto& [e, x] : a.terms_) out.add(e, x * c);
  return out;
}

ComplexPoly ComplexPoly::pow(unsigned k) const {
  ComplexPoly out = constant(Rational(1));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

ComplexPoly squared_radius() {
  return ComplexPoly::monomial({1, 1, 0, 0}) + ComplexPoly::monomial({0, 0, 1, 1});
}

namespace {

/// Complex-valued polynomial in x, y, z, w, used for coordinate changes.
using MixedTerms = std::map<Exponent, GaussianRational>;

MixedTerms mixed_mul(const MixedTerms& a, const MixedTerms& b) {
  MixedTerms out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      auto key = add_exponents(ea, eb);
      auto& slot = out[key];
      slot = slot + ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

template <class Substitution>
MixedTerms substitute(const std::map<Exponent, GaussianRational>& terms, const Substitution& linear) {
  // Power tables of the four linear forms.
  std::array<std::vector<MixedTerms>, 4> powers;
  int top = 0;
  for (const auto& [e, c] : terms) {
    for (int v : e) top = std::max(top, v);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    powers[i].push_back({{Exponent{0, 0, 0, 0}, GaussianRational(Rational(1))}});
    for (int k = 1; k <= top; ++k) powers[i].push_back(mixed_mul(powers[i].back(), linear[i]));
  }
  MixedTerms out;
  for (const auto& [e, c] : terms) {
    MixedTerms t{{Exponent{0, 0, 0, 0}, c}};
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i]) t = mixed_mul(t, powers[i][static_cast<std::size_t>(e[i])]);
    }
    for (const auto& [k, v] : t) {
      auto& slot = out[k];
      slot = slot + v;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

Exponent unit(int i) {
  Exponent e{0, 0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

}  // namespace

std::pair<RealPoly, RealPoly> ComplexPoly::to_real(Chart chart) const {
  const Rational s = chart == Chart::Standard ? 1 : -1;
  const Rational one = 1;
  std::array<MixedTerms, 4> linear{
      MixedTerms{{unit(0), {one, 0}}, {unit(1), {0, one}}},    // z1 = x + i y
      MixedTerms{{unit(0), {one, 0}}, {unit(1), {0, -one}}},   // conj z1
      MixedTerms{{unit(2), {one, 0}}, {unit(3), {0, s}}},      // z2 = z + s i w
      MixedTerms{{unit(2), {one, 0}}, {unit(3), {0, -s}}},     // conj z2
  };
  MixedTerms mixed = substitute(terms_, linear);
  RealPoly::Terms re, im;
  for (const auto& [e, c] : mixed) {
    if (c.re != 0) re[e] = c.re;
    if (c.im != 0) im[e] = c.im;
  }
  return {RealPoly(re), RealPoly(im)};
}

ComplexPoly ComplexPoly::from_real(const RealPoly& p, Chart chart) {
  const Rational s = chart == Chart::Standard ? 1 : -1;
  const Rational half(1, 2);
  std::array<MixedTerms, 4> linear{
      MixedTerms{{unit(0), {half, 0}}, {unit(1), {half, 0}}},          // x
      MixedTerms{{unit(0), {0, -half}}, {unit(1), {0, half}}},         // y
      MixedTerms{{unit(2), {half, 0}}, {unit(3), {half, 0}}},          // z
      MixedTerms{{unit(2), {0, -half * s}}, {unit(3), {0, half * s}}}, // w
  };
  std::map<Exponent, GaussianRational> real_terms;
  for (const auto& [e, c] : p.terms()) real_terms.emplace(e, GaussianRational(c));
  return ComplexPoly(substitute(real_terms, linear));
}

std::string ComplexPoly::to_string() const {
  return render(terms_, kComplexNames, [](const GaussianRational& c) { return c.to_string(); });
}

// --- exact linear algebra ---------------------------------------------------

std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RationalMatrix nullspace(const RationalMatrix& input, std::size_t cols) {
  RationalMatrix m = input;
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace confinv
