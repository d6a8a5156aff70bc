#include "confinv/harmonics.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace confinv {

long harm_space_dim(int d) {
  if (d < 0) throw DomainError("degree must be non-negative");
  return static_cast<long>(d + 1) * (d + 1);
}

ComplexPoly laplacian(const ComplexPoly& f) {
  ComplexPoly out;
  for (const auto& [e, c] : f.terms()) {
    const auto [a, b, cc, ee] = e;
    if (a > 0 && b > 0) {
      out += ComplexPoly::monomial({a - 1, b - 1, cc, ee}, c * GaussianRational(Rational(4L * a * b)));
    }
    if (cc > 0 && ee > 0) {
      out += ComplexPoly::monomial({a, b, cc - 1, ee - 1}, c * GaussianRational(Rational(4L * cc * ee)));
    }
  }
  return out;
}

LensAction::LensAction(long p_, long q_) : p(p_), q(q_) {
  if (p < 1) throw InvalidAction("lens order p must be positive");
  if (std::gcd(p, q) != 1) throw InvalidAction("lens action needs gcd(p, q) = 1");
}

long lens_weight(const Exponent& e, const LensAction& action) {
  return mod_pos((e[0] - e[1]) + action.q * (e[2] - e[3]), action.p);
}

bool is_invariant(const ComplexPoly& f, const LensAction& action) {
  for (const auto& [e, c] : f.terms()) {
    if (lens_weight(e, action) != 0) return false;
  }
  return true;
}

namespace {

std::vector<Exponent> invariant_monomials(int d, const LensAction& action) {
  std::vector<Exponent> out;
  for (const auto& e : monomials_of_degree(d)) {
    if (lens_weight(e, action) == 0) out.push_back(e);
  }
  return out;
}

std::vector<RealPoly> real_echelon_basis(const std::vector<HarmonicCandidate>& complex_basis, int d) {
  const auto monos = monomials_of_degree(d);
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

  RationalMatrix rows;
  auto push = [&](const ComplexPoly& real_valued) {
    RealPoly r = real_valued.to_real().first;
    std::vector<Rational> row(monos.size(), Rational(0));
    for (const auto& [e, c] : r.terms()) row[index.at(e)] = c;
    rows.push_back(std::move(row));
  };
  for (const auto& f : complex_basis) {
    push(f.real_part());
    push(f.imag_part());
  }
  rref(rows);
  std::vector<RealPoly> out;
  for (const auto& row : rows) {
    RealPoly::Terms t;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != 0) t.emplace(monos[i], row[i]);
    }
    if (!t.empty()) out.emplace_back(std::move(t));
  }
  return out;
}

}  // namespace

InvariantSpace lens_invariant_space(long p, long q, int d, bool with_real_basis) {
  if (d < 0) throw DomainError("degree must be non-negative");
  const LensAction action(p, q);
  const auto sources = invariant_monomials(d, action);
  const auto targets = invariant_monomials(d - 2, action);
  std::map<Exponent, std::size_t> target_index;
  for (std::size_t i = 0; i < targets.size(); ++i) target_index.emplace(targets[i], i);

  // The Laplacian has integer entries on monomials, so the kernel is defined
  // over Q and a rational basis spans the complex kernel.
  RationalMatrix m(targets.size(), std::vector<Rational>(sources.size(), Rational(0)));
  for (std::size_t j = 0; j < sources.size(); ++j) {
    const ComplexPoly image = laplacian(ComplexPoly::monomial(sources[j]));
    for (const auto& [e, c] : image.terms()) {
      m[target_index.at(e)][j] = c.re;
    }
  }
  RationalMatrix kernel = nullspace(m, sources.size());
  // Canonical echelon form of the kernel itself.
  rref(kernel);

  InvariantSpace out;
  out.dimension = static_cast<long>(kernel.size());
  for (const auto& v : kernel) {
    ComplexPoly::Terms t;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) t.emplace(sources[j], GaussianRational(v[j]));
    }
    out.complex_basis.emplace_back(std::move(t));
  }
  if (with_real_basis) {
    out.real_basis = real_echelon_basis(out.complex_basis, d);
    if (static_cast<long>(out.real_basis.size()) != out.dimension) {
      throw std::logic_error("real and complex invariant dimensions disagree");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Rational unit_angle(const Rational& a) {
  Rational r = a - Rational(floor(a));
  r.canonicalize();
  return r;
}

}  // namespace

RotationSpectrum::RotationSpectrum(std::vector<Angles> elements) {
  bool has_identity = false;
  for (auto& [a, b] : elements) {
    a = unit_angle(a);
    b = unit_angle(b);
    if (a == 0 && b == 0) has_identity = true;
  }
  if (!has_identity) throw InvalidAction("rotation spectrum must contain the identity");
  elements_ = std::move(elements);
}

RotationSpectrum RotationSpectrum::trivial() { return RotationSpectrum({{Rational(0), Rational(0)}}); }

RotationSpectrum RotationSpectrum::lens(long p, long q) {
  const LensAction action(p, q);
  std::vector<Angles> el;
  for (long k = 0; k < p; ++k) el.emplace_back(make_rational(k, p), make_rational(k * q, p));
  return RotationSpectrum(std::move(el));
}

namespace {

/// Left multiplication by a unit quaternion of angle t turns both rotation
/// planes by t. Classes given as (count, angle as fraction of a turn).
RotationSpectrum left_group(std::initializer_list<std::pair<int, Rational>> classes) {
  std::vector<RotationSpectrum::Angles> el;
  for (const auto& [count, angle] : classes) {
    for (int i = 0; i < count; ++i) el.emplace_back(angle, angle);
  }
  return RotationSpectrum(std::move(el));
}

}  // namespace

RotationSpectrum RotationSpectrum::binary_tetrahedral() {
  return left_group({{1, Rational(0)}, {1, Rational(1, 2)}, {6, Rational(1, 4)},
                     {8, Rational(1, 6)}, {8, Rational(1, 3)}});
}

RotationSpectrum RotationSpectrum::binary_octahedral() {
  return left_group({{1, Rational(0)}, {1, Rational(1, 2)}, {18, Rational(1, 4)},
                     {8, Rational(1, 6)}, {8, Rational(1, 3)}, {6, Rational(1, 8)},
                     {6, Rational(3, 8)}});
}

RotationSpectrum RotationSpectrum::binary_icosahedral() {
  return left_group({{1, Rational(0)}, {1, Rational(1, 2)}, {30, Rational(1, 4)},
                     {20, Rational(1, 6)}, {20, Rational(1, 3)}, {12, Rational(1, 10)},
                     {12, Rational(3, 10)}, {12, Rational(1, 5)}, {12, Rational(2, 5)}});
}

RotationSpectrum RotationSpectrum::dicyclic(long m) {
  if (m < 1) throw InvalidAction("dicyclic parameter must be positive");
  std::vector<Angles> el;
  for (long k = 0; k < 2 * m; ++k) {
    Rational a = make_rational(k, 2 * m);
    el.emplace_back(a, a);
  }
  for (long k = 0; k < 2 * m; ++k) el.emplace_back(Rational(1, 4), Rational(1, 4));
  return RotationSpectrum(std::move(el));
}

RotationSpectrum RotationSpectrum::with_right_cyclic(long n) const {
  if (n < 1) throw InvalidAction("cyclic order must be positive");
  std::vector<Angles> el;
  for (const auto& [a, b] : elements_) {
    if (a != b) throw InvalidAction("right factor needs a pure left-multiplication group");
    for (long k = 0; k < n; ++k) {
      Rational phi = make_rational(k, n);
      el.emplace_back(a - phi, a + phi);
    }
  }
  return RotationSpectrum(std::move(el));
}

long RotationSpectrum::common_denominator() const {
  long m = 1;
  for (const auto& [a, b] : elements_) {
    m = lcm64(m, a.get_den().get_si());
    m = lcm64(m, b.get_den().get_si());
  }
  return m;
}

namespace {

using IntPoly = std::vector<BigInt>;  // coefficient of x^i at index i

IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {BigInt(0)};
  IntPoly quot(num.size() - dn, BigInt(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    BigInt c = num[i];
    if (c == 0) continue;
    // den is monic.
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

const IntPoly& cyclotomic(long m) {
  static std::map<long, IntPoly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  IntPoly p(static_cast<std::size_t>(m) + 1, BigInt(0));
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_divide_exact(p, cyclotomic(d));
  }
  return cache.emplace(m, p).first->second;
}

/// Remainder of f modulo the monic polynomial g.
IntPoly poly_mod(IntPoly f, const IntPoly& g) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = f.size(); i-- > dg;) {
    BigInt c = f[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
  }
  f.resize(std::max<std::size_t>(dg, 1));
  return f;
}

}  // namespace

long molien_polynomial_dim(const RotationSpectrum& g, int k) {
  if (k < 0) return 0;
  const long m = g.common_denominator();
  // Character of degree-k monomials at an element: sum over (a,b,c,e) of
  // zeta^((a-b)A + (c-e)B). Accumulate exponent counts mod m, then evaluate
  // the integer polynomial at a primitive m-th root of unity by reducing
  // modulo the cyclotomic polynomial; the group average is rational.
  std::map<std::pair<int, int>, long> diff_counts;
  for (const auto& e : monomials_of_degree(k)) ++diff_counts[{e[0] - e[1], e[2] - e[3]}];

  IntPoly counts(static_cast<std::size_t>(m), BigInt(0));
  for (const auto& [a, b] : g.elements()) {
    const long ai = Rational(a * m).get_num().get_si();
    const long bi = Rational(b * m).get_num().get_si();
    for (const auto& [uv, n] : diff_counts) {
      counts[static_cast<std::size_t>(mod_pos(uv.first * ai + uv.second * bi, m))] += n;
    }
  }
  IntPoly reduced = poly_mod(counts, cyclotomic(m));
  for (std::size_t i = 1; i < reduced.size(); ++i) {
    if (reduced[i] != 0) throw std::logic_error("Molien sum is not rational; angle list is not a group");
  }
  const BigInt order = static_cast<unsigned long>(g.order());
  if (reduced[0] % order != 0) throw std::logic_error("Molien average is not an integer");
  return BigInt(reduced[0] / order).get_si();
}

long molien_invariant_dim(const RotationSpectrum& g, int d) {
  if (d < 0) throw DomainError("degree must be non-negative");
  return molien_polynomial_dim(g, d) - molien_polynomial_dim(g, d - 2);
}

}  // namespace confinv
