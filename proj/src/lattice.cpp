#include "confinv/lattice.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>

namespace confinv::lattice {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
  if (columns.empty()) return {};
  IntMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void IntMatrix::set_column(std::size_t c, const IntVector& v) {
  if (v.size() != rows_) throw ShapeError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols_ != x.size()) throw ShapeError("matrix-vector shape mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * x[k];
  }
  return out;
}

BigInt determinant(const IntMatrix& input) {
  if (!input.is_square()) throw ShapeError("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigInt dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ShapeError("dot product length mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt squared_norm(const IntVector& v) { return dot(v, v); }

// ---------------------------------------------------------------------------

IntegerLattice::IntegerLattice(IntMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square()) throw InvalidLattice("basis must be square");
  if (basis_.rows() < 2 || basis_.rows() > 8) throw InvalidLattice("rank must be within 2..8");
  if (determinant(basis_) == 0) throw InvalidLattice("singular basis");
  gram_ = basis_.transpose() * basis_;
}

namespace {

/// Solves A x = v over Q for square nonsingular A.
std::vector<Rational> solve_rational(const IntMatrix& a, const IntVector& v) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n] = v[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InvalidLattice("singular system");
    std::swap(m[pivot], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

}  // namespace

bool IntegerLattice::contains(const IntVector& v, IntVector* coefficients) const {
  if (v.size() != rank()) throw ShapeError("vector length does not match lattice rank");
  auto x = solve_rational(basis_, v);
  IntVector out;
  out.reserve(x.size());
  for (const auto& xi : x) {
    if (xi.get_den() != 1) return false;
    out.push_back(xi.get_num());
  }
  if (coefficients) *coefficients = std::move(out);
  return true;
}

LatticeVolume lattice_volume(const IntegerLattice& lattice) {
  BigInt det = determinant(lattice.basis());
  return {abs(det), sgn(det) > 0 ? 1 : -1};
}

// ---------------------------------------------------------------------------

namespace {

struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;  // mu[i][j], j < i
  std::vector<Rational> bstar;            // squared GS norms
};

GramSchmidt gram_schmidt(const IntMatrix& g) {
  const std::size_t n = g.rows();
  GramSchmidt gs;
  gs.mu.assign(n, std::vector<Rational>(n));
  gs.bstar.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= gs.mu[j][k] * gs.mu[i][k] * gs.bstar[k];
      gs.mu[i][j] = s / gs.bstar[j];
    }
    Rational b = g(i, i);
    for (std::size_t k = 0; k < i; ++k) b -= gs.mu[i][k] * gs.mu[i][k] * gs.bstar[k];
    if (b <= 0) throw InvalidLattice("Gram matrix is not positive definite");
    gs.bstar[i] = b;
  }
  return gs;
}

IntMatrix congruent(const IntMatrix& g, const IntMatrix& u) { return u.transpose() * g * u; }

}  // namespace

IntMatrix lll_transform(const IntMatrix& gram, const Rational& delta) {
  const std::size_t n = gram.rows();
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::size_t k = 1;
  std::size_t guard = 0;
  while (k < n) {
    if (++guard > 100000) throw BudgetError("LLL failed to converge");
    IntMatrix g = congruent(gram, u);
    GramSchmidt gs = gram_schmidt(g);
    bool reduced_any = false;
    for (std::size_t jj = k; jj-- > 0;) {
      BigInt r = round_nearest(gs.mu[k][jj]);
      if (r == 0) continue;
      for (std::size_t row = 0; row < n; ++row) u(row, k) -= r * u(row, jj);
      for (std::size_t l = 0; l <= jj; ++l) gs.mu[k][l] -= Rational(r) * (l == jj ? Rational(1) : gs.mu[jj][l]);
      reduced_any = true;
    }
    if (reduced_any) gs = gram_schmidt(congruent(gram, u));
    const Rational lhs = gs.bstar[k];
    const Rational rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.bstar[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      for (std::size_t row = 0; row < n; ++row) std::swap(u(row, k), u(row, k - 1));
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return u;
}

namespace {

/// Fincke-Pohst enumeration of all integer x with x^T G x <= bound, over the
/// exact Gram-Schmidt data of G. The visitor receives the coefficient vector.
class Enumerator {
 public:
  Enumerator(const IntMatrix& gram, std::uint64_t budget)
      : n_(gram.rows()), gs_(gram_schmidt(gram)), budget_(budget) {}

  void run(const Rational& bound, const std::function<void(const IntVector&)>& visit) {
    x_.assign(n_, BigInt(0));
    visit_ = &visit;
    nodes_ = 0;
    descend(n_ - 1, bound);
  }

 private:
  void descend(std::size_t level, const Rational& remaining) {
    Rational center = 0;
    for (std::size_t j = level + 1; j < n_; ++j) center += gs_.mu[j][level] * x_[j];
    const Rational& weight = gs_.bstar[level];
    auto fits = [&](const BigInt& xi, Rational* rest) {
      Rational t = Rational(xi) + center;
      Rational used = weight * t * t;
      if (used > remaining) return false;
      *rest = remaining - used;
      return true;
    };
    const BigInt start = round_nearest(-center);
    Rational rest;
    if (!fits(start, &rest)) return;
    auto step = [&](const BigInt& xi, const Rational& r) {
      if (++nodes_ > budget_) throw BudgetError("enumeration budget exceeded");
      x_[level] = xi;
      if (level == 0) {
        (*visit_)(x_);
      } else {
        descend(level - 1, r);
      }
    };
    step(start, rest);
    for (BigInt xi = start + 1; fits(xi, &rest); ++xi) step(xi, rest);
    for (BigInt xi = start - 1; fits(xi, &rest); --xi) step(xi, rest);
    x_[level] = 0;
  }

  std::size_t n_;
  GramSchmidt gs_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  IntVector x_;
  const std::function<void(const IntVector&)>* visit_ = nullptr;
};

struct NormedVector {
  BigInt norm;
  IntVector coeffs;  // w.r.t. the input basis
};

bool norm_lex_less(const NormedVector& a, const NormedVector& b) {
  if (a.norm != b.norm) return a.norm < b.norm;
  return a.coeffs < b.coeffs;
}

BigInt quadratic_form(const IntMatrix& g, const IntVector& x) {
  BigInt s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * g(i, j) * x[j];
  }
  return s;
}

/// All vectors with norm <= bound, coefficients in the input basis.
std::vector<NormedVector> collect(const IntegerLattice& lattice, const BigInt& bound,
                                  const EnumerationOptions& options) {
  IntMatrix u = options.lll_preprocess ? lll_transform(lattice.gram())
                                       : IntMatrix::identity(lattice.rank());
  IntMatrix reduced = congruent(lattice.gram(), u);
  Enumerator en(reduced, options.node_budget);
  std::vector<NormedVector> out;
  en.run(Rational(bound), [&](const IntVector& x) {
    IntVector coeffs = u * x;
    out.push_back({quadratic_form(lattice.gram(), coeffs), std::move(coeffs)});
  });
  std::sort(out.begin(), out.end(), norm_lex_less);
  return out;
}

bool first_nonzero_positive(const IntVector& v) {
  for (const auto& e : v) {
    if (e != 0) return e > 0;
  }
  return false;
}

/// Sign-normalized nonzero vectors, sorted by (norm, lexicographic coeffs).
std::vector<NormedVector> normalized_candidates(const IntegerLattice& lattice, const BigInt& bound,
                                                const EnumerationOptions& options) {
  std::vector<NormedVector> all = collect(lattice, bound, options);
  std::vector<NormedVector> out;
  for (auto& v : all) {
    if (v.norm == 0 || !first_nonzero_positive(v.coeffs)) continue;
    out.push_back(std::move(v));
  }
  return out;
}

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (cur.size() == k) {
    f(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, f);
    cur.pop_back();
  }
}

BigInt max_diagonal(const IntMatrix& g) {
  BigInt m = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) m = std::max(m, g(i, i));
  return m;
}

/// Shortest vector (by the tie rule) extending `chosen` to a primitive system.
NormedVector shortest_extension(const IntegerLattice& lattice, const std::vector<IntVector>& chosen,
                                const EnumerationOptions& options) {
  BigInt bound = max_diagonal(options.lll_preprocess
                                  ? congruent(lattice.gram(), lll_transform(lattice.gram()))
                                  : lattice.gram());
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (const auto& cand : normalized_candidates(lattice, bound, options)) {
      std::vector<IntVector> trial = chosen;
      trial.push_back(cand.coeffs);
      if (is_primitive_system(trial)) return cand;
    }
    bound *= 2;
  }
  throw BudgetError("no primitive extension found");
}

}  // namespace

bool is_primitive_system(const std::vector<IntVector>& columns) {
  if (columns.empty()) return true;
  const std::size_t n = columns.front().size();
  const std::size_t k = columns.size();
  if (k > n) return false;
  BigInt g = 0;
  std::vector<std::size_t> cur;
  combinations(n, k, 0, cur, [&](const std::vector<std::size_t>& rows) {
    if (g == 1) return;
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = columns[j][rows[i]];
    }
    BigInt d = determinant(minor);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  });
  return g == 1;
}

std::vector<IntVector> short_vectors(const IntegerLattice& lattice, const BigInt& bound,
                                     const EnumerationOptions& options) {
  std::vector<IntVector> out;
  for (auto& v : collect(lattice, bound, options)) out.push_back(std::move(v.coeffs));
  return out;
}

std::map<BigInt, std::uint64_t> theta_series(const IntegerLattice& lattice, const BigInt& bound,
                                             const EnumerationOptions& options) {
  if (bound < 0) throw DomainError("theta bound must be non-negative");
  IntMatrix u = options.lll_preprocess ? lll_transform(lattice.gram())
                                       : IntMatrix::identity(lattice.rank());
  IntMatrix reduced = congruent(lattice.gram(), u);
  Enumerator en(reduced, options.node_budget);
  std::map<BigInt, std::uint64_t> counts;
  en.run(Rational(bound), [&](const IntVector& x) { ++counts[quadratic_form(reduced, x)]; });
  return counts;
}

ShortestBasis shortest_basis(const IntegerLattice& lattice, const EnumerationOptions& options) {
  const std::size_t n = lattice.rank();
  if (n > 6) throw DomainError("shortest_basis supports rank <= 6");
  std::vector<IntVector> chosen;
  ShortestBasis out;
  for (std::size_t k = 0; k < n; ++k) {
    NormedVector next = shortest_extension(lattice, chosen, options);
    chosen.push_back(next.coeffs);
    out.squared_norms.push_back(next.norm);
  }
  out.change_of_basis = IntMatrix::from_columns(chosen);
  out.columns = lattice.basis() * out.change_of_basis;
  return out;
}

bool basis_change_verify(const IntMatrix& b, const IntMatrix& c, const IntMatrix& s) {
  if (!b.is_square() || !c.is_square() || !s.is_square() || b.rows() != c.rows() ||
      b.rows() != s.rows()) {
    throw ShapeError("basis_change_verify expects square matrices of equal size");
  }
  if (b * c != s) return false;
  return abs(determinant(c)) == 1;
}

bool is_successive_minima_basis(const IntegerLattice& lattice, const IntMatrix& s,
                                const EnumerationOptions& options) {
  if (!s.is_square() || s.rows() != lattice.rank()) throw ShapeError("basis shape mismatch");
  std::vector<IntVector> chosen;
  BigInt previous = 0;
  for (std::size_t k = 0; k < s.cols(); ++k) {
    IntVector coeffs;
    if (!lattice.contains(s.column(k), &coeffs)) return false;
    BigInt norm = squared_norm(s.column(k));
    if (norm < previous) return false;
    NormedVector best = shortest_extension(lattice, chosen, options);
    if (best.norm != norm) return false;
    chosen.push_back(coeffs);
    if (!is_primitive_system(chosen)) return false;
    previous = norm;
  }
  return true;
}

// ---------------------------------------------------------------------------

DirectionVector::DirectionVector(IntVector entries) : entries_(std::move(entries)) {
  BigInt g = 0;
  for (const auto& e : entries_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g == 0) throw DomainError("degenerate direction: zero vector");
  for (auto& e : entries_) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
  if (!first_nonzero_positive(entries_)) {
    for (auto& e : entries_) e = -e;
  }
}

std::string DirectionVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i].get_str();
  }
  return out + ")";
}

ConformalDirection conformal_direction(const IntMatrix& shortest_columns) {
  IntVector sum(shortest_columns.rows());
  for (std::size_t c = 0; c < shortest_columns.cols(); ++c) {
    for (std::size_t r = 0; r < shortest_columns.rows(); ++r) sum[r] += shortest_columns(r, c);
  }
  BigInt sq = squared_norm(sum);
  if (sq == 0) throw DomainError("degenerate direction: generators sum to zero");
  return {sum, sq, DirectionVector(sum)};
}

// ---------------------------------------------------------------------------

namespace {

BigInt json_integer(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InvalidLattice("bad integer string");
    return v;
  }
  throw InvalidLattice("lattice entries must be integers");
}

}  // namespace

IntegerLattice parse_lattice_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidLattice(std::string("lattice JSON parse error: ") + e.what());
  }
  if (!doc.contains("rank") || !doc.contains("basis_columns")) {
    throw InvalidLattice("lattice JSON needs \"rank\" and \"basis_columns\"");
  }
  const auto n = doc["rank"].get<std::size_t>();
  const auto& cols = doc["basis_columns"];
  if (!cols.is_array() || cols.size() != n) throw InvalidLattice("expected rank many columns");
  std::vector<IntVector> columns;
  for (const auto& col : cols) {
    if (!col.is_array() || col.size() != n) throw InvalidLattice("each column needs rank entries");
    IntVector v;
    for (const auto& e : col) v.push_back(json_integer(e));
    columns.push_back(std::move(v));
  }
  return IntegerLattice(IntMatrix::from_columns(columns));
}

std::string lattice_to_json(const IntegerLattice& lattice) {
  nlohmann::ordered_json doc;
  doc["rank"] = lattice.rank();
  doc["basis_columns"] = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < lattice.rank(); ++c) {
    nlohmann::ordered_json col = nlohmann::ordered_json::array();
    for (const auto& e : lattice.basis().column(c)) {
      if (e.fits_slong_p()) {
        col.push_back(e.get_si());
      } else {
        col.push_back(e.get_str());
      }
    }
    doc["basis_columns"].push_back(col);
  }
  return doc.dump();
}

}  // namespace confinv::lattice
