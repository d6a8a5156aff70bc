#pragma once

// Exact integer lattices: Gram data, volume, LLL-assisted Fincke-Pohst
// enumeration over the exact Gram matrix, theta series and greedy
// successive-minima bases.

#include "confinv/numeric.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confinv::lattice {

using IntVector = std::vector<BigInt>;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidLattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major literal.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  void set_column(std::size_t c, const IntVector& v);
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& x);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Bareiss fraction-free determinant.
BigInt determinant(const IntMatrix& m);

BigInt dot(const IntVector& a, const IntVector& b);
BigInt squared_norm(const IntVector& v);

/// Full-rank lattice in Z^n spanned by the basis columns, 2 <= n <= 8.
class IntegerLattice {
 public:
  explicit IntegerLattice(IntMatrix basis);

  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  const IntMatrix& gram() const { return gram_; }
  /// Whether v lies in the lattice; fills coefficients when it does.
  bool contains(const IntVector& v, IntVector* coefficients = nullptr) const;

 private:
  IntMatrix basis_;
  IntMatrix gram_;
};

struct LatticeVolume {
  BigInt volume;
  int orientation;  // +1 or -1, sign of det(basis)
};

LatticeVolume lattice_volume(const IntegerLattice& lattice);

struct EnumerationOptions {
  /// Run exact LLL (delta = 3/4) before enumerating. Results never depend on it.
  bool lll_preprocess = true;
  /// Maximum number of enumeration tree nodes before BudgetError.
  std::uint64_t node_budget = 100'000'000;
};

struct ShortestBasis {
  IntMatrix columns;           // lattice vectors, non-decreasing squared norm
  IntMatrix change_of_basis;   // basis * change_of_basis == columns
  std::vector<BigInt> squared_norms;
};

/// Greedy successive-minima basis. Rank must be <= 6.
ShortestBasis shortest_basis(const IntegerLattice& lattice, const EnumerationOptions& options = {});

/// Counts of lattice vectors per squared norm m <= bound (zero vector at m = 0).
std::map<BigInt, std::uint64_t> theta_series(const IntegerLattice& lattice, const BigInt& bound,
                                             const EnumerationOptions& options = {});

/// Every lattice vector (as coefficients w.r.t. the input basis) with squared
/// norm <= bound, in deterministic order (norm, then lexicographic).
std::vector<IntVector> short_vectors(const IntegerLattice& lattice, const BigInt& bound,
                                     const EnumerationOptions& options = {});

/// True iff B*C == S and |det C| == 1. Throws ShapeError on size mismatch.
bool basis_change_verify(const IntMatrix& b, const IntMatrix& c, const IntMatrix& s);

/// Whether the columns of s form a greedy successive-minima basis of the
/// lattice (each column is as short as any vector extending the preceding
/// columns to a primitive sublattice).
bool is_successive_minima_basis(const IntegerLattice& lattice, const IntMatrix& s,
                                const EnumerationOptions& options = {});

/// Whether the integer columns are independent and span a primitive
/// (saturated) sublattice of Z^n.
bool is_primitive_system(const std::vector<IntVector>& columns);

/// Exact rational LLL on a Gram matrix; returns the unimodular transform U
/// such that U^T G U is reduced.
IntMatrix lll_transform(const IntMatrix& gram, const Rational& delta = Rational(3, 4));

// ---------------------------------------------------------------------------

/// Primitive integer direction v, standing for the unit vector v/|v|.
/// Normalized: gcd of entries is 1 and the first nonzero entry is positive.
class DirectionVector {
 public:
  explicit DirectionVector(IntVector entries);

  std::size_t dim() const { return entries_.size(); }
  const IntVector& entries() const { return entries_; }
  BigInt squared_length() const { return squared_norm(entries_); }
  std::string to_string() const;

  friend bool operator==(const DirectionVector& a, const DirectionVector& b) = default;

 private:
  IntVector entries_;
};

struct ConformalDirection {
  IntVector sum;          // sum of the basis columns, as printed
  BigInt sum_squared_length;
  DirectionVector direction;  // primitive form of `sum`
};

/// Sum of the columns of a shortest basis, with its primitive normalization.
ConformalDirection conformal_direction(const IntMatrix& shortest_columns);
inline ConformalDirection conformal_direction(const ShortestBasis& s) {
  return conformal_direction(s.columns);
}

/// {"rank": n, "basis_columns": [[...], ...]}; integers may be JSON numbers
/// or decimal strings.
IntegerLattice parse_lattice_json(const std::string& text);
std::string lattice_to_json(const IntegerLattice& lattice);

}  // namespace confinv::lattice
