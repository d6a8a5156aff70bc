#pragma once

// Conformal invariants of flat product tori R^n / (r_1 Z x ... x r_n Z)
// seen through their minimal-scaled isometric embeddings, and the
// isospectral 4-torus pair built from two 4x4 integer lattices.

#include "confinv/claims.hpp"
#include "confinv/closedform.hpp"
#include "confinv/lattice.hpp"

#include <vector>

namespace confinv {

class DegenerateDirection : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Direction r = (r_1..r_n) up to scale, stored as rational entry squares
/// (so entries like sqrt(3)/2 stay exact). Only squares enter the formulas.
class TorusDirection {
 public:
  explicit TorusDirection(std::vector<Rational> squares);
  static TorusDirection from_integers(const lattice::IntVector& v);
  static TorusDirection from_direction(const lattice::DirectionVector& v) {
    return from_integers(v.entries());
  }

  std::size_t dim() const { return squares_.size(); }
  const std::vector<Rational>& squares() const { return squares_; }
  /// Entry squares rescaled to sum to 1.
  std::vector<Rational> unit_squares() const;
  Rational squared_length() const;
  /// sum 1/r_i^2 of the unit vector.
  Rational inverse_square_sum() const;
  /// prod r_i of the unit vector (entries taken positive).
  ClosedFormValue unit_product() const;

 private:
  std::vector<Rational> squares_;
};

struct TorusInvariants {
  int n = 0;
  Value mean_sq;
  Value second_sq;
  Value volume;
  Value c2;
  Value W;
  Value D;
};

TorusInvariants torus_invariants(const TorusDirection& r);
/// n^2 (c^2)^(n/2) vol: the second route to W, used as a cross-check.
Value torus_w_via_scaling(const TorusInvariants& t);
TorusInvariants canonical_torus(int n);

/// (sum 1/r_i^2)^2 prod r_i for n = 4, which equals W / pi^4.
Value cs_ratio(const TorusDirection& r);

/// Two rank-4 lattices with their published successive-minima bases S and
/// change-of-basis matrices C (B C = S).
struct IsospectralPairData {
  lattice::IntMatrix b1, b2, c1, c2, s1, s2;
};

const IsospectralPairData& builtin_isospectral_pair();

struct IsospectralPairReport {
  std::vector<Claim> claims;
  lattice::ShortestBasis basis1, basis2;
};

/// Volumes, theta equality to norm 4000, successive-minima bases, B C = S,
/// conformal directions and ratios, each as a claim.
IsospectralPairReport conway_sloane_report(
    const IsospectralPairData& data = builtin_isospectral_pair(),
    const lattice::EnumerationOptions& options = {});

/// Whether two integer vectors agree up to a permutation and sign changes.
bool equal_up_to_signed_permutation(const lattice::IntVector& a, const lattice::IntVector& b);

}  // namespace confinv
