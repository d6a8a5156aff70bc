#pragma once

// Homogeneous harmonic polynomials on R^4 and the subspaces fixed by finite
// subgroups of SO(4): exact kernels for cyclic (lens) actions, Molien
// counts for groups given by their rotation angles.

#include "confinv/polynomial.hpp"

#include <utility>
#include <vector>

namespace confinv {

/// sum coeff * z1^a conj(z1)^b z2^c conj(z2)^e, homogeneous of degree d.
using HarmonicCandidate = ComplexPoly;

class InvalidAction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (d+1)^2, the dimension of degree-d harmonics on R^4.
long harm_space_dim(int d);

/// 4 (d_z1 d_cz1 + d_z2 d_cz2) f, the Euclidean Laplacian in complex form.
ComplexPoly laplacian(const ComplexPoly& f);

/// Generator (z1, z2) -> (w z1, w^q z2), w = exp(2 pi i / p).
struct LensAction {
  long p = 1;
  long q = 0;
  LensAction(long p_, long q_);
};

/// (a - b) + q (c - e) mod p.
long lens_weight(const Exponent& e, const LensAction& action);
bool is_invariant(const ComplexPoly& f, const LensAction& action);

struct InvariantSpace {
  long dimension = 0;
  /// Kernel basis in reduced echelon form over the invariant monomials.
  std::vector<HarmonicCandidate> complex_basis;
  /// Real-valued basis (x, y, z, w coordinates), reduced echelon form.
  std::vector<RealPoly> real_basis;
};

/// Harmonic polynomials of degree d invariant under the lens action.
InvariantSpace lens_invariant_space(long p, long q, int d, bool with_real_basis = true);

/// A finite subgroup of SO(4) (or a homomorphic image) listed element by
/// element through its two rotation angles, as fractions of a full turn.
class RotationSpectrum {
 public:
  using Angles = std::pair<Rational, Rational>;

  explicit RotationSpectrum(std::vector<Angles> elements);

  static RotationSpectrum trivial();
  static RotationSpectrum lens(long p, long q);
  /// Left multiplication by the binary polyhedral groups (orders 24, 48, 120)
  /// and the dicyclic group of order 4m.
  static RotationSpectrum binary_tetrahedral();
  static RotationSpectrum binary_octahedral();
  static RotationSpectrum binary_icosahedral();
  static RotationSpectrum dicyclic(long m);
  /// Composes a left-multiplication group with right multiplication by the
  /// cyclic group of order n (a homomorphic image of the direct product).
  RotationSpectrum with_right_cyclic(long n) const;

  std::size_t order() const { return elements_.size(); }
  const std::vector<Angles>& elements() const { return elements_; }
  /// Least common denominator of all angles.
  long common_denominator() const;

 private:
  std::vector<Angles> elements_;
};

/// Dimension of invariant polynomials of degree k (Molien coefficient).
long molien_polynomial_dim(const RotationSpectrum& g, int k);
/// Dimension of invariant harmonics of degree d: c_d - c_(d-2).
long molien_invariant_dim(const RotationSpectrum& g, int d);

}  // namespace confinv
