#pragma once

// Arithmetic of Kummer surfaces T^4/{+-1}: the sixteen singular points,
// the Kahler-class normalization s_Lambda and the volume it fixes.

#include "confinv/invariants.hpp"

#include <array>
#include <vector>

namespace confinv {

class ClassNotInCone : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using Vec4 = std::array<Rational, 4>;

class KummerLattice {
 public:
  /// Generators gamma_1..gamma_4 as real 4-vectors; 16 positive weights.
  KummerLattice(std::array<Vec4, 4> generators, std::vector<Rational> weights);
  /// The square lattice spanned by (1,0), (i,0), (0,1), (0,i) in C^2.
  static KummerLattice square(std::vector<Rational> weights = std::vector<Rational>(16, Rational(1)));
  /// diag(det, 1, 1, 1): a lattice with prescribed determinant.
  static KummerLattice with_determinant(const Rational& det, std::vector<Rational> weights);

  const std::array<Vec4, 4>& generators() const { return generators_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& det_gamma() const { return det_; }
  Rational weight_square_sum() const;
  /// Coordinates of v in the generator basis.
  Vec4 lattice_coordinates(const Vec4& v) const;

 private:
  std::array<Vec4, 4> generators_;
  std::vector<Rational> weights_;
  Rational det_;
};

struct SingularPoint {
  std::array<int, 4> label;  // l in F_2^4
  Vec4 point;                // (1/2) sum l_i gamma_i
};

std::vector<SingularPoint> singular_points(const KummerLattice& lattice);
/// Number of pairwise distinct classes modulo the lattice (exact).
std::size_t distinct_point_classes(const KummerLattice& lattice,
                                   const std::vector<SingularPoint>& points);

/// sqrt((8 pi^4 det - 2 pi^2) / sum a_i^2). Throws ClassNotInCone.
Value s_lambda(const KummerLattice& lattice);
/// 2 pi^2 + 8 pi^4 (1 - s^2) det for s in (0, 1].
Value kummer_volume(const Rational& det_gamma, const Rational& s);

struct VolumeSample {
  Rational det;
  Rational s;
  Value volume;
};

struct SquareKummerReport {
  WDPair wd;
  Value volume;
  bool w_matches = false;  // W == 32 pi^2
  bool d_matches = false;  // D == 32 pi^2
  /// Volumes at fixed s over increasing determinants; the square lattice
  /// (det 1) gives the smallest.
  std::vector<VolumeSample> samples;
  bool square_is_smallest = false;
};

SquareKummerReport square_kummer_check();

}  // namespace confinv
