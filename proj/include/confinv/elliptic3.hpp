#pragma once

// Spherical space forms S^3/Gamma: invariants of the canonical metric,
// sigma invariants by fundamental-group type, lens-space diffeomorphism
// tests and verification of explicit minimal isometric embeddings.

#include "confinv/harmonics.hpp"
#include "confinv/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace confinv {

class InvalidDescriptor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical-metric data for |Gamma| = order. Radius squared r2 = order^(3/2).
struct EllipticInvariants {
  long order = 1;
  Value r2;
  Value volume;
  Value alpha_sq;
  Value scalar;
  Value W;
  Value D;
  Value lambda;
  Value sigma;
};

EllipticInvariants elliptic_invariants(long order);

/// 6 (2 pi^2)^(2/3) / order^(2/3).
ClosedFormValue sigma_for_order(long order);

enum class EllipticCase { Cyclic, Product, TetrahedralIndex3, DihedralIndex2 };
enum class PolyhedralKind { Dihedral, Tetrahedral, Octahedral, Icosahedral };

PolyhedralKind parse_polyhedral_kind(const std::string& name);
std::string to_string(PolyhedralKind kind);

struct EllipticDescriptor {
  EllipticCase kind = EllipticCase::Cyclic;
  long p = 1, q = 0;                       // cyclic: L(p, q)
  PolyhedralKind h1 = PolyhedralKind::Dihedral;
  long dihedral_m = 0;                     // H1 = D_2m when dihedral
  long h2 = 1;                             // cyclic H2 order
  long m = 0, n = 0;                       // index-3 / index-2 data

  static EllipticDescriptor lens(long p, long q);
  static EllipticDescriptor product(PolyhedralKind h1, long h2, long dihedral_m = 0);
  static EllipticDescriptor tetrahedral_index3(long m);
  static EllipticDescriptor dihedral_index2(long n, long m);

  /// Throws InvalidDescriptor when the case conditions fail.
  void validate() const;
  /// |H| for the non-cyclic cases.
  long h_order() const;
  long fundamental_group_order() const;
  std::string to_string() const;
};

struct SigmaReport {
  long pi1_order = 1;
  std::optional<long> h_order;
  Value sigma;
  std::optional<Value> via_rp3;  // sigma(RP^3) / |H|^(2/3)
  std::optional<Value> via_s3;   // sigma(S^3) / (2|H|)^(2/3)
};

SigmaReport sigma_elliptic(const EllipticDescriptor& desc);

/// min{ +-q^(+-1) mod p }, the normal form of L(p, q) up to diffeomorphism.
long canonical_lens_q(long p, long q);

struct LensDiffeoResult {
  bool verdict = false;
  std::pair<long, long> dimension_witness;
  bool subspace_equal_after_normalization = false;
};

LensDiffeoResult lens_diffeo(long p, long q, long q_prime);

/// Component sqrt(weight) * g of a map into R^N.
struct EmbeddingComponent {
  Rational weight{1};
  HarmonicCandidate g;
};

struct EmbeddingReport {
  int degree = 0;
  bool harmonic = false;
  bool invariant = false;
  bool real_valued = false;
  bool sum_of_squares = false;
  RealPoly residual;  // sum weight g^2 - |x|^(2d)
  bool round = false;
  /// Set when the pullback is c times the round metric at every probe.
  std::optional<Rational> pullback_constant;
  /// Trace of the pullback over 3 at the first probe; d(d+2)/3 for any
  /// harmonic map with the sum-of-squares identity, round or not.
  std::optional<Rational> mean_constant;
  bool mean_constant_uniform = true;
  Rational expected_constant;  // d(d+2)/3
  std::size_t probe_points = 0;
  bool symbolic_fallback = false;
  std::string failure;  // first failing check with its witness
  bool ok() const { return harmonic && invariant && real_valued && sum_of_squares && round; }
};

inline constexpr std::size_t kRoundnessProbes = 20;

EmbeddingReport verify_min_embedding(const std::vector<EmbeddingComponent>& components, long p,
                                     long q);

using Point = std::array<Rational, 4>;

/// Pairings <dF u_a, dF u_b> for the tangent projections u_a of the
/// coordinate vectors at x on the unit sphere; F = (sqrt(w_k) g_k).
std::array<std::array<Rational, 4>, 4> pullback_matrix(
    const std::vector<std::pair<Rational, RealPoly>>& components, const Point& x);
/// <dF u, dF v> for tangent vectors u, v at x.
Rational pullback_pairing(const std::vector<std::pair<Rational, RealPoly>>& components,
                          const Point& x, const Point& u, const Point& v);
/// Deterministic rational points of S^3 (inverse stereographic projection).
std::vector<Point> rational_sphere_points(std::size_t count);

/// The degree-3 map of L(3,1) into S^7, in real coordinates.
std::vector<std::pair<Rational, RealPoly>> l31_real_map();
/// The same map in complex form, with z2 = z - i w so that the generator
/// acts as (w z1, w z2).
std::vector<EmbeddingComponent> l31_map();

}  // namespace confinv
