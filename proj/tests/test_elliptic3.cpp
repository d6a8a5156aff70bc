#include "confinv/elliptic3.hpp"

#include "doctest.h"

#include <numeric>

using namespace confinv;
using CF = ClosedFormValue;

namespace {

const CF kSigmaS3 = CF(Rational(6)) * (CF(Rational(2)) * CF::pi(2)).pow(Rational(2, 3));

// q' = +-q^(+-1) mod p, the classical homeomorphism criterion.
bool classical_lens(long p, long q, long q2) {
  if (p <= 2) return true;
  const long inv = mod_inverse(q, p);
  for (long c : {q, p - q, inv, p - inv}) {
    if (mod_pos(q2 - c, p) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("canonical metric identities") {
  for (long n = 1; n <= 100; ++n) {
    const auto inv = elliptic_invariants(n);
    REQUIRE((inv.scalar + inv.alpha_sq).equals(Value(6)));
    REQUIRE((inv.W - inv.D).equals(inv.scalar * inv.volume));
    REQUIRE(inv.lambda.equals(inv.sigma));
    REQUIRE(inv.sigma.equals(kSigmaS3 / CF::power(Rational(n), Rational(2, 3))));
  }
  const auto s3 = elliptic_invariants(1);
  CHECK(s3.scalar.equals(Value(6)));
  CHECK(s3.volume.equals(CF(Rational(2)) * CF::pi(2)));
  CHECK(s3.W.equals(CF(Rational(18)) * CF::pi(2)));
}

TEST_CASE("sigma by fundamental group") {
  CHECK(sigma_elliptic(EllipticDescriptor::lens(1, 0)).sigma.equals(kSigmaS3));
  CHECK(sigma_elliptic(EllipticDescriptor::lens(2, 1)).sigma.equals(CF(Rational(6)) * CF::pi(Rational(4, 3))));
  const auto b = sigma_elliptic(EllipticDescriptor::product(PolyhedralKind::Icosahedral, 7));
  CHECK(b.pi1_order == 840);
  CHECK(b.via_rp3->equals(b.sigma));
  CHECK(b.via_s3->equals(b.sigma));
  CHECK_THROWS_AS(EllipticDescriptor::product(PolyhedralKind::Icosahedral, 10).validate(),
                  InvalidDescriptor);
  CHECK(EllipticDescriptor::tetrahedral_index3(9).fundamental_group_order() == 24 * 9);
  CHECK_THROWS_AS(parse_polyhedral_kind("cubic"), std::invalid_argument);
}

TEST_CASE("lens diffeomorphism matches the classical criterion") {
  for (long p = 1; p <= 12; ++p) {
    for (long q = 0; q < std::max(p, 1L); ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (long q2 = 0; q2 < std::max(p, 1L); ++q2) {
        if (std::gcd(p, q2) != 1) continue;
        INFO("L(" << p << "," << q << ") vs L(" << p << "," << q2 << ")");
        CHECK(lens_diffeo(p, q, q2).verdict == classical_lens(p, q, q2));
      }
    }
  }
  const auto r = lens_diffeo(7, 1, 2);
  CHECK_FALSE(r.verdict);
  CHECK(r.dimension_witness == std::pair<long, long>{16, 10});
  CHECK(lens_diffeo(7, 2, 3).verdict);
  CHECK(canonical_lens_q(7, 3) == 2);
}

TEST_CASE("identity map of S^3 is round with constant 1") {
  std::vector<EmbeddingComponent> id;
  // Re z1, Im z1, Re z2, Im z2 as complex polynomials.
  const auto z1 = ComplexPoly::monomial({1, 0, 0, 0});
  const auto cz1 = ComplexPoly::monomial({0, 1, 0, 0});
  const auto z2 = ComplexPoly::monomial({0, 0, 1, 0});
  const auto cz2 = ComplexPoly::monomial({0, 0, 0, 1});
  const GaussianRational half{Rational(1, 2), Rational(0)};
  const GaussianRational minus_half_i{Rational(0), Rational(-1, 2)};
  id.push_back({Rational(1), (z1 + cz1) * half});
  id.push_back({Rational(1), (z1 - cz1) * minus_half_i});
  id.push_back({Rational(1), (z2 + cz2) * half});
  id.push_back({Rational(1), (z2 - cz2) * minus_half_i});
  const auto r = verify_min_embedding(id, 1, 0);
  CHECK(r.ok());
  REQUIRE(r.pullback_constant);
  CHECK(*r.pullback_constant == 1);
}

TEST_CASE("the degree-3 map of L(3,1)") {
  const auto r = verify_min_embedding(l31_map(), 3, 1);
  CHECK(r.degree == 3);
  CHECK(r.harmonic);
  CHECK(r.invariant);
  CHECK(r.real_valued);
  CHECK(r.sum_of_squares);
  CHECK(r.expected_constant == 5);
  CHECK(r.probe_points == kRoundnessProbes);
  // The trace matches d(d+2)/3 everywhere, but the pullback splits into 3
  // on the horizontal plane and 9 along the Hopf fibre, so it is not round.
  REQUIRE(r.mean_constant);
  CHECK(*r.mean_constant == 5);
  CHECK(r.mean_constant_uniform);
  CHECK_FALSE(r.round);
  CHECK_FALSE(r.pullback_constant);

  const auto map = l31_real_map();
  for (const auto& x : rational_sphere_points(kRoundnessProbes)) {
    const Point fibre{-x[1], x[0], x[3], -x[2]};
    const Point h1{x[2], x[3], -x[0], -x[1]};
    const Point h2{x[3], -x[2], x[1], -x[0]};
    CHECK(pullback_pairing(map, x, fibre, fibre) == 9);
    CHECK(pullback_pairing(map, x, h1, h1) == 3);
    CHECK(pullback_pairing(map, x, h2, h2) == 3);
    CHECK(pullback_pairing(map, x, fibre, h1) == 0);
  }
}

TEST_CASE("rational sphere points lie on the sphere") {
  const auto pts = rational_sphere_points(50);
  CHECK(pts.size() == 50);
  for (const auto& x : pts) {
    CHECK(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] == 1);
  }
}
