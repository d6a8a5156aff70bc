#include "confinv/flattorus.hpp"

#include "doctest.h"

#include <random>

using namespace confinv;
using CF = ClosedFormValue;

namespace {

TorusDirection random_direction(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> e(1, 40);
  std::vector<Rational> squares;
  for (int i = 0; i < n; ++i) squares.push_back(make_rational(e(rng), e(rng)));
  return TorusDirection(squares);
}

}  // namespace

TEST_CASE("two routes to W agree on random directions") {
  std::mt19937 rng(17);
  for (int i = 0; i < 10000; ++i) {
    const int n = 2 + i % 4;
    const auto t = torus_invariants(random_direction(rng, n));
    REQUIRE(t.W.equals(torus_w_via_scaling(t)));
    REQUIRE(t.W.equals(t.D));
  }
}

TEST_CASE("the cubic direction minimizes W") {
  std::mt19937 rng(19);
  for (int n = 2; n <= 5; ++n) {
    const HighFloat best = canonical_torus(n).W.eval();
    for (int i = 0; i < 500; ++i) {
      CHECK(torus_invariants(random_direction(rng, n)).W.eval() >= best - HighFloat("1e-20"));
    }
  }
}

TEST_CASE("canonical tori") {
  CHECK(canonical_torus(3).W.equals(CF::sqrt(Rational(3)) * CF(Rational(8)) * CF::pi(3)));
  CHECK(canonical_torus(4).W.equals(CF(Rational(16)) * CF::pi(4)));
  CHECK(canonical_torus(2).W.equals(CF(Rational(8)) * CF::pi(2)));
  CHECK(canonical_torus(1).W.equals(CF(Rational(2)) * CF::pi()));
}

TEST_CASE("direction normalization") {
  const TorusDirection a({Rational(1), Rational(3, 4)});
  const TorusDirection b({Rational(4), Rational(3)});
  CHECK(a.unit_squares() == b.unit_squares());
  CHECK(torus_invariants(a).W.equals(torus_invariants(b).W));
  CHECK_THROWS_AS(TorusDirection({Rational(1), Rational(0)}), DegenerateDirection);
}

TEST_CASE("ratio of W to pi^4") {
  lattice::IntVector v{BigInt(48), BigInt(56), BigInt(-76), BigInt(28)};
  const auto r = TorusDirection::from_integers(v);
  CHECK((torus_invariants(r).W / Value(CF::pi(4))).equals(cs_ratio(r)));
  CHECK(abs(cs_ratio(r).eval() - HighFloat("27.7240")) < HighFloat("5e-4"));
  lattice::IntVector w{BigInt(36), BigInt(92), BigInt(-16), BigInt(-40)};
  CHECK(abs(cs_ratio(TorusDirection::from_integers(w)).eval() - HighFloat("62.2916")) <
        HighFloat("5e-4"));
}

TEST_CASE("isospectral pair report") {
  const auto report = conway_sloane_report();
  std::size_t flagged = 0;
  for (const auto& c : report.claims) {
    INFO(c.id << ": " << c.computed);
    CHECK(c.status != ClaimStatus::Fail);
    if (c.status == ClaimStatus::Flagged) ++flagged;
  }
  CHECK(flagged == 1);
  CHECK(report.basis1.squared_norms ==
        std::vector<BigInt>{BigInt(576), BigInt(2352), BigInt(3552), BigInt(3888)});
  CHECK(report.basis2.squared_norms ==
        std::vector<BigInt>{BigInt(576), BigInt(2352), BigInt(3552), BigInt(3984)});
}

TEST_CASE("corrupted pair data fails") {
  auto data = builtin_isospectral_pair();
  data.b2(0, 0) += 4;
  const auto report = conway_sloane_report(data);
  bool any_fail = false;
  for (const auto& c : report.claims) any_fail = any_fail || c.status == ClaimStatus::Fail;
  CHECK(any_fail);
}

TEST_CASE("signed permutations") {
  using V = lattice::IntVector;
  CHECK(equal_up_to_signed_permutation(V{BigInt(1), BigInt(-2)}, V{BigInt(2), BigInt(1)}));
  CHECK_FALSE(equal_up_to_signed_permutation(V{BigInt(1), BigInt(3)}, V{BigInt(2), BigInt(1)}));
}
