#include "confinv/invariants.hpp"

#include "doctest.h"

#include <random>

using namespace confinv;
using CF = ClosedFormValue;

TEST_CASE("W - D equals the scalar curvature integral") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> num(0, 400), den(1, 60), dim(1, 9), pik(0, 4);
  for (int i = 0; i < 100000; ++i) {
    const int n = static_cast<int>(dim(rng));
    const Value mean_sq = make_rational(num(rng), den(rng));
    const Value second_sq = make_rational(num(rng), den(rng));
    Value volume = make_rational(1 + num(rng), den(rng));
    if (i % 2 == 1) volume = volume * Value(CF::pi(pik(rng)));
    const auto wd = wd_from_extrinsic({n, mean_sq, second_sq, volume});
    const Value lhs = wd.W - wd.D;
    const Value rhs = n == 1 ? Value(0) : gauss_scalar(n, mean_sq, second_sq) * volume;
    REQUIRE(lhs.is_exact());
    REQUIRE(lhs.equals(rhs));
  }
}

TEST_CASE("extrinsic data validation") {
  CHECK_THROWS_AS(gauss_scalar(0, Value(0), Value(0)), DomainError);
  CHECK_THROWS_AS(gauss_scalar(3, Value(-1), Value(0)), DomainError);
  CHECK_THROWS_AS(c2_min(1, Value(0)), DomainError);
  CHECK(c2_min(4, Value(16)).equals(Value(2)));
  // Round unit sphere: H = 0 in the sphere, so W = n^2 vol and D = n vol.
  const auto wd = wd_from_extrinsic({3, Value(0), Value(0), Value(unit_sphere_volume(3))});
  CHECK(wd.W.equals(CF(Rational(18)) * CF::pi(2)));
  CHECK(wd.D.equals(CF(Rational(6)) * CF::pi(2)));
}

TEST_CASE("Aubin bound and Yamabe quotient") {
  CHECK(aubin_bound(3) == CF(Rational(6)) * (CF(Rational(2)) * CF::pi(2)).pow(Rational(2, 3)));
  CHECK(static_cast<double>(aubin_bound(3).eval()) == doctest::Approx(43.8232));
  const auto at_sphere = yamabe_and_aubin(3, Value(6), Value(unit_sphere_volume(3)));
  CHECK(at_sphere.within_bound);
  CHECK(at_sphere.lambda.equals(at_sphere.aubin));
  const auto above = yamabe_and_aubin(3, Value(7), Value(unit_sphere_volume(3)));
  CHECK_FALSE(above.within_bound);
  CHECK_THROWS_AS(aubin_bound(2), DomainError);
}

TEST_CASE("low-dimensional sigma") {
  const auto circle = sigma_low_dim(1, 0);
  CHECK(circle.sigma.is_zero());
  CHECK(circle.W->equals(CF(Rational(2)) * CF::pi()));
  const auto surface = sigma_low_dim(2, 2, Value(CF(Rational(16)) * CF::pi()));
  CHECK(surface.sigma.equals(CF(Rational(4)) * CF::pi(Rational(1, 2))));
  CHECK_THROWS_AS(sigma_low_dim(3, 0), DomainError);
}
