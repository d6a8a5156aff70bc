#include "confinv/kummer.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace confinv;
using CF = ClosedFormValue;

TEST_CASE("singular points of the square lattice") {
  const auto lat = KummerLattice::square();
  CHECK(lat.det_gamma() == 1);
  const auto pts = singular_points(lat);
  REQUIRE(pts.size() == 16);
  CHECK(pts.front().point == Vec4{});
  for (const auto& p : pts) {
    for (const auto& c : lat.lattice_coordinates(p.point)) {
      CHECK((c == 0 || c == Rational(1, 2)));
    }
  }
  CHECK(distinct_point_classes(lat, pts) == 16);
}

TEST_CASE("singular points of random lattices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> e(-9, 9), d(1, 5);
  int built = 0;
  while (built < 50) {
    std::array<Vec4, 4> g;
    for (auto& col : g) {
      for (auto& x : col) x = make_rational(e(rng), d(rng));
    }
    try {
      KummerLattice lat(g, std::vector<Rational>(16, Rational(1)));
      ++built;
      CHECK(distinct_point_classes(lat, singular_points(lat)) == 16);
    } catch (const DomainError&) {
    }
  }
}

TEST_CASE("Kahler class normalization") {
  const auto s = s_lambda(KummerLattice::square());
  const double pi = M_PI;
  CHECK(static_cast<double>(s.eval()) ==
        doctest::Approx(std::sqrt((8 * std::pow(pi, 4) - 2 * pi * pi) / 16)).epsilon(1e-14));
  CHECK(abs(s.eval() - HighFloat("6.889908923")) < HighFloat("1e-9"));
  CHECK_THROWS_AS(s_lambda(KummerLattice::with_determinant(Rational(1, 100), std::vector<Rational>(16, Rational(1)))),
                  ClassNotInCone);
  CHECK_THROWS(KummerLattice::square(std::vector<Rational>(15, Rational(1))));
  CHECK_THROWS(KummerLattice::square(std::vector<Rational>(16, Rational(0))));
}

TEST_CASE("volume") {
  for (const auto& det : {Rational(1), Rational(5, 4), Rational(7)}) {
    CHECK(kummer_volume(det, Rational(1)).equals(CF(Rational(2)) * CF::pi(2)));
    HighFloat previous = kummer_volume(det, Rational(1, 20)).eval();
    for (int k = 2; k <= 20; ++k) {
      const HighFloat v = kummer_volume(det, Rational(k, 20)).eval();
      CHECK(v < previous);
      previous = v;
    }
  }
  CHECK(kummer_volume(Rational(1), Rational(1, 2))
            .equals(Value(CF(Rational(2)) * CF::pi(2)) + Value(CF(Rational(6)) * CF::pi(4))));
  CHECK_THROWS_AS(kummer_volume(Rational(1), Rational(0)), DomainError);
  CHECK_THROWS_AS(kummer_volume(Rational(1), Rational(3, 2)), DomainError);
}

TEST_CASE("square Kummer surface") {
  const auto r = square_kummer_check();
  CHECK(r.w_matches);
  CHECK(r.d_matches);
  CHECK(r.wd.W.equals(CF(Rational(32)) * CF::pi(2)));
  CHECK(r.square_is_smallest);
  CHECK(r.samples.size() >= 4);
}
