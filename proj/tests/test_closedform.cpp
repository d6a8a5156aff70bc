#include "confinv/closedform.hpp"
#include "confinv/invariants.hpp"

#include "doctest.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/ellint_2.hpp>

#include <cmath>
#include <random>

using namespace confinv;
using CF = ClosedFormValue;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK(to_string(make_rational(-3, 9)) == "-1/3");
  CHECK(format_high(HighFloat(1) / 3, 5) == "0.33333");
}

TEST_CASE("factorization and modular helpers") {
  auto f = factorize(BigInt(3983616));
  CHECK(f == std::map<unsigned long, unsigned long>{{2, 8}, {3, 2}, {7, 1}, {13, 1}, {19, 1}});
  // Two primes beyond the trial-division range.
  const BigInt semiprime = BigInt(1000003) * BigInt(998244353);
  CHECK(factorize(semiprime) == std::map<unsigned long, unsigned long>{{1000003, 1}, {998244353, 1}});
  const BigInt big = BigInt("1000000000000000003") * BigInt(1000003) * 1000003;
  CHECK(factorize(big) == std::map<unsigned long, unsigned long>{{1000003, 2}, {1000000000000000003UL, 1}});
  CHECK(mod_inverse(2, 7) == 4);
  CHECK(mod_pos(-3, 7) == 4);
  CHECK_THROWS_AS(mod_inverse(2, 4), DomainError);
}

TEST_CASE("elliptic E against Boost") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> k(0.0, 0.999);
  for (int i = 0; i < 200; ++i) {
    const double m = k(rng);
    CHECK(elliptic_E(m) == doctest::Approx(boost::math::ellint_2(m)).epsilon(1e-13));
  }
  const double klein = 2.0 * std::sqrt(2.0) / 3.0;
  CHECK(static_cast<double>(klein_elliptic_E()) ==
        doctest::Approx(boost::math::ellint_2(klein)).epsilon(1e-14));
  CHECK(abs(klein_elliptic_E() - HighFloat("1.113741102")) < HighFloat("1e-9"));
  CHECK_THROWS_AS(elliptic_E(1.0), DomainError);
}

TEST_CASE("closed-form monomials") {
  const CF a = CF::sqrt(Rational(12));
  CHECK(a.to_string() == "2*sqrt(3)");
  CHECK(a * a == CF(Rational(12)));
  CHECK((CF(Rational(2)) * CF::pi(2)).pow(Rational(2, 3)).to_string() == "2^(2/3)*pi^(4/3)");
  CHECK(CF::power(Rational(8), Rational(1, 3)) == CF(Rational(2)));
  CHECK(CF::power(Rational(4, 9), Rational(3, 2)) == CF(Rational(8, 27)));
  CHECK((CF::pi() / CF::pi()).is_rational());
  CHECK(CF::sqrt(Rational(43)).same_shape(CF(Rational(5)) * CF::sqrt(Rational(43))));
  CHECK(static_cast<double>(cf_eval(CF::pi(), 20)) == doctest::Approx(M_PI));
}

TEST_CASE("exact sums") {
  const Value s = Value(CF::pi(2)) + Value(CF::pi(4)) * Value(3) - Value(CF::pi(2));
  CHECK(s.is_monomial());
  CHECK(s.equals(CF(Rational(3)) * CF::pi(4)));
  const Value sum = Value(CF::pi(2)) + Value(CF::pi(4));
  CHECK_FALSE(sum.is_monomial());
  CHECK((sum - sum).is_zero());
  const Value root = sum.sqrt();
  CHECK_FALSE(root.is_exact());
  CHECK(static_cast<double>(root.eval()) == doctest::Approx(std::sqrt(M_PI * M_PI + std::pow(M_PI, 4))));
}

TEST_CASE("unit sphere volumes against quadrature") {
  // omega_n = omega_(n-1) * int_0^pi sin^(n-1), starting from omega_1 = 2 pi.
  double omega = 2 * M_PI;
  for (int n = 2; n <= 12; ++n) {
    auto f = [n](double t) { return std::pow(std::sin(t), n - 1); };
    omega *= boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, M_PI);
    CHECK(static_cast<double>(unit_sphere_volume(n).eval()) == doctest::Approx(omega).epsilon(1e-12));
  }
  CHECK(unit_sphere_volume(3) == CF(Rational(2)) * CF::pi(2));
}
