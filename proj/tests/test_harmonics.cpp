#include "confinv/harmonics.hpp"

#include "doctest.h"

#include <numeric>
#include <random>

using namespace confinv;

TEST_CASE("ambient dimensions") {
  for (int d = 0; d <= 10; ++d) {
    CHECK(harm_space_dim(d) == (d + 1) * (d + 1));
    CHECK(lens_invariant_space(1, 0, d, false).dimension == (d + 1) * (d + 1));
  }
}

TEST_CASE("lens invariant dimensions") {
  CHECK(lens_invariant_space(7, 1, 7).dimension == 16);
  CHECK(lens_invariant_space(7, 2, 7).dimension == 10);
  CHECK(lens_invariant_space(5, 1, 5).dimension == 12);
  CHECK(lens_invariant_space(5, 2, 5).dimension == 8);
  CHECK(lens_invariant_space(3, 1, 3).dimension == 8);
  CHECK(lens_invariant_space(3, 2, 3).dimension == 8);
  CHECK(lens_invariant_space(7, 3, 7).dimension == 10);
  // Odd degree harmonics are never invariant under -1.
  CHECK(lens_invariant_space(2, 1, 3).dimension == 0);
  CHECK_THROWS_AS(LensAction(6, 2), InvalidAction);
}

TEST_CASE("basis polynomials are harmonic, invariant and real") {
  for (auto [p, q] : {std::pair{5L, 2L}, std::pair{7L, 3L}, std::pair{3L, 1L}}) {
    const auto space = lens_invariant_space(p, q, static_cast<int>(p));
    CHECK(space.real_basis.size() == static_cast<std::size_t>(space.dimension));
    for (const auto& f : space.complex_basis) {
      CHECK(laplacian(f).is_zero());
      CHECK(is_invariant(f, LensAction(p, q)));
    }
    for (const auto& f : space.real_basis) {
      const auto c = ComplexPoly::from_real(f, Chart::Standard);
      CHECK(laplacian(c).is_zero());
      CHECK(is_invariant(c, LensAction(p, q)));
    }
  }
}

TEST_CASE("Molien counts agree with kernels") {
  for (long p = 1; p <= 9; ++p) {
    for (long q = 0; q < std::max(p, 1L); ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (int d = 0; d <= 8; ++d) {
        INFO("p=" << p << " q=" << q << " d=" << d);
        CHECK(molien_invariant_dim(RotationSpectrum::lens(p, q), d) ==
              lens_invariant_space(p, q, d, false).dimension);
      }
    }
  }
}

TEST_CASE("binary polyhedral groups") {
  const auto i = RotationSpectrum::binary_icosahedral();
  const auto o = RotationSpectrum::binary_octahedral();
  const auto t = RotationSpectrum::binary_tetrahedral();
  CHECK(i.order() == 120);
  CHECK(o.order() == 48);
  CHECK(t.order() == 24);
  CHECK(RotationSpectrum::dicyclic(3).order() == 12);
  // Left-invariant harmonics of degree d form d+1 copies of the right
  // representation's invariants; degree 12 is the first for the icosahedral group.
  CHECK(molien_invariant_dim(i, 0) == 1);
  for (int d = 1; d < 12; ++d) CHECK(molien_invariant_dim(i, d) == 0);
  CHECK(molien_invariant_dim(i, 12) == 13);
  CHECK(molien_invariant_dim(t, 6) == 7);
  CHECK(molien_invariant_dim(t, 8) == 9);
  CHECK(molien_invariant_dim(o, 8) == 9);
  CHECK(molien_invariant_dim(RotationSpectrum::trivial(), 5) == 36);
  CHECK(i.with_right_cyclic(7).order() == 840);
}

TEST_CASE("Molien polynomial counts for the trivial group") {
  // (k+1)(k+2)(k+3)/6 monomials of degree k in four variables.
  for (int k = 0; k <= 10; ++k) {
    CHECK(molien_polynomial_dim(RotationSpectrum::trivial(), k) == (k + 1) * (k + 2) * (k + 3) / 6);
  }
}
