#include "confinv/kummer.hpp"

#include <algorithm>

namespace confinv {

namespace {

using CF = ClosedFormValue;

/// Solves sum_i c_i g_i = v by Gaussian elimination; returns c, or throws if
/// the generators are dependent. Also yields the determinant.
struct Solve {
  Vec4 coords;
  Rational det;
};

Solve solve_columns(const std::array<Vec4, 4>& gens, const Vec4& v) {
  // Augmented matrix with generators as columns.
  std::array<std::array<Rational, 5>, 4> m;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) m[r][c] = gens[c][r];
    m[r][4] = v[r];
  }
  Rational det = 1;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t p = col;
    while (p < 4 && m[p][col] == 0) ++p;
    if (p == 4) return {{}, Rational(0)};
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < 5; ++c) m[r][c] -= f * m[col][c];
    }
  }
  Vec4 coords;
  for (std::size_t r = 0; r < 4; ++r) coords[r] = m[r][4] / m[r][r];
  return {coords, det};
}

}  // namespace

KummerLattice::KummerLattice(std::array<Vec4, 4> generators, std::vector<Rational> weights)
    : generators_(std::move(generators)), weights_(std::move(weights)) {
  if (weights_.size() != 16) throw DomainError("a Kummer class needs 16 weights");
  for (const auto& a : weights_) {
    if (a <= 0) throw DomainError("weights must be positive");
  }
  det_ = solve_columns(generators_, Vec4{}).det;
  if (det_ == 0) throw DomainError("lattice generators are dependent");
}

KummerLattice KummerLattice::square(std::vector<Rational> weights) {
  std::array<Vec4, 4> g{};
  for (std::size_t i = 0; i < 4; ++i) {
    g[i].fill(Rational(0));
    g[i][i] = 1;
  }
  return KummerLattice(g, std::move(weights));
}

KummerLattice KummerLattice::with_determinant(const Rational& det, std::vector<Rational> weights) {
  std::array<Vec4, 4> g{};
  for (std::size_t i = 0; i < 4; ++i) {
    g[i].fill(Rational(0));
    g[i][i] = 1;
  }
  g[0][0] = det;
  return KummerLattice(g, std::move(weights));
}

Rational KummerLattice::weight_square_sum() const {
  Rational s = 0;
  for (const auto& a : weights_) s += a * a;
  return s;
}

Vec4 KummerLattice::lattice_coordinates(const Vec4& v) const {
  return solve_columns(generators_, v).coords;
}

std::vector<SingularPoint> singular_points(const KummerLattice& lattice) {
  std::vector<SingularPoint> out;
  for (int bits = 0; bits < 16; ++bits) {
    SingularPoint sp;
    sp.point.fill(Rational(0));
    for (int i = 0; i < 4; ++i) {
      sp.label[static_cast<std::size_t>(i)] = (bits >> (3 - i)) & 1;
      if (!sp.label[static_cast<std::size_t>(i)]) continue;
      for (std::size_t r = 0; r < 4; ++r) {
        sp.point[r] += lattice.generators()[static_cast<std::size_t>(i)][r] / 2;
      }
    }
    out.push_back(sp);
  }
  return out;
}

std::size_t distinct_point_classes(const KummerLattice& lattice,
                                   const std::vector<SingularPoint>& points) {
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool repeated = false;
    for (std::size_t j = 0; j < i && !repeated; ++j) {
      Vec4 diff;
      for (std::size_t r = 0; r < 4; ++r) diff[r] = points[i].point[r] - points[j].point[r];
      const Vec4 c = lattice.lattice_coordinates(diff);
      repeated = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.get_den() == 1; });
    }
    if (!repeated) ++distinct;
  }
  return distinct;
}

Value s_lambda(const KummerLattice& lattice) {
  const Value numerator = Value(CF(Rational(8) * lattice.det_gamma()) * CF::pi(4)) -
                          Value(CF(Rational(2)) * CF::pi(2));
  if (!(numerator.eval() > 0)) {
    throw ClassNotInCone("8 pi^4 det must exceed 2 pi^2 for the class to be Kahler");
  }
  return (numerator / Value(lattice.weight_square_sum())).sqrt();
}

Value kummer_volume(const Rational& det_gamma, const Rational& s) {
  if (s <= 0 || s > 1) throw DomainError("s must lie in (0, 1]");
  return Value(CF(Rational(2)) * CF::pi(2)) +
         Value(CF(Rational(8) * (1 - s * s) * det_gamma) * CF::pi(4));
}

SquareKummerReport square_kummer_check() {
  SquareKummerReport r;
  r.volume = kummer_volume(Rational(1), Rational(1));
  // Ricci-flat and minimal: |H|^2 = 0 and |alpha|^2 = n(n-1) = 12.
  r.wd = wd_from_extrinsic({4, Value(0), Value(12), r.volume});
  const Value target(CF(Rational(32)) * CF::pi(2));
  r.w_matches = r.wd.W.equals(target);
  r.d_matches = r.wd.D.equals(target);
  r.square_is_smallest = true;
  for (const Rational& det : {Rational(1), Rational(5, 4), Rational(2), Rational(4)}) {
    VolumeSample sample{det, Rational(1, 2), kummer_volume(det, Rational(1, 2))};
    if (!r.samples.empty() && !(r.samples.front().volume.eval() < sample.volume.eval())) {
      r.square_is_smallest = false;
    }
    r.samples.push_back(sample);
  }
  return r;
}

}  // namespace confinv
