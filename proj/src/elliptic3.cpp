#include "confinv/elliptic3.hpp"

#include <numeric>
#include <sstream>

namespace confinv {

namespace {

using CF = ClosedFormValue;

CF two_pi_sq() { return CF(Rational(2)) * CF::pi(2); }

CF order_power(long order, const Rational& e) { return CF::power(Rational(order), e); }

}  // namespace

ClosedFormValue sigma_for_order(long order) {
  if (order < 1) throw DomainError("group order must be positive");
  return CF(Rational(6)) * two_pi_sq().pow(Rational(2, 3)) * order_power(order, Rational(-2, 3));
}

EllipticInvariants elliptic_invariants(long order) {
  if (order < 1) throw DomainError("group order must be positive");
  EllipticInvariants inv;
  inv.order = order;
  const CF r2 = order_power(order, Rational(3, 2));
  const CF volume = two_pi_sq() * r2.pow(Rational(3, 2));
  const CF scalar = CF(Rational(6)) / (order_power(order, Rational(2, 3)) * r2);
  inv.r2 = r2;
  inv.volume = volume;
  inv.scalar = scalar;
  inv.alpha_sq = Value(6) - Value(scalar);
  inv.W = Value(CF(Rational(9)) * volume);
  inv.D = inv.W - Value(scalar * volume);
  inv.lambda = scalar * volume.pow(Rational(2, 3));
  inv.sigma = sigma_for_order(order);
  return inv;
}

PolyhedralKind parse_polyhedral_kind(const std::string& name) {
  if (name == "dihedral") return PolyhedralKind::Dihedral;
  if (name == "tetrahedral") return PolyhedralKind::Tetrahedral;
  if (name == "octahedral") return PolyhedralKind::Octahedral;
  if (name == "icosahedral") return PolyhedralKind::Icosahedral;
  throw InvalidDescriptor("unknown polyhedral group: " + name);
}

std::string to_string(PolyhedralKind kind) {
  switch (kind) {
    case PolyhedralKind::Dihedral: return "dihedral";
    case PolyhedralKind::Tetrahedral: return "tetrahedral";
    case PolyhedralKind::Octahedral: return "octahedral";
    case PolyhedralKind::Icosahedral: return "icosahedral";
  }
  return "?";
}

EllipticDescriptor EllipticDescriptor::lens(long p, long q) {
  EllipticDescriptor d;
  d.kind = EllipticCase::Cyclic;
  d.p = p;
  d.q = q;
  return d;
}

EllipticDescriptor EllipticDescriptor::product(PolyhedralKind h1, long h2, long dihedral_m) {
  EllipticDescriptor d;
  d.kind = EllipticCase::Product;
  d.h1 = h1;
  d.h2 = h2;
  d.dihedral_m = dihedral_m;
  return d;
}

EllipticDescriptor EllipticDescriptor::tetrahedral_index3(long m) {
  EllipticDescriptor d;
  d.kind = EllipticCase::TetrahedralIndex3;
  d.m = m;
  return d;
}

EllipticDescriptor EllipticDescriptor::dihedral_index2(long n, long m) {
  EllipticDescriptor d;
  d.kind = EllipticCase::DihedralIndex2;
  d.n = n;
  d.m = m;
  return d;
}

namespace {

long polyhedral_order(PolyhedralKind kind, long dihedral_m) {
  switch (kind) {
    case PolyhedralKind::Dihedral: return 2 * dihedral_m;
    case PolyhedralKind::Tetrahedral: return 12;
    case PolyhedralKind::Octahedral: return 24;
    case PolyhedralKind::Icosahedral: return 60;
  }
  return 0;
}

}  // namespace

void EllipticDescriptor::validate() const {
  switch (kind) {
    case EllipticCase::Cyclic:
      if (p < 1) throw InvalidDescriptor("p must be positive");
      if (std::gcd(p, q) != 1) throw InvalidDescriptor("lens parameters need gcd(p, q) = 1");
      return;
    case EllipticCase::Product: {
      if (h1 == PolyhedralKind::Dihedral && dihedral_m < 2) {
        throw InvalidDescriptor("dihedral group D_2m needs m >= 2");
      }
      if (h2 < 1) throw InvalidDescriptor("cyclic factor order must be positive");
      if (std::gcd(polyhedral_order(h1, dihedral_m), h2) != 1) {
        throw InvalidDescriptor("orders of H1 and H2 must be relatively prime");
      }
      return;
    }
    case EllipticCase::TetrahedralIndex3:
      if (m < 1 || m % 2 == 0) throw InvalidDescriptor("index-3 case needs m odd and positive");
      return;
    case EllipticCase::DihedralIndex2:
      if (n < 2 || n % 2 != 0) throw InvalidDescriptor("index-2 case needs n even");
      if (m < 1 || std::gcd(m, n) != 1) throw InvalidDescriptor("index-2 case needs gcd(m, n) = 1");
      return;
  }
}

long EllipticDescriptor::h_order() const {
  validate();
  switch (kind) {
    case EllipticCase::Cyclic: throw InvalidDescriptor("cyclic case has no H");
    case EllipticCase::Product: return polyhedral_order(h1, dihedral_m) * h2;
    case EllipticCase::TetrahedralIndex3: return 12 * 3 * m / 3;
    case EllipticCase::DihedralIndex2: return 2 * n * 2 * m / 2;
  }
  return 0;
}

long EllipticDescriptor::fundamental_group_order() const {
  validate();
  return kind == EllipticCase::Cyclic ? p : 2 * h_order();
}

std::string EllipticDescriptor::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case EllipticCase::Cyclic:
      out << "(a) L(" << p << "," << q << ")";
      break;
    case EllipticCase::Product:
      out << "(b) H = " << confinv::to_string(h1);
      if (h1 == PolyhedralKind::Dihedral) out << "(2m=" << 2 * dihedral_m << ")";
      out << " x C" << h2;
      break;
    case EllipticCase::TetrahedralIndex3:
      out << "(c) H index 3 in T x C" << 3 * m;
      break;
    case EllipticCase::DihedralIndex2:
      out << "(d) H index 2 in C" << 2 * n << " x D" << 2 * m;
      break;
  }
  return out.str();
}

SigmaReport sigma_elliptic(const EllipticDescriptor& desc) {
  desc.validate();
  SigmaReport r;
  r.pi1_order = desc.fundamental_group_order();
  r.sigma = sigma_for_order(r.pi1_order);
  if (desc.kind != EllipticCase::Cyclic) {
    const long h = desc.h_order();
    r.h_order = h;
    r.via_rp3 = Value(sigma_for_order(2) * order_power(h, Rational(-2, 3)));
    r.via_s3 = Value(sigma_for_order(1) * order_power(2 * h, Rational(-2, 3)));
  }
  return r;
}

long canonical_lens_q(long p, long q) {
  if (p < 1 || std::gcd(p, q) != 1) throw DomainError("lens parameters need gcd(p, q) = 1");
  if (p == 1) return 0;
  const long a = mod_pos(q, p);
  const long b = mod_inverse(a, p);
  return std::min({a, mod_pos(-a, p), b, mod_pos(-b, p)});
}

LensDiffeoResult lens_diffeo(long p, long q, long q_prime) {
  const long c1 = canonical_lens_q(p, q);
  const long c2 = canonical_lens_q(p, q_prime);
  LensDiffeoResult r;
  r.verdict = c1 == c2;
  const int d = static_cast<int>(p);
  r.dimension_witness = {lens_invariant_space(p, q, d, false).dimension,
                         lens_invariant_space(p, q_prime, d, false).dimension};
  r.subspace_equal_after_normalization =
      lens_invariant_space(p, c1, d, false).complex_basis ==
      lens_invariant_space(p, c2, d, false).complex_basis;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

/// Rational points of S^3 by inverse stereographic projection.
std::vector<Point> sphere_points(std::size_t count) {
  static const long nums[] = {1, -2, 3, 1, -1, 2, 5, -3};
  std::vector<Point> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    Rational t1 = make_rational(nums[i % 8], 1 + static_cast<long>(i % 3));
    Rational t2 = make_rational(nums[(i + 3) % 8], 2 + static_cast<long>(i % 5));
    Rational t3 = make_rational(nums[(i + 5) % 8] * static_cast<long>(i % 4), 3);
    Rational s = t1 * t1 + t2 * t2 + t3 * t3;
    Rational den = s + 1;
    out.push_back({2 * t1 / den, 2 * t2 / den, 2 * t3 / den, (s - 1) / den});
  }
  return out;
}

std::string point_text(const Point& x) {
  return "(" + to_string(x[0]) + "," + to_string(x[1]) + "," + to_string(x[2]) + "," +
         to_string(x[3]) + ")";
}

}  // namespace

std::array<std::array<Rational, 4>, 4> pullback_matrix(
    const std::vector<std::pair<Rational, RealPoly>>& components, const Point& x) {
  // dF(u_a)_k = grad g_k . u_a = d_a g_k - x_a (grad g_k . x)
  std::array<std::array<Rational, 4>, 4> out{};
  for (const auto& [weight, g] : components) {
    std::array<Rational, 4> du;
    Rational radial = 0;
    for (std::size_t a = 0; a < 4; ++a) {
      du[a] = g.derivative(static_cast<int>(a)).evaluate(x);
      radial += du[a] * x[a];
    }
    for (std::size_t a = 0; a < 4; ++a) du[a] -= x[a] * radial;
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) out[a][b] += weight * du[a] * du[b];
    }
  }
  return out;
}

Rational pullback_pairing(const std::vector<std::pair<Rational, RealPoly>>& components,
                          const Point& x, const Point& u, const Point& v) {
  auto m = pullback_matrix(components, x);
  // u, v tangent at x, so they equal their own projections and
  // <dF u, dF v> = sum_ab u_a v_b <dF e_a, dF e_b> with e_a replaced by u_a.
  Rational s = 0;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) s += u[a] * v[b] * m[a][b];
  }
  return s;
}

std::vector<Point> rational_sphere_points(std::size_t count) { return sphere_points(count); }

EmbeddingReport verify_min_embedding(const std::vector<EmbeddingComponent>& components, long p,
                                     long q) {
  if (components.empty()) throw DomainError("embedding needs at least one component");
  const LensAction action(p, q);
  EmbeddingReport r;
  r.degree = components.front().g.degree();
  for (const auto& c : components) {
    if (c.g.degree() != r.degree || !c.g.is_homogeneous(r.degree)) {
      throw DomainError("embedding components must share one homogeneous degree");
    }
    if (c.weight <= 0) throw DomainError("component weights must be positive");
  }
  const int d = r.degree;
  r.expected_constant = make_rational(d * (d + 2), 3);

  auto fail = [&](const std::string& what) {
    if (r.failure.empty()) r.failure = what;
  };

  r.harmonic = r.invariant = r.real_valued = true;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& g = components[i].g;
    if (!laplacian(g).is_zero()) {
      r.harmonic = false;
      fail("component " + std::to_string(i + 1) + " is not harmonic");
    }
    if (!is_invariant(g, action)) {
      r.invariant = false;
      fail("component " + std::to_string(i + 1) + " is not invariant");
    }
    if (!g.is_real()) {
      r.real_valued = false;
      fail("component " + std::to_string(i + 1) + " is not real-valued");
    }
  }

  ComplexPoly sum;
  for (const auto& c : components) sum += c.g * c.g * GaussianRational(c.weight);
  ComplexPoly residual = sum - squared_radius().pow(static_cast<unsigned>(d));
  r.residual = residual.to_real().first;
  r.sum_of_squares = residual.is_zero();
  if (!r.sum_of_squares) fail("sum of squares differs from |x|^" + std::to_string(2 * d) +
                              " by " + r.residual.to_string());

  // Pullback metric at rational sphere points against the tangent vectors
  // u_a = e_a - x_a x, whose pairwise inner products are delta_ab - x_a x_b.
  // Since sum_a u_a u_a^T projects onto the tangent space, the trace of the
  // pullback is sum_a <dF u_a, dF u_a>.
  std::vector<std::pair<Rational, RealPoly>> real_components;
  for (const auto& c : components) real_components.emplace_back(c.weight, c.g.to_real().first);
  r.round = true;
  for (const auto& x : sphere_points(kRoundnessProbes)) {
    ++r.probe_points;
    auto pairing = pullback_matrix(real_components, x);
    Rational trace = 0;
    for (std::size_t a = 0; a < 4; ++a) trace += pairing[a][a];
    const Rational mean = trace / 3;
    if (!r.mean_constant) {
      r.mean_constant = mean;
    } else if (*r.mean_constant != mean) {
      r.mean_constant_uniform = false;
    }
    for (std::size_t a = 0; a < 4 && r.round; ++a) {
      for (std::size_t b = a; b < 4; ++b) {
        const Rational metric = (a == b ? Rational(1) : Rational(0)) - x[a] * x[b];
        if (pairing[a][b] != mean * metric) {
          r.round = false;
          fail("pullback is not a constant multiple of the round metric at " + point_text(x));
          break;
        }
      }
    }
  }
  if (r.round && r.mean_constant_uniform) r.pullback_constant = r.mean_constant;
  return r;
}

std::vector<std::pair<Rational, RealPoly>> l31_real_map() {
  const RealPoly x = RealPoly::variable(0), y = RealPoly::variable(1), z = RealPoly::variable(2),
                 w = RealPoly::variable(3);
  auto k = [](long c) { return RealPoly::constant(Rational(c)); };
  const RealPoly xy2 = x * x - y * y;
  const RealPoly zw2 = z * z - w * w;
  return {
      {Rational(1), x * x * x - k(3) * x * y * y},
      {Rational(1), k(3) * x * x * y - y * y * y},
      {Rational(1), z * z * z - k(3) * z * w * w},
      {Rational(1), k(3) * z * z * w - w * w * w},
      {Rational(3), xy2 * z + k(2) * x * y * w},
      {Rational(3), k(2) * x * y * z - xy2 * w},
      {Rational(3), zw2 * x + k(2) * z * w * y},
      {Rational(3), zw2 * y - k(2) * z * w * x},
  };
}

std::vector<EmbeddingComponent> l31_map() {
  std::vector<EmbeddingComponent> out;
  for (const auto& [weight, poly] : l31_real_map()) {
    out.push_back({weight, ComplexPoly::from_real(poly, Chart::Conjugate)});
  }
  return out;
}

}  // namespace confinv
