// Acceptance gate: one PASS/FAIL line per criterion, tolerances fixed here.
//
//   acceptance [--expect-fail N[,N...]]
//
// Exit status is 0 when the set of failing criteria equals the expected set
// (empty by default), so known failures stay visible without masking others.

#include "confinv/elliptic3.hpp"
#include "confinv/euclid3.hpp"
#include "confinv/flattorus.hpp"
#include "confinv/harmonics.hpp"
#include "confinv/kummer.hpp"
#include "confinv/report.hpp"

#include <cstring>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace confinv;
using CF = ClosedFormValue;

namespace {

constexpr long kThetaBound = 4000;
constexpr std::uint64_t kEnumerationBudget = 10'000'000;
const HighFloat kRatioTolerance("5e-4");
const HighFloat kEllipticTolerance("1e-9");
constexpr int kRandomDirections = 10'000;
constexpr int kRandomExtrinsic = 100'000;
constexpr std::size_t kRandomKummerLattices = 50;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

lattice::EnumerationOptions budget() {
  lattice::EnumerationOptions o;
  o.node_budget = kEnumerationBudget;
  return o;
}

std::string vec(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

Outcome c1_volumes() {
  Outcome o;
  const auto& d = builtin_isospectral_pair();
  for (const auto& b : {d.b1, d.b2}) {
    const auto v = lattice::lattice_volume(lattice::IntegerLattice(b));
    o.require(v.volume == 3983616 && v.orientation == 1, "volume " + v.volume.get_str());
  }
  return o;
}

Outcome c2_theta() {
  Outcome o;
  const auto& d = builtin_isospectral_pair();
  const auto t1 = lattice::theta_series(lattice::IntegerLattice(d.b1), BigInt(kThetaBound), budget());
  const auto t2 = lattice::theta_series(lattice::IntegerLattice(d.b2), BigInt(kThetaBound), budget());
  o.require(t1 == t2, "theta series differ");
  std::uint64_t total = 0;
  for (const auto& [norm, count] : t1) total += count;
  o.detail = o.ok ? std::to_string(t1.size()) + " norms, " + std::to_string(total) + " vectors" : o.detail;
  return o;
}

Outcome c3_shortest() {
  Outcome o;
  const auto& d = builtin_isospectral_pair();
  const lattice::IntegerLattice l1(d.b1), l2(d.b2);
  const auto s1 = lattice::shortest_basis(l1, budget());
  const auto s2 = lattice::shortest_basis(l2, budget());
  auto norms = [](std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
  };
  o.require(s1.squared_norms == norms({576, 2352, 3552, 3888}), "first " + vec(s1.squared_norms));
  o.require(s2.squared_norms == norms({576, 2352, 3552, 3984}), "second " + vec(s2.squared_norms));
  o.require(lattice::basis_change_verify(d.b1, s1.change_of_basis, s1.columns), "own change 1");
  o.require(lattice::basis_change_verify(d.b2, s2.change_of_basis, s2.columns), "own change 2");
  o.require(lattice::basis_change_verify(d.b1, d.c1, d.s1), "B1 C1 != S1");
  o.require(lattice::basis_change_verify(d.b2, d.c2, d.s2), "B2 C2 != S2");
  o.require(lattice::is_successive_minima_basis(l1, d.s1, budget()), "S1 not minimal");
  o.require(lattice::is_successive_minima_basis(l2, d.s2, budget()), "S2 not minimal");
  if (o.ok) o.detail = vec(s1.squared_norms) + " and " + vec(s2.squared_norms);
  return o;
}

Outcome c4_directions() {
  Outcome o;
  const auto& d = builtin_isospectral_pair();
  const auto a = lattice::conformal_direction(d.s1);
  const auto b = lattice::conformal_direction(d.s2);
  auto ints = [](std::initializer_list<long> xs) {
    lattice::IntVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
  };
  o.require(a.sum == ints({48, 56, -76, 28}) && a.sum_squared_length == 12000, "first direction");
  o.require(b.sum == ints({36, 92, -16, -40}) && b.sum_squared_length == 11616, "second direction");
  const HighFloat r1 = cs_ratio(TorusDirection::from_integers(a.sum)).eval();
  const HighFloat r2 = cs_ratio(TorusDirection::from_integers(b.sum)).eval();
  o.require(abs(r1 - HighFloat("27.7240")) <= kRatioTolerance, "ratio " + format_high(r1, 8));
  o.require(abs(r2 - HighFloat("62.2916")) <= kRatioTolerance, "ratio " + format_high(r2, 8));
  if (o.ok) {
    o.detail = "ratios " + format_high(r1, 6) + ", " + format_high(r2, 6) +
               "; baseline 16 pi^4 flagged (ratios are W / pi^4)";
  }
  return o;
}

Outcome c5_torus() {
  Outcome o;
  o.require(canonical_torus(3).W.equals(CF::sqrt(Rational(3)) * CF(Rational(8)) * CF::pi(3)), "n=3");
  o.require(canonical_torus(4).W.equals(CF(Rational(16)) * CF::pi(4)), "n=4");
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> e(1, 100), dim(2, 6);
  int agree = 0;
  for (int i = 0; i < kRandomDirections; ++i) {
    const long n = dim(rng);
    lattice::IntVector v;
    for (long k = 0; k < n; ++k) v.emplace_back(e(rng));
    const auto t = torus_invariants(TorusDirection::from_integers(v));
    if (t.W.equals(torus_w_via_scaling(t)) &&
        t.W.eval() >= canonical_torus(static_cast<int>(n)).W.eval() - HighFloat("1e-20")) {
      ++agree;
    }
  }
  o.require(agree == kRandomDirections, std::to_string(agree) + " random directions agree");
  if (o.ok) o.detail = "symbolic n=3,4; " + std::to_string(agree) + " random directions agree";
  return o;
}

Outcome c6_tables() {
  Outcome o;
  std::size_t flagged = 0;
  for (const auto& c : euclid_claims()) {
    if (c.status == ClaimStatus::Flagged) {
      ++flagged;
    } else {
      o.require(c.status == ClaimStatus::Pass, c.id + ": " + c.computed);
    }
  }
  o.require(flagged == 1, "factor-9 convention not flagged");
  const CF two_pi3 = CF(Rational(8)) * CF::pi(3);
  const std::vector<Value> printed{
      CF(Rational(43, 108)) * CF::sqrt(Rational(43)) * two_pi3,
      CF(Rational(31, 27)) * CF::sqrt(Rational(31)) * two_pi3,
      CF(Rational(9, 2)) * two_pi3,
      CF::power(Rational(3, 2), Rational(3, 2)) * CF(Rational(12)) * CF::pi(2) * CF::ell(),
      CF::power(Rational(33, 8), Rational(3, 2)) * CF(Rational(24)) * CF::pi(2) * CF::ell(),
  };
  for (const auto& w : printed) {
    bool found = false;
    for (const auto& rec : euclid_registry()) found = found || rec.W_printed.equals(w);
    o.require(found, "missing " + w.to_string());
  }
  if (o.ok) o.detail = "25 cells exact, 10 distinct W; factor-9 convention flagged";
  return o;
}

Outcome c7_elliptic_E() {
  Outcome o;
  const HighFloat e = klein_elliptic_E();
  o.require(abs(e - HighFloat("1.113741102")) <= kEllipticTolerance, format_high(e, 12));
  if (o.ok) o.detail = "E = " + format_high(e, 12);
  return o;
}

Outcome c8_harmonics() {
  Outcome o;
  const std::vector<std::tuple<long, long, long>> dims{
      {7, 1, 16}, {7, 2, 10}, {5, 1, 12}, {5, 2, 8}, {3, 1, 8}};
  for (const auto& [p, q, want] : dims) {
    const long got = lens_invariant_space(p, q, static_cast<int>(p), false).dimension;
    o.require(got == want, "L(" + std::to_string(p) + "," + std::to_string(q) + ") gives " +
                               std::to_string(got));
  }
  o.require(harm_space_dim(7) == 64 && harm_space_dim(5) == 36 && harm_space_dim(3) == 16, "ambient");
  std::size_t checked = 0;
  for (long p = 1; p <= 12; ++p) {
    for (long q = 0; q < std::max(p, 1L); ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++checked;
      const long kernel = lens_invariant_space(p, q, static_cast<int>(p), false).dimension;
      o.require(kernel == molien_invariant_dim(RotationSpectrum::lens(p, q), static_cast<int>(p)),
                "Molien mismatch at L(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  }
  if (o.ok) o.detail = "5 dimensions, 3 ambient, " + std::to_string(checked) + " Molien checks";
  return o;
}

Outcome c9_l31() {
  Outcome o;
  const auto r = verify_min_embedding(l31_map(), 3, 1);
  o.require(r.harmonic, "not harmonic");
  o.require(r.invariant, "not invariant");
  o.require(r.sum_of_squares, "sum of squares != |x|^6");
  o.require(r.probe_points >= 20, "too few probes");
  o.require(r.round && r.pullback_constant && *r.pullback_constant == 5,
            "pullback not 5 * round: " + (r.failure.empty() ? std::string("-") : r.failure));
  if (o.ok) o.detail = "c = 5 at " + std::to_string(r.probe_points) + " points";
  return o;
}

Outcome c10_sigma() {
  Outcome o;
  const CF s3 = CF(Rational(6)) * (CF(Rational(2)) * CF::pi(2)).pow(Rational(2, 3));
  o.require(sigma_elliptic(EllipticDescriptor::lens(1, 0)).sigma.equals(s3), "S^3");
  o.require(sigma_elliptic(EllipticDescriptor::lens(2, 1)).sigma.equals(s3 / CF::power(Rational(2), Rational(2, 3))),
            "RP^3");
  for (long p = 3; p <= 12; ++p) {
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      o.require(sigma_elliptic(EllipticDescriptor::lens(p, q)).sigma.equals(s3 / CF::power(Rational(p), Rational(2, 3))),
                "L(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  }
  for (long n = 1; n <= 100; ++n) {
    const auto inv = elliptic_invariants(n);
    o.require((inv.scalar + inv.alpha_sq).equals(Value(6)), "scalar identity at " + std::to_string(n));
    const auto ya = yamabe_and_aubin(3, inv.scalar, inv.volume);
    o.require(ya.within_bound, "above Aubin at " + std::to_string(n));
    const bool equal = abs(ya.lambda.eval() - ya.aubin.eval()) <= HighFloat(kAubinTolerance);
    o.require(equal == (n == 1), "Aubin equality at " + std::to_string(n));
  }
  if (o.ok) o.detail = "symbolic sigma; orders 1..100 exact; equality only at order 1";
  return o;
}

Outcome c11_lens() {
  Outcome o;
  std::size_t pairs = 0;
  for (long p = 1; p <= 12; ++p) {
    for (long q = 0; q < std::max(p, 1L); ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (long q2 = 0; q2 < std::max(p, 1L); ++q2) {
        if (std::gcd(p, q2) != 1) continue;
        bool classical = p <= 2;
        if (!classical) {
          const long inv = mod_inverse(q, p);
          for (long c : {q, p - q, inv, p - inv}) classical = classical || mod_pos(q2 - c, p) == 0;
        }
        ++pairs;
        o.require(lens_diffeo(p, q, q2).verdict == classical,
                  "L(" + std::to_string(p) + "," + std::to_string(q) + ") vs q'=" + std::to_string(q2));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs agree";
  return o;
}

Outcome c12_kummer() {
  Outcome o;
  o.require(kummer_volume(Rational(1), Rational(1)).equals(CF(Rational(2)) * CF::pi(2)), "s = 1 volume");
  const auto sq = square_kummer_check();
  o.require(sq.w_matches && sq.d_matches, "W, D");
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> e(-7, 7), den(1, 4);
  std::size_t built = 0;
  while (built < kRandomKummerLattices) {
    std::array<Vec4, 4> g;
    for (auto& col : g) {
      for (auto& x : col) x = make_rational(e(rng), den(rng));
    }
    try {
      KummerLattice lat(g, std::vector<Rational>(16, Rational(1)));
      ++built;
      o.require(distinct_point_classes(lat, singular_points(lat)) == 16, "fewer than 16 classes");
    } catch (const DomainError&) {
    }
  }
  if (o.ok) o.detail = "2 pi^2, W = D = 32 pi^2, 16 classes on 50 lattices";
  return o;
}

Outcome c13_properties() {
  Outcome o;
  std::mt19937 rng(8675309);
  std::uniform_int_distribution<long> num(0, 1000), den(1, 97), dim(2, 8);
  for (int i = 0; i < kRandomExtrinsic; ++i) {
    const int n = static_cast<int>(dim(rng));
    const Value h = make_rational(num(rng), den(rng));
    const Value a = make_rational(num(rng), den(rng));
    const Value vol = Value(make_rational(1 + num(rng), den(rng))) * Value(CF::pi(i % 3));
    const auto wd = wd_from_extrinsic({n, h, a, vol});
    if (!(wd.W - wd.D).equals(gauss_scalar(n, h, a) * vol)) {
      o.require(false, "W - D identity broken");
      break;
    }
  }
  const auto& d = builtin_isospectral_pair();
  for (const auto& b : {d.b1, d.b2}) {
    for (const auto& [norm, count] :
         lattice::theta_series(lattice::IntegerLattice(b), BigInt(kThetaBound), budget())) {
      o.require(norm == 0 ? count == 1 : count % 2 == 0, "odd theta count at " + norm.get_str());
    }
  }
  o.require(report_json(run_report()) == report_json(run_report()), "report not deterministic");
  if (o.ok) o.detail = "1e5 identities, even theta counts, identical report runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      std::stringstream in(argv[++i]);
      std::string item;
      while (std::getline(in, item, ',')) expected.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N[,N...]]\n";
      return 2;
    }
  }

  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"lattice volumes", c1_volumes},
      {"equal theta series to norm 4000", c2_theta},
      {"successive minima and change of basis", c3_shortest},
      {"conformal directions and ratios", c4_directions},
      {"canonical torus W and two-formula agreement", c5_torus},
      {"flat 3-manifold tables", c6_tables},
      {"elliptic integral value", c7_elliptic_E},
      {"invariant harmonic dimensions", c8_harmonics},
      {"L(3,1) minimal isometric embedding", c9_l31},
      {"sigma values, scalar identity, Aubin bound", c10_sigma},
      {"lens diffeomorphism criterion", c11_lens},
      {"Kummer volume, W = D, singular points", c12_kummer},
      {"property suites", c13_properties},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i + 1);
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    if (!out.ok) failed.insert(number);
    std::cout << (out.ok ? "PASS" : "FAIL") << "  " << number << ". " << criteria[i].first;
    if (!out.detail.empty()) std::cout << "  [" << out.detail << "]";
    std::cout << "\n";
  }
  std::cout << "\n" << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass";
  if (!expected.empty()) {
    std::cout << " (expected failures:";
    for (int e : expected) std::cout << " " << e;
    std::cout << ")";
  }
  std::cout << "\n";
  return failed == expected ? 0 : 1;
}
