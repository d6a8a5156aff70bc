#include "confinv/report.hpp"

#include "confinv/elliptic3.hpp"
#include "confinv/euclid3.hpp"
#include "confinv/kummer.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace confinv {

namespace {

using CF = ClosedFormValue;

std::string dec(const Value& v, int precision) { return v.eval_string(precision); }

std::string exact_and_decimal(const Value& v, int precision) {
  return v.to_string() + " ~ " + dec(v, precision);
}

Claim claim(std::string id, std::string locator, std::string expected, std::string computed,
            bool ok) {
  return {std::move(id), std::move(locator), std::move(expected), std::move(computed), pass_if(ok)};
}

/// Runs a claim builder, turning an exception into a failed claim.
void guarded(std::vector<Claim>& out, const std::string& id, const std::string& locator,
             const std::function<Claim()>& build) {
  try {
    out.push_back(build());
  } catch (const BudgetError& e) {
    out.push_back({id, locator, "-", std::string("budget exceeded: ") + e.what(), ClaimStatus::Fail});
  } catch (const std::exception& e) {
    out.push_back({id, locator, "-", std::string("error: ") + e.what(), ClaimStatus::Fail});
  }
}

CF two_pi_pow(long n) { return CF::power(Rational(2), Rational(n)) * CF::pi(n); }

// --- sections ---------------------------------------------------------------

void torus_section(std::vector<Claim>& out, const ReportOptions& opt) {
  lattice::EnumerationOptions enumeration;
  enumeration.node_budget = 10'000'000;
  auto pair = conway_sloane_report(opt.isospectral, enumeration);
  out.insert(out.end(), pair.claims.begin(), pair.claims.end());

  guarded(out, "torus.canonical", "canonical flat tori", [&] {
    const Value w1 = canonical_torus(1).W, w3 = canonical_torus(3).W, w4 = canonical_torus(4).W;
    const bool ok = w1.equals(two_pi_pow(1)) && w3.equals(CF::sqrt(Rational(3)) * two_pi_pow(3)) &&
                    w4.equals(CF(Rational(16)) * CF::pi(4));
    return claim("torus.canonical", "canonical flat tori",
                 "n=1: 2*pi; n=3: sqrt(3)*(2pi)^3 = 8*sqrt(3)*pi^3; n=4: 16*pi^4",
                 "n=1: " + w1.to_string() + "; n=3: " + w3.to_string() + "; n=4: " + w4.to_string(),
                 ok);
  });
}

void euclid_section(std::vector<Claim>& out, const ReportOptions& opt) {
  auto claims = euclid_claims();
  out.insert(out.end(), claims.begin(), claims.end());

  guarded(out, "euclid.elliptic_E", "elliptic integral footnote", [&] {
    const HighFloat e = klein_elliptic_E();
    const bool ok = abs(e - HighFloat("1.113741102")) <= HighFloat("1e-9");
    return claim("euclid.elliptic_E", "elliptic integral footnote",
                 "E(2*sqrt(2)/3) = 1.113741102 (+-1e-9)",
                 format_high(e, std::max(opt.precision, 10)), ok);
  });
}

void harmonics_section(std::vector<Claim>& out, const ReportOptions&) {
  guarded(out, "harmonics.lens_dims", "lens space example: invariant harmonics", [&] {
    const std::vector<std::tuple<long, long, long>> cases{
        {7, 1, 16}, {7, 2, 10}, {5, 1, 12}, {5, 2, 8}, {3, 1, 8}};
    std::string expected, computed;
    bool ok = true;
    for (const auto& [p, q, dim] : cases) {
      const long got = lens_invariant_space(p, q, static_cast<int>(p)).dimension;
      const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")->";
      expected += (expected.empty() ? "" : ", ") + tag + std::to_string(dim);
      computed += (computed.empty() ? "" : ", ") + tag + std::to_string(got);
      ok = ok && got == dim;
    }
    return claim("harmonics.lens_dims", "lens space example: invariant harmonics", expected,
                 computed, ok);
  });

  guarded(out, "harmonics.ambient", "lens space example: all harmonics", [&] {
    const long a = harm_space_dim(7), b = harm_space_dim(5), c = harm_space_dim(3);
    const long trivial = lens_invariant_space(1, 0, 2).dimension;
    return claim("harmonics.ambient", "lens space example: all harmonics",
                 "degree 7: 64, degree 5: 36, degree 3: 16; trivial group at degree 2: 9",
                 "degree 7: " + std::to_string(a) + ", degree 5: " + std::to_string(b) +
                     ", degree 3: " + std::to_string(c) +
                     "; trivial group at degree 2: " + std::to_string(trivial),
                 a == 64 && b == 36 && c == 16 && trivial == 9);
  });

  guarded(out, "harmonics.molien", "invariant harmonics: two independent counts", [&] {
    std::size_t checked = 0;
    std::string mismatches;
    for (long p = 1; p <= 12; ++p) {
      for (long q = 0; q < std::max(p, 1L); ++q) {
        if (std::gcd(p, q) != 1) continue;
        const long kernel = lens_invariant_space(p, q, static_cast<int>(p), false).dimension;
        const long molien = molien_invariant_dim(RotationSpectrum::lens(p, q), static_cast<int>(p));
        ++checked;
        if (kernel != molien) {
          mismatches += " L(" + std::to_string(p) + "," + std::to_string(q) + ")";
        }
      }
    }
    return claim("harmonics.molien", "invariant harmonics: two independent counts",
                 "Molien count equals the exact kernel dimension for every L(p,q), p <= 12",
                 std::to_string(checked) + " lens actions checked" +
                     (mismatches.empty() ? ", all agree" : ", mismatches:" + mismatches),
                 mismatches.empty());
  });
}

void elliptic_section(std::vector<Claim>& out, const ReportOptions& opt) {
  const CF sigma_s3 = CF(Rational(6)) * (CF(Rational(2)) * CF::pi(2)).pow(Rational(2, 3));

  guarded(out, "elliptic.sigma", "sigma invariants of space forms", [&] {
    std::string computed;
    bool ok = true;
    for (long p : {1L, 2L, 3L, 5L, 7L}) {
      const Value got = sigma_elliptic(EllipticDescriptor::lens(p, p == 1 ? 0 : 1)).sigma;
      const Value want = sigma_s3 / CF::power(Rational(p), Rational(2, 3));
      ok = ok && got.equals(want);
      computed += (computed.empty() ? "" : "; ") + std::string("p=") + std::to_string(p) + ": " +
                  exact_and_decimal(got, opt.precision);
    }
    return claim("elliptic.sigma", "sigma invariants of space forms",
                 "6*(2*pi^2)^(2/3) / p^(2/3) for S^3 (p=1), RP^3 (p=2) and L(p,q)", computed, ok);
  });

  guarded(out, "elliptic.case_b", "sigma invariants: product case", [&] {
    auto r = sigma_elliptic(EllipticDescriptor::product(PolyhedralKind::Icosahedral, 7));
    const bool ok = r.pi1_order == 840 && r.via_rp3->equals(r.sigma) && r.via_s3->equals(r.sigma) &&
                    r.sigma.equals(sigma_s3 / CF::power(Rational(840), Rational(2, 3)));
    return claim("elliptic.case_b", "sigma invariants: product case",
                 "icosahedral x C7: |pi1| = 840; three equivalent forms agree",
                 "|pi1| = " + std::to_string(r.pi1_order) + ", sigma = " +
                     exact_and_decimal(r.sigma, opt.precision),
                 ok);
  });

  guarded(out, "elliptic.gauss", "canonical metric quantities", [&] {
    bool ok = true;
    for (long n = 1; n <= 100; ++n) {
      const auto inv = elliptic_invariants(n);
      ok = ok && (inv.scalar + inv.alpha_sq).equals(Value(6)) &&
           (inv.W - inv.D).equals(inv.scalar * inv.volume) && inv.lambda.equals(inv.sigma);
    }
    const auto three = elliptic_invariants(3);
    return claim("elliptic.gauss", "canonical metric quantities",
                 "scalar + |alpha|^2 = 6, W - D = scalar*mu, lambda = sigma (orders 1..100, exact)",
                 std::string(ok ? "all hold exactly" : "violated") + "; order 3: scalar " +
                     dec(three.scalar, 4) + ", mu " + dec(three.volume, 4),
                 ok);
  });

  guarded(out, "elliptic.aubin", "Yamabe invariant against the Aubin bound", [&] {
    bool ok = true;
    std::string equal_at;
    for (long n = 1; n <= 100; ++n) {
      const auto inv = elliptic_invariants(n);
      const auto ya = yamabe_and_aubin(3, inv.scalar, inv.volume);
      ok = ok && ya.within_bound && approx_equal(ya.lambda.eval(), inv.lambda.eval(), 1e-10);
      if (abs(ya.lambda.eval() - ya.aubin.eval()) <= HighFloat(kAubinTolerance)) {
        equal_at += (equal_at.empty() ? "" : ",") + std::to_string(n);
      }
    }
    ok = ok && equal_at == "1";
    return claim("elliptic.aubin", "Yamabe invariant against the Aubin bound",
                 "lambda <= 6*(2*pi^2)^(2/3) for orders 1..100, equality only at order 1",
                 std::string(ok ? "bound holds" : "bound check failed") + ", equality at order(s) " +
                     (equal_at.empty() ? "none" : equal_at),
                 ok);
  });

  guarded(out, "elliptic.lens_diffeo", "lens space diffeomorphism criterion", [&] {
    std::size_t checked = 0, disagreements = 0;
    for (long p = 1; p <= 12; ++p) {
      for (long q = 0; q < std::max(p, 1L); ++q) {
        if (std::gcd(p, q) != 1) continue;
        for (long q2 = 0; q2 < std::max(p, 1L); ++q2) {
          if (std::gcd(p, q2) != 1) continue;
          bool classical = false;
          for (long s : {1L, -1L}) {
            if (mod_pos(q2 - s * q, p) == 0) classical = true;
            if (p > 1 && mod_pos(q2 * q - s, p) == 0) classical = true;
          }
          ++checked;
          if (lens_diffeo(p, q, q2).verdict != classical) ++disagreements;
        }
      }
    }
    auto ex1 = lens_diffeo(7, 1, 2);
    auto ex2 = lens_diffeo(5, 1, 2);
    const bool ok = disagreements == 0 && !ex1.verdict && !ex2.verdict &&
                    ex1.dimension_witness == std::pair<long, long>{16, 10} &&
                    ex2.dimension_witness == std::pair<long, long>{12, 8};
    return claim("elliptic.lens_diffeo", "lens space diffeomorphism criterion",
                 "agrees with q' = +-q^(+-1) mod p for p <= 12; L(7,1)!=L(7,2) (16 vs 10), "
                 "L(5,1)!=L(5,2) (12 vs 8)",
                 std::to_string(checked) + " pairs, " + std::to_string(disagreements) +
                     " disagreements; witnesses (" + std::to_string(ex1.dimension_witness.first) +
                     "," + std::to_string(ex1.dimension_witness.second) + ") and (" +
                     std::to_string(ex2.dimension_witness.first) + "," +
                     std::to_string(ex2.dimension_witness.second) + ")",
                 ok);
  });

  const auto l31 = verify_min_embedding(l31_map(), 3, 1);
  out.push_back(claim("elliptic.l31_algebra", "L(3,1) embedding: components",
                      "8 components harmonic, invariant, real; sum of squares = |x|^6",
                      std::string(l31.harmonic ? "harmonic" : "not harmonic") + ", " +
                          (l31.invariant ? "invariant" : "not invariant") + ", " +
                          (l31.real_valued ? "real" : "not real") + ", " +
                          (l31.sum_of_squares ? "identity holds" : "identity fails"),
                      l31.harmonic && l31.invariant && l31.real_valued && l31.sum_of_squares));

  guarded(out, "elliptic.l31_round", "L(3,1) embedding: isometry", [&] {
    // Diagnose the pullback along the Hopf fibre and a horizontal direction
    // at the first probe point.
    const auto real_map = l31_real_map();
    const Point x = rational_sphere_points(1).front();
    const Point fibre{-x[1], x[0], x[3], -x[2]};
    const Point horizontal{x[2], x[3], -x[0], -x[1]};
    const Rational along_fibre = pullback_pairing(real_map, x, fibre, fibre);
    const Rational across = pullback_pairing(real_map, x, horizontal, horizontal);
    std::string computed =
        l31.round ? "constant c = " + to_string(*l31.pullback_constant)
                  : "not round: " + to_string(across) + " on horizontal unit vectors, " +
                        to_string(along_fibre) + " along the fibre; trace/3 = " +
                        (l31.mean_constant ? to_string(*l31.mean_constant) : "-");
    const bool ok = l31.round && l31.pullback_constant && *l31.pullback_constant == 5;
    return claim("elliptic.l31_round", "L(3,1) embedding: isometry",
                 "pullback = 5 * round metric at " + std::to_string(kRoundnessProbes) +
                     " rational sphere points",
                 computed, ok);
  });
}

void kummer_section(std::vector<Claim>& out, const ReportOptions& opt) {
  guarded(out, "kummer.volume", "Kummer surface volume", [&] {
    const Value v1 = kummer_volume(Rational(1), Rational(1));
    const Value v_half = kummer_volume(Rational(1), Rational(1, 2));
    const bool ok = v1.equals(CF(Rational(2)) * CF::pi(2)) &&
                    v_half.equals(Value(CF(Rational(2)) * CF::pi(2)) + Value(CF(Rational(6)) * CF::pi(4)));
    return claim("kummer.volume", "Kummer surface volume",
                 "s = 1: 2*pi^2; det 1, s = 1/2: 2*pi^2 + 6*pi^4",
                 "s = 1: " + v1.to_string() + "; s = 1/2: " + v_half.to_string(), ok);
  });

  guarded(out, "kummer.square_wd", "square Kummer surface", [&] {
    const auto r = square_kummer_check();
    return claim("kummer.square_wd", "square Kummer surface",
                 "W = D = 32*pi^2; det 1 has the smallest volume",
                 "W = " + r.wd.W.to_string() + ", D = " + r.wd.D.to_string() +
                     (r.square_is_smallest ? ", det 1 smallest" : ", det 1 not smallest"),
                 r.w_matches && r.d_matches && r.square_is_smallest);
  });

  guarded(out, "kummer.singular_points", "Kummer singular points", [&] {
    std::mt19937 rng(20240601u);
    std::uniform_int_distribution<long> entry(-6, 6);
    std::size_t lattices = 1, good = 0;
    auto square = KummerLattice::square();
    if (distinct_point_classes(square, singular_points(square)) == 16) ++good;
    while (lattices < 51) {
      std::array<Vec4, 4> g;
      for (auto& col : g) {
        for (auto& e : col) e = make_rational(entry(rng), 1 + std::abs(entry(rng)) % 3);
      }
      try {
        KummerLattice lat(g, std::vector<Rational>(16, Rational(1)));
        ++lattices;
        if (distinct_point_classes(lat, singular_points(lat)) == 16) ++good;
      } catch (const DomainError&) {
        // dependent generators: draw again
      }
    }
    return claim("kummer.singular_points", "Kummer singular points",
                 "16 distinct classes for the square lattice and 50 random lattices",
                 std::to_string(good) + " of " + std::to_string(lattices) + " lattices give 16",
                 good == lattices);
  });

  guarded(out, "kummer.s_lambda", "Kahler class normalization", [&] {
    const Value s = s_lambda(KummerLattice::square());
    const bool ok = abs(s.eval() - HighFloat("6.889908923")) <= HighFloat("1e-9");
    return claim("kummer.s_lambda", "Kahler class normalization",
                 "det 1, all weights 1: sqrt((8*pi^4 - 2*pi^2)/16) ~ 6.889908923", dec(s, opt.precision),
                 ok);
  });
}

void special_section(std::vector<Claim>& out, const ReportOptions& opt) {
  guarded(out, "special.circle", "one-dimensional convention", [&] {
    const auto r = sigma_low_dim(1, 0);
    const bool ok = r.sigma.is_zero() && r.W->equals(two_pi_pow(1)) && r.D->equals(two_pi_pow(1));
    return claim("special.circle", "one-dimensional convention", "sigma = 0 with W = D = 2*pi",
                 "sigma = " + r.sigma.to_string() + ", W = " + r.W->to_string() +
                     ", D = " + r.D->to_string(),
                 ok);
  });
  guarded(out, "special.surface", "two-dimensional sigma", [&] {
    const auto r = sigma_low_dim(2, -2, Value(CF(Rational(64)) * CF::pi()));
    const bool ok = r.sigma.equals(CF(Rational(-2)) * CF::pi(Rational(1, 2)));
    return claim("special.surface", "two-dimensional sigma",
                 "chi = -2, W_opt = 64*pi: -2*sqrt(pi)", exact_and_decimal(r.sigma, opt.precision), ok);
  });
  guarded(out, "special.aubin", "Aubin bound in dimension 3", [&] {
    const Value a = aubin_bound(3);
    const bool ok = a.equals(CF(Rational(6)) * (CF(Rational(2)) * CF::pi(2)).pow(Rational(2, 3)));
    return claim("special.aubin", "Aubin bound in dimension 3", "6*(2*pi^2)^(2/3) ~ 43.83",
                 exact_and_decimal(a, opt.precision), ok);
  });
}

using SectionFn = void (*)(std::vector<Claim>&, const ReportOptions&);

const std::vector<std::pair<std::string, SectionFn>>& section_table() {
  static const std::vector<std::pair<std::string, SectionFn>> table{
      {"torus", torus_section},       {"euclid3", euclid_section},
      {"harmonics", harmonics_section}, {"elliptic", elliptic_section},
      {"kummer", kummer_section},     {"special", special_section},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& report_sections() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : section_table()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_report(const ReportOptions& options) {
  if (options.precision < 1 || options.precision > 50) {
    throw std::invalid_argument("precision must be within 1..50");
  }
  bool matched = options.section == "all";
  Report report;
  for (const auto& [name, fn] : section_table()) {
    if (options.section != "all" && options.section != name) continue;
    matched = true;
    fn(report.claims, options);
  }
  if (!matched) throw std::invalid_argument("unknown report section: " + options.section);
  for (const auto& c : report.claims) {
    switch (c.status) {
      case ClaimStatus::Pass: ++report.passed; break;
      case ClaimStatus::Fail: ++report.failed; break;
      case ClaimStatus::Flagged: ++report.flagged; break;
    }
  }
  return report;
}

std::string report_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : report.claims) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["locator"] = c.locator;
    j["expected"] = c.expected;
    j["computed"] = c.computed;
    j["status"] = status_name(c.status);
    doc["claims"].push_back(std::move(j));
  }
  doc["summary"] = {{"total", report.claims.size()},
                    {"pass", report.passed},
                    {"fail", report.failed},
                    {"flagged", report.flagged}};
  return doc.dump(2) + "\n";
}

std::string report_table(const Report& report) {
  std::size_t id_width = 2, status_width = 6;
  for (const auto& c : report.claims) {
    id_width = std::max(id_width, c.id.size());
    status_width = std::max(status_width, std::string(status_name(c.status)).size());
  }
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  out << pad("id", id_width) << "  " << pad("status", status_width) << "  computed / expected\n";
  out << std::string(id_width + status_width + 24, '-') << "\n";
  for (const auto& c : report.claims) {
    out << pad(c.id, id_width) << "  " << pad(status_name(c.status), status_width) << "  "
        << c.computed << "\n";
    out << std::string(id_width + status_width + 4, ' ') << "expected: " << c.expected << "\n";
  }
  out << "\n" << report.claims.size() << " claims: " << report.passed << " pass, " << report.failed
      << " fail, " << report.flagged << " flagged\n";
  return out.str();
}

}  // namespace confinv
