#include "confinv/euclid3.hpp"

#include "confinv/invariants.hpp"

#include <algorithm>

namespace confinv {

namespace {

using CF = ClosedFormValue;

CF q(long num, long den = 1) { return CF(make_rational(num, den)); }
CF root(long num, long den = 1) { return CF::sqrt(make_rational(num, den)); }
CF two_pi_cubed() { return CF::power(Rational(2), Rational(3)) * CF::pi(3); }
CF three_halves_power(long num, long den) {
  return CF::power(make_rational(num, den), Rational(3, 2));
}

std::vector<Rational> sq(std::initializer_list<std::pair<long, long>> fracs) {
  std::vector<Rational> out;
  for (const auto& [n, d] : fracs) out.push_back(make_rational(n, d));
  return out;
}

struct Seed {
  const char* id;
  int table;
  bool orientable;
  const char* rotational_group;
  const char* quotient_group;
  const char* torus_type;
  const char* parameter;
  std::vector<Rational> squares;  // entry squares of r_can, unnormalized
  long multiplicity;
  PrintedDirection printed_r;
  std::optional<CF> printed_mu;
  CF printed_W;
};

std::vector<Seed> seeds() {
  const CF hex_entry = root(3) * q(1, 2);
  const CF e12 = CF(Rational(12)) * CF::pi(2) * CF::ell();
  const CF e24 = CF(Rational(24)) * CF::pi(2) * CF::ell();
  // Square torus entries (1,1); hexagonal torus entries (1/2, sqrt(3)/2).
  return {
      {"E1", 1, true, "1", "Z", "any", "0 deg", sq({{1, 1}, {1, 1}, {1, 1}}), 1,
       {root(1, 3), {q(1), q(1), q(1)}}, std::nullopt, root(3) * two_pi_cubed()},
      {"E2", 1, true, "Z/2", "Z", "any", "180 deg", sq({{1, 1}, {1, 1}, {1, 4}}), 1,
       {q(2, 3), {q(1), q(1), q(1, 2)}}, std::nullopt, root(6) * two_pi_cubed()},
      {"E3", 1, true, "Z/3", "Z", "hexagonal", "120 deg", sq({{1, 4}, {3, 4}, {1, 9}}), 1,
       {q(3) / root(10), {q(1, 2), hex_entry, q(1, 3)}}, std::nullopt,
       q(43, 108) * root(43) * two_pi_cubed()},
      {"E4", 1, true, "Z/4", "Z", "square", "90 deg", sq({{1, 1}, {1, 1}, {1, 16}}), 1,
       {q(4) / root(33), {q(1), q(1), q(1, 4)}}, std::nullopt,
       q(9, 2) * root(2) * two_pi_cubed()},
      {"E5", 1, true, "Z/6", "Z", "hexagonal", "60 deg", sq({{1, 4}, {3, 4}, {1, 36}}), 1,
       {q(6) / root(37), {q(1, 2), hex_entry, q(1, 6)}}, std::nullopt,
       q(31, 27) * root(31) * two_pi_cubed()},
      {"E6", 2, true, "Z/2+Z/2", "Z/2*Z/2", "square", "-", sq({{1, 1}, {1, 1}, {4, 1}}), 2,
       {root(1, 6), {q(1), q(1), q(2)}}, q(4, 6) / root(6) * two_pi_cubed(),
       q(9, 2) * two_pi_cubed()},
      {"E7", 3, false, "Z/2", "Z/2*Z/2", "square", "index 2", sq({{1, 1}, {1, 1}, {1, 4}}), 1,
       {q(2, 3), {q(1), q(1), q(1, 2)}}, e12, three_halves_power(3, 2) * e12},
      {"E8", 3, false, "Z/2", "Z/2*Z/2", "square", "index 4", sq({{1, 1}, {1, 1}, {1, 16}}), 1,
       {q(4) / root(33), {q(1), q(1), q(1, 4)}}, e12, three_halves_power(33, 8) * e12},
      {"E9", 4, false, "Z/2+Z/2", "Z/2*Z/2", "square", "l = 2", sq({{1, 1}, {1, 1}, {4, 1}}), 2,
       {root(1, 6), {q(1), q(1), q(2)}}, e24, three_halves_power(3, 2) * e24},
      {"E10", 4, false, "Z/2+Z/2", "Z/2*Z/2", "square", "l = 4", sq({{1, 1}, {1, 1}, {16, 1}}), 2,
       {root(1, 18), {q(1), q(1), q(4)}}, e24, three_halves_power(33, 8) * e24},
  };
}

EuclideanManifoldRecord build(const Seed& s) {
  TorusDirection r(s.squares);
  TorusInvariants torus = torus_invariants(r);
  EuclideanManifoldRecord rec{
      s.id, s.table, s.orientable, s.rotational_group, s.quotient_group, s.torus_type,
      s.parameter, r, s.multiplicity, {}, torus.c2, {}, {}, s.printed_r,
      s.printed_mu ? std::optional<Value>(Value(*s.printed_mu)) : std::nullopt,
      Value(s.printed_W)};
  const Value mult(s.multiplicity);
  const Value c2_cubed_root = torus.c2.pow(Rational(3, 2));
  if (s.orientable) {
    // Quotient of the canonical torus: volume and W scale with the cover.
    rec.mu = mult * torus.volume;
    rec.W_formula = mult * torus.W;
    rec.W_printed = rec.W_formula;
  } else {
    // Mapping cylinder over the optimal Klein bottle with circle length 2 pi.
    rec.mu = mult * Value(CF(Rational(2)) * CF::pi() * klein_bottle_volume());
    rec.W_formula = Value(9) * c2_cubed_root * rec.mu;
    rec.W_printed = c2_cubed_root * rec.mu;
  }
  return rec;
}

}  // namespace

std::vector<Rational> PrintedDirection::squares() const {
  std::vector<Rational> out;
  for (const auto& e : entries) {
    CF v = (scale * e).pow(Rational(2));
    if (!v.is_rational()) throw DomainError("printed direction has an irrational square");
    out.push_back(v.coeff());
  }
  return out;
}

std::string PrintedDirection::to_string() const {
  std::string out = scale.to_string() + "*(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += entries[i].to_string();
  }
  return out + ")";
}

ClosedFormValue klein_bottle_volume() { return CF(Rational(6)) * CF::pi() * CF::ell(); }

const std::vector<EuclideanManifoldRecord>& euclid_registry() {
  static const std::vector<EuclideanManifoldRecord> registry = [] {
    std::vector<EuclideanManifoldRecord> out;
    for (const auto& s : seeds()) out.push_back(build(s));
    return out;
  }();
  return registry;
}

const EuclideanManifoldRecord& euclid_record(const std::string& id) {
  for (const auto& r : euclid_registry()) {
    if (r.id == id) return r;
  }
  throw UnknownManifold("unknown Euclidean manifold id: " + id);
}

std::vector<EuclideanManifoldRecord> euclid_table(int table) {
  if (table < 1 || table > 4) throw DomainError("table must be 1..4");
  std::vector<EuclideanManifoldRecord> out;
  for (const auto& r : euclid_registry()) {
    if (r.table == table) out.push_back(r);
  }
  return out;
}

bool euclid_diffeo(const std::string& a, const std::string& b) {
  return euclid_record(a).W_printed.equals(euclid_record(b).W_printed);
}

std::vector<Claim> euclid_claims() {
  std::vector<Claim> claims;
  const auto& reg = euclid_registry();
  for (int table = 1; table <= 4; ++table) {
    std::size_t cells = 0;
    std::size_t matched = 0;
    std::string mismatches;
    for (const auto& r : reg) {
      if (r.table != table) continue;
      auto check = [&](bool ok, const std::string& what) {
        ++cells;
        if (ok) {
          ++matched;
        } else {
          mismatches += " " + r.id + "." + what;
        }
      };
      check(r.printed_r_can.squares() == r.r_can.unit_squares(), "r_can");
      if (r.printed_mu) check(r.printed_mu->equals(r.mu), "mu");
      check(r.printed_W.equals(r.W_printed), "W");
    }
    claims.push_back({"euclid.table" + std::to_string(table),
                      "flat 3-manifold table " + std::to_string(table),
                      "every r_can, mu and W cell reproduced exactly",
                      std::to_string(matched) + "/" + std::to_string(cells) + " cells exact" +
                          (mismatches.empty() ? "" : ", mismatched:" + mismatches),
                      pass_if(matched == cells)});
  }

  bool distinct = true;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    for (std::size_t j = i + 1; j < reg.size(); ++j) {
      if (reg[i].W_printed.equals(reg[j].W_printed)) distinct = false;
    }
  }
  claims.push_back({"euclid.distinct", "flat 3-manifold diffeomorphism criterion",
                    "the ten W values are pairwise different",
                    distinct ? "pairwise different" : "coincidences found", pass_if(distinct)});

  const auto orientable = std::count_if(reg.begin(), reg.end(),
                                        [](const auto& r) { return r.orientable; });
  claims.push_back({"euclid.orientable", "flat 3-manifold classification",
                    "6 of 10 orientable", std::to_string(orientable) + " of " +
                                              std::to_string(reg.size()) + " orientable",
                    pass_if(orientable == 6 && reg.size() == 10)});

  std::string c2s;
  for (const auto& r : reg) {
    if (r.table < 3) continue;
    if (!c2s.empty()) c2s += ", ";
    c2s += r.id + " W_formula/W_printed = " + (r.W_formula / r.W_printed).to_string();
  }
  claims.push_back({"euclid.convention", "nonorientable flat 3-manifold tables",
                    "W = n^2 (c^2)^(3/2) mu as in the orientable tables",
                    "printed values are (c^2)^(3/2) mu: " + c2s, ClaimStatus::Flagged});
  return claims;
}

}  // namespace confinv
