// Command-line front end: the full claims report plus one subcommand per
// computational layer. Exit codes: 0 ok, 1 claim failure, 2 usage or input
// error, 3 enumeration budget exhausted.

#include "confinv/elliptic3.hpp"
#include "confinv/euclid3.hpp"
#include "confinv/flattorus.hpp"
#include "confinv/harmonics.hpp"
#include "confinv/kummer.hpp"
#include "confinv/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace confinv;
using Json = nlohmann::ordered_json;

constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Output {
  std::string format = "table";
  int precision = 10;

  Json value(const Value& v) const {
    Json j;
    j["exact"] = v.is_exact() ? Json(v.to_string()) : Json(nullptr);
    j["decimal"] = v.eval_string(precision);
    return j;
  }

  void emit(const Json& doc) const {
    if (format == "json") {
      std::cout << doc.dump(2) << "\n";
      return;
    }
    print_table(doc, "");
  }

 private:
  static std::string scalar(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_object() && j.contains("decimal")) {
      const auto& exact = j["exact"];
      return exact.is_null() ? j["decimal"].get<std::string>()
                             : exact.get<std::string>() + " ~ " + j["decimal"].get<std::string>();
    }
    return j.dump();
  }

  static bool is_leaf(const Json& j) {
    return !j.is_structured() || (j.is_object() && j.contains("decimal")) ||
           (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); }));
  }

  static void print_table(const Json& j, const std::string& indent) {
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (j.is_object()) width = std::max(width, it.key().size());
    }
    std::size_t index = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++index) {
      const std::string key = j.is_object() ? it.key() : "[" + std::to_string(index) + "]";
      const std::string pad(width > key.size() ? width - key.size() : 0, ' ');
      if (is_leaf(*it)) {
        std::cout << indent << key << pad << "  " << scalar(*it) << "\n";
      } else {
        std::cout << indent << key << "\n";
        print_table(*it, indent + "  ");
      }
    }
  }
};

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stol(item, &used));
    if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
  }
  return out;
}

/// "1x16" (sixteen copies) or a comma-separated list of rationals.
std::vector<Rational> parse_weights(const std::string& text) {
  auto x = text.find('x');
  if (x != std::string::npos) {
    const Rational w = parse_rational(text.substr(0, x));
    const long count = std::stol(text.substr(x + 1));
    if (count < 0 || count > 64) throw std::invalid_argument("bad weight count");
    return std::vector<Rational>(static_cast<std::size_t>(count), w);
  }
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

Json int_vector(const lattice::IntVector& v) {
  Json j = Json::array();
  for (const auto& e : v) j.push_back(e.get_str());
  return j;
}

// --- subcommands ------------------------------------------------------------

int cmd_report(const Output& out, const std::string& section) {
  ReportOptions options;
  options.section = section;
  options.precision = out.precision;
  const Report report = run_report(options);
  std::cout << (out.format == "json" ? report_json(report) : report_table(report));
  return report.ok() ? 0 : kExitClaimFailure;
}

int cmd_lattice(const Output& out, const std::string& path, long theta_bound,
                const lattice::EnumerationOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto lat = lattice::parse_lattice_json(buffer.str());

  Json doc;
  const auto vol = lattice::lattice_volume(lat);
  doc["rank"] = lat.rank();
  doc["volume"] = vol.volume.get_str();
  doc["orientation"] = vol.orientation > 0 ? "positive" : "negative";
  if (lat.rank() <= 6) {
    const auto shortest = lattice::shortest_basis(lat, options);
    Json norms = Json::array(), columns = Json::array();
    for (std::size_t c = 0; c < shortest.columns.cols(); ++c) {
      norms.push_back(shortest.squared_norms[c].get_str());
      columns.push_back(int_vector(shortest.columns.column(c)));
    }
    doc["shortest_norms"] = norms;
    doc["shortest_basis"] = columns;
    const auto dir = lattice::conformal_direction(shortest);
    doc["direction_sum"] = int_vector(dir.sum);
    doc["direction_sum_squared"] = dir.sum_squared_length.get_str();
    doc["direction"] = dir.direction.to_string();
    if (lat.rank() == 4) {
      doc["cs_ratio"] = out.value(cs_ratio(TorusDirection::from_integers(dir.sum)));
    }
  }
  if (theta_bound > 0) {
    Json theta = Json::object();
    for (const auto& [norm, count] : lattice::theta_series(lat, BigInt(theta_bound), options)) {
      theta[norm.get_str()] = count;
    }
    doc["theta"] = theta;
  }
  out.emit(doc);
  return 0;
}

int cmd_torus(const Output& out, const std::string& direction) {
  const TorusDirection r = TorusDirection::from_integers([&] {
    lattice::IntVector v;
    for (long e : parse_longs(direction)) v.emplace_back(e);
    return v;
  }());
  const auto t = torus_invariants(r);
  Json doc;
  doc["n"] = t.n;
  doc["c2"] = out.value(t.c2);
  doc["volume"] = out.value(t.volume);
  doc["W"] = out.value(t.W);
  doc["W_scaling"] = out.value(torus_w_via_scaling(t));
  doc["D"] = out.value(t.D);
  doc["W_canonical"] = out.value(canonical_torus(t.n).W);
  if (t.n == 4) doc["cs_ratio"] = out.value(cs_ratio(r));
  out.emit(doc);
  return 0;
}

Json euclid_json(const Output& out, const EuclideanManifoldRecord& rec) {
  Json j;
  j["id"] = rec.id;
  j["table"] = rec.table;
  j["orientable"] = rec.orientable;
  j["rotational_group"] = rec.rotational_group;
  j["torus_type"] = rec.torus_type;
  j["r_can"] = rec.printed_r_can.to_string();
  j["mu"] = out.value(rec.mu);
  j["c2"] = out.value(rec.c2);
  j["W"] = out.value(rec.W_printed);
  if (!rec.W_formula.equals(rec.W_printed)) j["W_with_n2"] = out.value(rec.W_formula);
  return j;
}

int cmd_euclid(const Output& out, int table, const std::string& id, const std::string& diffeo) {
  Json doc;
  if (!diffeo.empty()) {
    auto comma = diffeo.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--diffeo expects A,B");
    const std::string a = diffeo.substr(0, comma), b = diffeo.substr(comma + 1);
    doc["a"] = a;
    doc["b"] = b;
    doc["W_a"] = out.value(euclid_record(a).W_printed);
    doc["W_b"] = out.value(euclid_record(b).W_printed);
    doc["diffeomorphic"] = euclid_diffeo(a, b);
  } else if (!id.empty()) {
    doc = euclid_json(out, euclid_record(id));
  } else {
    Json rows = Json::array();
    const auto records = table > 0 ? euclid_table(table) : euclid_registry();
    for (const auto& rec : records) rows.push_back(euclid_json(out, rec));
    doc["manifolds"] = rows;
  }
  out.emit(doc);
  return 0;
}

int cmd_lens(const Output& out, long p, long q, int degree, bool basis) {
  const auto space = lens_invariant_space(p, q, degree, basis);
  Json doc;
  doc["p"] = p;
  doc["q"] = q;
  doc["degree"] = degree;
  doc["ambient_dimension"] = harm_space_dim(degree);
  doc["invariant_dimension"] = space.dimension;
  doc["molien_dimension"] = molien_invariant_dim(RotationSpectrum::lens(p, q), degree);
  if (basis) {
    Json real = Json::array();
    for (const auto& f : space.real_basis) real.push_back(f.to_string());
    doc["basis"] = real;
  }
  out.emit(doc);
  return 0;
}

Json sigma_json(const Output& out, const SigmaReport& r) {
  Json j;
  j["pi1_order"] = r.pi1_order;
  if (r.h_order) j["h_order"] = *r.h_order;
  j["sigma"] = out.value(r.sigma);
  if (r.via_rp3) j["sigma_via_rp3"] = out.value(*r.via_rp3);
  if (r.via_s3) j["sigma_via_s3"] = out.value(*r.via_s3);
  const auto inv = elliptic_invariants(r.pi1_order);
  j["radius_squared"] = out.value(inv.r2);
  j["volume"] = out.value(inv.volume);
  j["scalar"] = out.value(inv.scalar);
  j["W"] = out.value(inv.W);
  j["D"] = out.value(inv.D);
  return j;
}

int cmd_elliptic(const Output& out, const std::string& lens, const std::string& kase,
                 const std::string& h1, long h2, long m, long n, bool verify_l31) {
  Json doc;
  int status = 0;
  if (verify_l31) {
    const auto r = verify_min_embedding(l31_map(), 3, 1);
    doc["degree"] = r.degree;
    doc["harmonic"] = r.harmonic;
    doc["invariant"] = r.invariant;
    doc["real_valued"] = r.real_valued;
    doc["sum_of_squares"] = r.sum_of_squares;
    doc["probe_points"] = r.probe_points;
    doc["round"] = r.round;
    doc["expected_constant"] = to_string(r.expected_constant);
    if (r.pullback_constant) doc["pullback_constant"] = to_string(*r.pullback_constant);
    if (r.mean_constant) doc["trace_over_3"] = to_string(*r.mean_constant);
    if (!r.failure.empty()) doc["failure"] = r.failure;
    status = r.ok() ? 0 : kExitClaimFailure;
  } else if (!lens.empty()) {
    const auto pq = parse_longs(lens);
    if (pq.size() != 2) throw std::invalid_argument("--lens expects p,q");
    doc = sigma_json(out, sigma_elliptic(EllipticDescriptor::lens(pq[0], pq[1])));
  } else if (!kase.empty()) {
    EllipticDescriptor d;
    if (kase == "b") {
      const auto kind = parse_polyhedral_kind(h1);
      d = EllipticDescriptor::product(kind, h2, kind == PolyhedralKind::Dihedral ? m : 0);
    } else if (kase == "c") {
      d = EllipticDescriptor::tetrahedral_index3(m);
    } else if (kase == "d") {
      d = EllipticDescriptor::dihedral_index2(n, m);
    } else {
      throw std::invalid_argument("--case must be b, c or d");
    }
    doc = sigma_json(out, sigma_elliptic(d));
    doc["group"] = d.to_string();
  } else {
    throw std::invalid_argument("give --lens, --case or --verify-l31");
  }
  out.emit(doc);
  return status;
}

int cmd_kummer(const Output& out, const std::string& det, const std::string& weights,
               const std::string& s) {
  const auto lat = KummerLattice::with_determinant(parse_rational(det), parse_weights(weights));
  Json doc;
  doc["det_gamma"] = to_string(lat.det_gamma());
  doc["weight_square_sum"] = to_string(lat.weight_square_sum());
  doc["s_lambda"] = out.value(s_lambda(lat));
  doc["singular_point_classes"] = distinct_point_classes(lat, singular_points(lat));
  if (!s.empty()) doc["volume"] = out.value(kummer_volume(lat.det_gamma(), parse_rational(s)));
  out.emit(doc);
  return 0;
}

int cmd_special(const Output& out, int n, long chi, const std::string& w_opt) {
  const auto r = sigma_low_dim(n, chi, w_opt.empty() ? Value() : Value(parse_rational(w_opt)) * Value(ClosedFormValue::pi()));
  Json doc;
  doc["n"] = n;
  doc["sigma"] = out.value(r.sigma);
  if (r.W) doc["W"] = out.value(*r.W);
  if (r.D) doc["D"] = out.value(*r.D);
  doc["aubin_bound_3"] = out.value(aubin_bound(3));
  out.emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformal invariants of flat tori, flat 3-manifolds and spherical space forms"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--precision", out.precision, "Significant digits of decimals")
      ->check(CLI::Range(1, 50))
      ->capture_default_str();

  std::string section = "all";
  auto* report = app.add_subcommand("report", "Run every reproduction check");
  report->add_option("--section", section, "all, or one of the section names")
      ->capture_default_str();

  std::string lattice_file;
  long theta_bound = 0;
  auto* lat = app.add_subcommand("lattice", "Volume, shortest basis and theta series of a lattice");
  lat->add_option("--file", lattice_file, "JSON lattice file")->required();
  lat->add_option("--theta", theta_bound, "Theta series up to this squared norm");
  lattice::EnumerationOptions enumeration;
  lat->add_option("--budget", enumeration.node_budget, "Enumeration node budget")
      ->capture_default_str();

  std::string direction;
  auto* torus = app.add_subcommand("torus", "Invariants of a flat product torus");
  torus->add_option("--direction", direction, "Integer direction, e.g. 48,56,-76,28")->required();

  int table = 0;
  std::string euclid_id, diffeo;
  auto* euclid = app.add_subcommand("euclid3", "Closed flat 3-manifolds");
  euclid->add_option("--table", table, "Table 1..4")->check(CLI::Range(1, 4));
  euclid->add_option("--id", euclid_id, "Manifold id E1..E10");
  euclid->add_option("--diffeo", diffeo, "Compare two ids, e.g. E1,E2");

  long p = 1, q = 0;
  int degree = 0;
  bool basis = false;
  auto* lens = app.add_subcommand("lens", "Invariant harmonic polynomials of a lens space");
  lens->add_option("--p", p)->required();
  lens->add_option("--q", q)->required();
  lens->add_option("--degree", degree)->required()->check(CLI::Range(0, 40));
  lens->add_flag("--basis", basis, "Print a real basis");

  std::string lens_pq, kase, h1 = "icosahedral";
  long h2 = 1, m = 0, n = 0;
  bool verify_l31 = false;
  auto* elliptic = app.add_subcommand("elliptic", "Spherical space forms");
  elliptic->add_option("--lens", lens_pq, "p,q");
  elliptic->add_option("--case", kase, "b (product), c (tetrahedral index 3), d (dihedral index 2)");
  elliptic->add_option("--h1", h1, "dihedral, tetrahedral, octahedral or icosahedral");
  elliptic->add_option("--h2", h2, "Order of the cyclic factor");
  elliptic->add_option("--m", m);
  elliptic->add_option("--n", n);
  elliptic->add_flag("--verify-l31", verify_l31, "Check the degree-3 map of L(3,1)");

  std::string det = "1", weights = "1x16", s;
  auto* kummer = app.add_subcommand("kummer", "Kummer surface arithmetic");
  kummer->add_option("--det", det)->capture_default_str();
  kummer->add_option("--weights", weights, "AxK or a comma list")->capture_default_str();
  kummer->add_option("--s", s, "Scaling in (0, 1]");

  int special_n = 1;
  long chi = 0;
  std::string w_opt;
  auto* special = app.add_subcommand("special", "Dimensions one and two");
  special->add_option("--n", special_n)->check(CLI::Range(1, 2))->capture_default_str();
  special->add_option("--chi", chi, "Euler characteristic");
  special->add_option("--w-opt", w_opt, "Optimal W as a rational multiple of pi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*report) return cmd_report(out, section);
    if (*lat) return cmd_lattice(out, lattice_file, theta_bound, enumeration);
    if (*torus) return cmd_torus(out, direction);
    if (*euclid) return cmd_euclid(out, table, euclid_id, diffeo);
    if (*lens) return cmd_lens(out, p, q, degree, basis);
    if (*elliptic) return cmd_elliptic(out, lens_pq, kase, h1, h2, m, n, verify_l31);
    if (*kummer) return cmd_kummer(out, det, weights, s);
    if (*special) return cmd_special(out, special_n, chi, w_opt);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
