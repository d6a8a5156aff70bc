#pragma once

// The ten closed flat 3-manifolds with their canonical conformal data.
// Records are data: the classification is encoded, not recomputed.

#include "confinv/claims.hpp"
#include "confinv/flattorus.hpp"

#include <string>
#include <vector>

namespace confinv {

class UnknownManifold : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A printed direction cell: scale * (e_1, e_2, e_3) where every factor is a
/// closed-form monomial (e.g. 3/sqrt(10) * (1/2, sqrt(3)/2, 1/3)).
struct PrintedDirection {
  ClosedFormValue scale;
  std::vector<ClosedFormValue> entries;

  /// Rational squares of scale * e_i; throws if some square is irrational.
  std::vector<Rational> squares() const;
  std::string to_string() const;
};

struct EuclideanManifoldRecord {
  std::string id;  // E1..E10
  int table = 0;   // 1..4
  bool orientable = false;
  std::string rotational_group;
  std::string quotient_group;
  std::string torus_type;  // "any", "square", "hexagonal"
  std::string parameter;   // rotation angle, index or l, as printed
  TorusDirection r_can;
  long covering_multiplicity = 1;
  Value mu;
  Value c2;
  /// n^2 (c^2)^(3/2) mu, the convention of the torus tables.
  Value W_formula;
  /// The value as it appears in the tables (omits n^2 for the nonorientable ones).
  Value W_printed;

  // Table cells, for comparison.
  PrintedDirection printed_r_can;
  std::optional<Value> printed_mu;
  Value printed_W;
};

const std::vector<EuclideanManifoldRecord>& euclid_registry();
const EuclideanManifoldRecord& euclid_record(const std::string& id);

/// Records of one table (1..4).
std::vector<EuclideanManifoldRecord> euclid_table(int table);

/// Equal W_printed, i.e. the diffeomorphism criterion on the registry.
bool euclid_diffeo(const std::string& a, const std::string& b);

/// Volume 6 pi E(2 sqrt(2)/3) of the optimal Klein bottle.
ClosedFormValue klein_bottle_volume();

/// Cell-by-cell comparison with the printed tables, distinctness of the ten
/// W values, the orientable count, and the flagged n^2 convention gap.
std::vector<Claim> euclid_claims();

}  // namespace confinv
