#include "confinv/report.hpp"

#include "doctest.h"

#include <set>

using namespace confinv;

namespace {

const Report& full_report() {
  static const Report r = run_report();
  return r;
}

}  // namespace

TEST_CASE("full report") {
  const auto& r = full_report();
  CHECK(r.claims.size() == r.passed + r.failed + r.flagged);
  CHECK(r.flagged == 2);
  std::set<std::string> failing, flagged, ids;
  for (const auto& c : r.claims) {
    CHECK(ids.insert(c.id).second);
    if (c.status == ClaimStatus::Fail) failing.insert(c.id);
    if (c.status == ClaimStatus::Flagged) flagged.insert(c.id);
  }
  // The isometry claim for the L(3,1) map is the one statement that does not
  // reproduce; everything else must pass.
  CHECK(failing == std::set<std::string>{"elliptic.l31_round"});
  CHECK(flagged == std::set<std::string>{"torus.baseline", "euclid.convention"});
  CHECK_FALSE(r.ok());
}

TEST_CASE("report rendering is deterministic") {
  const std::string a = report_json(full_report());
  const std::string b = report_json(run_report());
  CHECK(a == b);
  CHECK(report_table(full_report()) == report_table(run_report()));
  CHECK(a.find("\"summary\"") != std::string::npos);
}

TEST_CASE("section selection") {
  for (const auto& name : report_sections()) {
    ReportOptions o;
    o.section = name;
    const auto r = run_report(o);
    CHECK_FALSE(r.claims.empty());
    for (const auto& c : r.claims) {
      const std::string prefix = c.id.substr(0, c.id.find('.'));
      CHECK((name == prefix || (name == "euclid3" && prefix == "euclid")));
    }
  }
  ReportOptions bad;
  bad.section = "nowhere";
  CHECK_THROWS_AS(run_report(bad), std::invalid_argument);
  bad.section = "all";
  bad.precision = 0;
  CHECK_THROWS_AS(run_report(bad), std::invalid_argument);
}

TEST_CASE("corrupted matrix is caught") {
  ReportOptions o;
  o.section = "torus";
  o.isospectral.s1(2, 1) += 1;
  const auto r = run_report(o);
  CHECK(r.failed >= 1);
  CHECK_FALSE(r.ok());

  ReportOptions clean;
  clean.section = "torus";
  CHECK(run_report(clean).ok());
}
