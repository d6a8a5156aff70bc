#pragma once

// The reproduction report: every checked statement as a Claim, grouped in
// sections, rendered as JSON or an aligned text table.

#include "confinv/claims.hpp"
#include "confinv/flattorus.hpp"

#include <string>
#include <vector>

namespace confinv {

/// Section names accepted by run_report, in report order.
const std::vector<std::string>& report_sections();

struct ReportOptions {
  std::string section = "all";
  int precision = 10;
  IsospectralPairData isospectral = builtin_isospectral_pair();
};

struct Report {
  std::vector<Claim> claims;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t flagged = 0;
  bool ok() const { return failed == 0; }
};

/// Throws std::invalid_argument for an unknown section.
Report run_report(const ReportOptions& options = {});

std::string report_json(const Report& report);
std::string report_table(const Report& report);

}  // namespace confinv
