#pragma once

#include <string>
#include <vector>

namespace confinv {

enum class ClaimStatus { Pass, Fail, Flagged };

inline const char* status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Flagged: return "flagged";
  }
  return "fail";
}

/// One reproduced statement: what was expected, what came out.
struct Claim {
  std::string id;
  std::string locator;
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::Fail;
};

inline ClaimStatus pass_if(bool ok) { return ok ? ClaimStatus::Pass : ClaimStatus::Fail; }

}  // namespace confinv
