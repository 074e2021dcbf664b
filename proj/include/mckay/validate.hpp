#pragma once

#include <string>
#include <vector>

#include "mckay/group.hpp"

namespace mckay {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationCounts {
  Int specials = 0;
  Int curves = 0;
  Int clusters = 0;
  Int hj_length = 0;
};

/// Result of running every cross-validation check on one group.
struct ValidationReport {
  explicit ValidationReport(GroupParams g) : group(g) {}

  GroupParams group;
  std::vector<CheckResult> checks;
  ValidationCounts counts;

  bool all_pass() const;
};

/// Runs the full cross-validation suite: the speciality criteria against
/// each other, the monomial side against the toric side, the cluster data
/// against the fan charts, and the quiver identities.  Failures are
/// recorded in the report, never thrown.
ValidationReport check_group(const GroupParams& g);

/// check_group over every small pair (r, a) with 2 <= r <= r_max,
/// 1 <= a < r, gcd(r, a) = 1, in lexicographic order.
std::vector<ValidationReport> sweep(Int r_max);

}  // namespace mckay
