#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace specbound {

enum class Status { Pass, Fail, Warn };

// "PASS" / "FAIL" / "WARN".
std::string_view to_string(Status s);

// One verified inequality (or recorded observation). `measured` is the side
// that must not exceed `bound`; slack = bound - measured. Distance-type
// suites store both sides in linear scale; determinant suites store them in
// the log domain, where slack may legitimately be a small negative number
// within tolerance. Warn rows are informational comparisons that never gate
// an exit code.
struct BoundReport {
  std::string suite;
  std::string case_id;
  int dim = 0;
  std::uint64_t seed = 0;
  double param = 0.0;
  double measured = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  Status status = Status::Pass;
  std::string note;  // free-form context; not part of the CSV schema

  bool failed() const { return status == Status::Fail; }
};

// Classification helpers. Both set slack = bound - measured and then grade:
//   relative_slack_status: pass iff slack >= -tol * max(1, |bound|)
//   absolute_slack_status: pass iff slack >= -tol
Status relative_slack_status(double measured, double bound, double tol);
Status absolute_slack_status(double measured, double bound, double tol);

}  // namespace specbound
