#include "specbound/report.hpp"

#include <cmath>

namespace specbound {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Warn:
      return "WARN";
  }
  return "?";  // unreachable
}

Status relative_slack_status(double measured, double bound, double tol) {
  const double slack = bound - measured;
  return slack >= -tol * std::max(1.0, std::abs(bound)) ? Status::Pass
                                                        : Status::Fail;
}

Status absolute_slack_status(double measured, double bound, double tol) {
  return bound - measured >= -tol ? Status::Pass : Status::Fail;
}

}  // namespace specbound
