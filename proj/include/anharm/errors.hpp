#pragma once

#include <stdexcept>
#include <string>

namespace anharm {

// Failure modes carry their own types so callers can react differently:
// retry with a jittered contour, grow a radius, or surface a bracket.

struct StepUnderflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RadiusTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceFailure : std::runtime_error {
  ConvergenceFailure(const std::string& msg, double lo, double hi)
      : std::runtime_error(msg), bracket_lo(lo), bracket_hi(hi) {}
  double bracket_lo;
  double bracket_hi;
};

struct BoundaryZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateEigenvalue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotStabilized : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstraintViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidTree : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace anharm
