#pragma once

#include <stdexcept>
#include <string>

namespace h2r {

/// A point or parameter left the admissible region of a field or formula.
struct DomainViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Level curve is not locally a graph over x (f_y = 0).
struct LevelCurveDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent job configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace h2r
