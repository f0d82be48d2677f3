#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "h2r/catalog.hpp"
#include "h2r/geometry.hpp"

namespace h2r {

/// One line of a verification table: a measured defect against its pinned
/// threshold.  For rank checks, measured/threshold hold the measured and
/// expected ranks.
struct PropertyCheck {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string member;
  std::vector<PropertyCheck> checks;

  bool all_pass() const;
  std::string to_text() const;  // aligned pass/fail table
};

/// Run the expected-property suite of a catalog member: minimality,
/// totally-geodesic and umbilical residuals, the umbilic closed relation,
/// Gauss rank — whichever list_expected_properties claims.  Graph members
/// sample `points` quasi-random admissible points of `region`; vertical
/// members sample `points` parameters of `urange`.
VerifyReport verify_member(const SolutionSpec& spec, const std::optional<Region>& region,
                           const std::optional<std::pair<double, double>>& urange,
                           int points = 500);

}  // namespace h2r
