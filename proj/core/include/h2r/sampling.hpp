#pragma once

#include <cstdint>
#include <vector>

#include "h2r/catalog.hpp"
#include "h2r/geometry.hpp"

namespace h2r {

/// Element `index` (0-based) of the van der Corput sequence in the given
/// base; bases 2 and 3 paired give the 2-d Halton points used by the
/// verification suites.  Deterministic by construction.
double van_der_corput(std::uint64_t index, unsigned base);

/// First n Halton points (bases 2, 3) mapped affinely into region,
/// starting at sequence element `offset + 1` (the zeroth element is the
/// corner and is skipped).
std::vector<DomainPoint> halton_points(const Region& region, int n, std::uint64_t offset = 0);

/// First n Halton points of region that are admissible for spec;
/// inadmissible elements are skipped and the sequence advanced.  Throws
/// DomainViolation if fewer than n admissible points are found among the
/// first max_draws candidates.
std::vector<DomainPoint> admissible_halton_points(const SolutionSpec& spec, const Region& region,
                                                  int n, std::uint64_t max_draws = 1u << 20);

}  // namespace h2r
