#pragma once

// Shared test utilities: deterministic random jets and the sampling regions
// used for each catalog family.

#include <random>
#include <utility>
#include <vector>

#include "h2r/catalog.hpp"
#include "h2r/geometry.hpp"

namespace h2r_test {

struct JetSample {
  h2r::DomainPoint p;
  h2r::Jet3 j;
};

// Deterministic stream of generic (point, jet) samples: y bounded away from
// 0, derivative entries in moderate ranges.  Seeded per call site.
inline std::vector<JetSample> random_jets(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ux(-3.0, 3.0);
  std::uniform_real_distribution<double> uy(0.2, 5.0);
  std::uniform_real_distribution<double> ud(-2.0, 2.0);
  std::vector<JetSample> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double x = ux(rng), y = uy(rng);
    h2r::Jet3 j;
    j.f = ud(rng);
    j.fx = ud(rng);
    j.fy = ud(rng);
    j.fxx = ud(rng);
    j.fxy = ud(rng);
    j.fyy = ud(rng);
    j.fxxx = ud(rng);
    j.fxxy = ud(rng);
    j.fxyy = ud(rng);
    j.fyyy = ud(rng);
    out.push_back({h2r::DomainPoint(x, y), j});
  }
  return out;
}

// A sampling region on which the family (with default_catalog constants) is
// admissible with margin.
inline h2r::Region family_region(h2r::Family f) {
  using h2r::Family;
  switch (f) {
    case Family::Plane: return {0.0, 1.0, 1.0, 2.0};
    case Family::ArcsinY: return {1.0, 2.0, 0.5, 1.5};  // a = 1/2: admissible for y < 2
    case Family::Funnel: return {1.0, 2.0, 1.0, 2.0};
    case Family::RationalX: return {1.0, 2.0, 1.0, 2.0};
    case Family::ArcsinInvY: return {1.0, 2.0, 1.0, 2.0};
    case Family::UmbilicalGraph: return {-0.5, 0.5, 0.8, 1.6};
    case Family::HorizontalPlane: return {0.0, 1.0, 1.0, 2.0};
    default: return {0.0, 1.0, 1.0, 2.0};
  }
}

inline std::pair<double, double> family_urange(h2r::Family f) {
  return f == h2r::Family::GeodesicCylinder ? std::pair{-0.9, 0.9} : std::pair{0.5, 2.0};
}

}  // namespace h2r_test
