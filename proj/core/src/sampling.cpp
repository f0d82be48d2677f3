#include "h2r/sampling.hpp"

namespace h2r {

double van_der_corput(std::uint64_t index, unsigned base) {
  double result = 0.0;
  double digit = 1.0 / base;
  while (index > 0) {
    result += digit * (index % base);
    index /= base;
    digit /= base;
  }
  return result;
}

std::vector<DomainPoint> halton_points(const Region& region, int n, std::uint64_t offset) {
  std::vector<DomainPoint> pts;
  pts.reserve(static_cast<size_t>(n));
  for (std::uint64_t k = offset + 1; pts.size() < static_cast<size_t>(n); ++k)
    pts.push_back({region.x0 + van_der_corput(k, 2) * region.width(),
                   region.y0 + van_der_corput(k, 3) * region.height()});
  return pts;
}

std::vector<DomainPoint> admissible_halton_points(const SolutionSpec& spec, const Region& region,
                                                  int n, std::uint64_t max_draws) {
  std::vector<DomainPoint> pts;
  pts.reserve(static_cast<size_t>(n));
  for (std::uint64_t k = 1; pts.size() < static_cast<size_t>(n); ++k) {
    if (k > max_draws)
      throw DomainViolation("admissible_halton_points: region contains too few admissible "
                            "points for " + family_name(spec.family));
    const DomainPoint p{region.x0 + van_der_corput(k, 2) * region.width(),
                        region.y0 + van_der_corput(k, 3) * region.height()};
    if (admissible(spec, p)) pts.push_back(p);
  }
  return pts;
}

}  // namespace h2r
