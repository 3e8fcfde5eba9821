#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rtdist {

// Empirical CDF of a simulation run: the sorted sample, the seed that
// produced it, and the Kolmogorov-Smirnov distance against a reference CDF.
struct EcdfSummary {
  std::uint64_t n = 0;
  std::vector<double> sorted_samples;
  double ks_distance = 0;
  std::uint64_t seed = 0;
};

// sup_x |ECDF(x) - F(x)| for an already sorted sample.
template <class CdfFn>
double ks_distance(const std::vector<double>& sorted, CdfFn&& cdf) {
  if (sorted.empty()) throw std::invalid_argument("ks_distance: empty sample");
  const double n = static_cast<double>(sorted.size());
  double d = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double lo = f - static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n - f;
    d = std::max({d, lo, hi});
  }
  return d;
}

}  // namespace rtdist
