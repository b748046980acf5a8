#include "chimeraq/stats.hpp"

#include <algorithm>
#include <cmath>

#include "chimeraq/error.hpp"

namespace chimeraq {

RunStats compute_stats(std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorCode::empty_sample, "no measurements");
  for (const double x : samples)
    if (!(x > 0.0))
      throw Error(ErrorCode::nonpositive_sample,
                  "all samples must be strictly positive");

  RunStats s;
  s.count = samples.size();
  s.min = *std::min_element(samples.begin(), samples.end());
  s.max = *std::max_element(samples.begin(), samples.end());

  double sum = 0.0, log_sum = 0.0;
  for (const double x : samples) {
    sum += x;
    log_sum += std::log(x);
  }
  const auto n = static_cast<double>(s.count);
  s.mean = sum / n;
  s.geomean = std::exp(log_sum / n);

  if (s.count > 1) {
    double sq = 0.0;
    for (const double x : samples) sq += (x - s.mean) * (x - s.mean);
    s.std_dev = std::sqrt(sq / (n - 1.0));
  }
  // Floating point can nudge the geometric mean a hair past an extreme when
  // all samples are (nearly) equal; clamp so min <= geomean <= mean holds.
  s.geomean = std::clamp(s.geomean, s.min, std::min(s.mean, s.max));
  return s;
}

}  // namespace chimeraq
