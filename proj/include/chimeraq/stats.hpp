#pragma once

#include <cstddef>
#include <span>

namespace chimeraq {

// Summary of a sample of positive measurements (times or gaps).
struct RunStats {
  std::size_t count = 0;
  double mean = 0.0;     // arithmetic mean
  double geomean = 0.0;  // exp of the mean of logs
  double min = 0.0;
  double max = 0.0;
  double std_dev = 0.0;  // sample standard deviation (divisor count-1), 0 if count==1

  bool operator==(const RunStats&) const = default;
};

// Errors: empty-sample; nonpositive-sample-for-geomean (the geometric mean
// requires strictly positive samples).  For positive samples,
// min <= geomean <= mean <= max always holds.
RunStats compute_stats(std::span<const double> samples);

}  // namespace chimeraq
