#pragma once

#include "persist/core.hpp"

#include <vector>

namespace persist {

/// Interior quantile boundaries at ranks j/bins (lower rank statistic, no
/// interpolation), deduplicated. Every candidate is an observed value.
/// Throws DataError on a constant series, std::invalid_argument if bins < 2.
std::vector<Scalar> equal_frequency_candidates(const Vector& values, int bins);

/// min + j*(max-min)/bins for j = 1..bins-1.
std::vector<Scalar> equal_width_candidates(const Vector& values, int bins);

std::vector<Scalar> candidates(const Vector& values, Binning binning, int bins);

inline std::vector<Scalar> equal_frequency_candidates(const TimeSeries& ts, int bins) {
  return equal_frequency_candidates(ts.values, bins);
}
inline std::vector<Scalar> equal_width_candidates(const TimeSeries& ts, int bins) {
  return equal_width_candidates(ts.values, bins);
}

}  // namespace persist
