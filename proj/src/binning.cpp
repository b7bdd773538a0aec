#include "persist/binning.hpp"

#include <algorithm>
#include <stdexcept>

namespace persist {
namespace {

void check_bins(int bins) {
  if (bins < 2) throw std::invalid_argument("bins must be at least 2");
}

void check_spread(const Vector& values) {
  if (values.size() == 0) throw DataError("degenerate series: no values");
  if (!(values.maxCoeff() > values.minCoeff()))
    throw DataError("degenerate series: all values identical");
}

}  // namespace

std::vector<Scalar> equal_frequency_candidates(const Vector& values, int bins) {
  check_bins(bins);
  check_spread(values);

  std::vector<Scalar> sorted(values.data(), values.data() + values.size());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<long long>(sorted.size());

  std::vector<Scalar> out;
  out.reserve(bins - 1);
  for (long long j = 1; j < bins; ++j) {
    const long long rank = (j * n + bins - 1) / bins;  // ceil(j*n/bins)
    const Scalar v = sorted[std::max(rank, 1LL) - 1];
    if (out.empty() || out.back() < v) out.push_back(v);
  }
  return out;
}

std::vector<Scalar> equal_width_candidates(const Vector& values, int bins) {
  check_bins(bins);
  check_spread(values);
  const Scalar lo = values.minCoeff();
  const Scalar width = (values.maxCoeff() - lo) / bins;
  std::vector<Scalar> out;
  out.reserve(bins - 1);
  for (int j = 1; j < bins; ++j) out.push_back(lo + j * width);
  return out;
}

std::vector<Scalar> candidates(const Vector& values, Binning binning, int bins) {
  return binning == Binning::EqualFrequency ? equal_frequency_candidates(values, bins)
                                            : equal_width_candidates(values, bins);
}

}  // namespace persist
