#include "persist/score.hpp"

namespace persist {

Scalar persistence_symbol(const SymbolStats& stats, Metric metric) {
  if (!stats.p_repeat) return kRejected;
  const Scalar repeat = *stats.p_repeat;
  const Scalar appear = stats.p_appear;
  if (repeat == appear) return 0.0;
  // For Wasserstein sgn(d)*|d| is exactly d, so skip the round trip.
  if (metric == Metric::Wasserstein) return repeat - appear;
  const Scalar d = skl(TwoPointDist<Scalar>{appear}, TwoPointDist<Scalar>{repeat});
  return repeat > appear ? d : -d;
}

Scalar persistence_aggregate(std::span<const SymbolStats> stats, Metric metric) {
  if (stats.empty()) return kRejected;
  Scalar sum = 0.0;
  for (const auto& s : stats) {
    const Scalar v = persistence_symbol(s, metric);
    if (v == kRejected) return kRejected;
    sum += v;
  }
  return sum / static_cast<Scalar>(stats.size());
}

}  // namespace persist
