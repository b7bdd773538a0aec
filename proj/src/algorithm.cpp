#include "persist/algorithm.hpp"

#include "persist/binning.hpp"
#include "persist/score.hpp"

#include <algorithm>
#include <stdexcept>

namespace persist {
namespace {

Vector pooled_values(const Dataset& data) {
  Eigen::Index total = 0;
  for (const auto& ts : data) total += ts.size();
  Vector out(total);
  Eigen::Index offset = 0;
  for (const auto& ts : data) {
    out.segment(offset, ts.size()) = ts.values;
    offset += ts.size();
  }
  return out;
}

}  // namespace

std::vector<int> apply_breakpoints(const Vector& values, std::span<const Scalar> breakpoints) {
  std::vector<int> out(static_cast<std::size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), values[i]);
    out[i] = static_cast<int>(it - breakpoints.begin());
  }
  return out;
}

SymbolSequence apply_breakpoints(const TimeSeries& ts, std::span<const Scalar> breakpoints) {
  return {ts.id, ts.label, apply_breakpoints(ts.values, breakpoints),
          static_cast<int>(breakpoints.size()) + 1};
}

std::vector<SymbolStats> dataset_stats(const Dataset& data, std::span<const Scalar> breakpoints) {
  SymbolCounts counts(static_cast<int>(breakpoints.size()) + 1);
  for (const auto& ts : data) counts.add(apply_breakpoints(ts.values, breakpoints));
  return counts.stats();
}

Scalar score_breakpoints(const Dataset& data, std::span<const Scalar> breakpoints, Metric metric) {
  return persistence_aggregate(dataset_stats(data, breakpoints), metric);
}

ScoredCandidate best_bp(const Dataset& data, std::span<const Scalar> bps,
                        std::span<const Scalar> candidates, Metric metric) {
  if (candidates.empty()) throw std::invalid_argument("best_bp: empty candidate pool");

  std::vector<Scalar> base(bps.begin(), bps.end());
  std::sort(base.begin(), base.end());

  bool have_best = false;
  ScoredCandidate best;
  for (const Scalar c : candidates) {
    std::vector<Scalar> set = base;
    set.insert(std::upper_bound(set.begin(), set.end(), c), c);
    const Scalar score = score_breakpoints(data, set, metric);
    if (!have_best || score > best.score || (score == best.score && c < best.value)) {
      best = {c, score};
      have_best = true;
    }
  }
  return best;
}

ScoredCandidate best_bp(const TimeSeries& ts, std::span<const Scalar> bps,
                        std::span<const Scalar> candidates, Metric metric) {
  return best_bp(Dataset{ts}, bps, candidates, metric);
}

FitResult fit_traced(const Dataset& data, const FitOptions& options) {
  if (data.empty()) throw DataError("cannot fit an empty dataset");

  std::vector<Scalar> pool = candidates(pooled_values(data), options.binning, options.bins);

  FitResult result;
  result.model.metric = options.metric;
  result.model.binning = options.binning;
  result.model.bins = options.bins;

  std::vector<Scalar>& bps = result.model.breakpoints;
  Scalar score = 0.0;
  while (!pool.empty()) {
    const ScoredCandidate next = best_bp(data, bps, pool, options.metric);
    if (!(next.score > score)) break;
    score = next.score;
    bps.insert(std::upper_bound(bps.begin(), bps.end(), next.value), next.value);
    pool.erase(std::find(pool.begin(), pool.end(), next.value));
    result.accepted.push_back(next.value);
    result.scores.push_back(score);
  }
  result.model.final_score = score;
  return result;
}

BreakpointModel fit(const TimeSeries& ts, const FitOptions& options) {
  return fit_traced(Dataset{ts}, options).model;
}

BreakpointModel fit_multi(const Dataset& data, const FitOptions& options) {
  return fit_traced(data, options).model;
}

}  // namespace persist
