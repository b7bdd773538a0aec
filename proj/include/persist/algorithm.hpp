#pragma once

#include "persist/core.hpp"

#include <span>
#include <vector>

namespace persist {

/// Symbol j covers [b_{j-1}, b_j), with b_{-1} = -inf and b_{k-1} = +inf.
std::vector<int> apply_breakpoints(const Vector& values, std::span<const Scalar> breakpoints);
SymbolSequence apply_breakpoints(const TimeSeries& ts, std::span<const Scalar> breakpoints);

/// Pooled symbol statistics of a dataset under a breakpoint set.
std::vector<SymbolStats> dataset_stats(const Dataset& data, std::span<const Scalar> breakpoints);

/// Aggregate persistence of a (sorted) breakpoint set over the dataset.
Scalar score_breakpoints(const Dataset& data, std::span<const Scalar> breakpoints, Metric metric);

struct ScoredCandidate {
  Scalar value = 0.0;
  Scalar score = 0.0;
};

/// Scores bps + {c} for every candidate c and returns the best one. Equal
/// scores resolve to the smallest candidate value. Requires a nonempty pool.
ScoredCandidate best_bp(const Dataset& data, std::span<const Scalar> bps,
                        std::span<const Scalar> candidates, Metric metric);
ScoredCandidate best_bp(const TimeSeries& ts, std::span<const Scalar> bps,
                        std::span<const Scalar> candidates, Metric metric);

struct FitOptions {
  Metric metric = Metric::Wasserstein;
  Binning binning = Binning::EqualFrequency;
  int bins = 100;
};

struct FitResult {
  BreakpointModel model;
  std::vector<Scalar> accepted;  // breakpoints in acceptance order
  std::vector<Scalar> scores;    // aggregate score after each acceptance
};

/// Forward greedy selection: accept the best candidate while it strictly
/// improves the score (starting from 0 with no breakpoints).
FitResult fit_traced(const Dataset& data, const FitOptions& options = {});

BreakpointModel fit(const TimeSeries& ts, const FitOptions& options = {});

/// Candidates come from the pooled values; statistics pool per-series counts
/// and never count a transition across two series.
BreakpointModel fit_multi(const Dataset& data, const FitOptions& options = {});

}  // namespace persist
