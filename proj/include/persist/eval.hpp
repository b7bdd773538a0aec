#pragma once

#include "persist/algorithm.hpp"
#include "persist/core.hpp"

#include <string>

namespace persist {

/// Unigram histogram (k entries) followed by bigram histogram (k*k entries,
/// index a*k + b for the pair a->b), each L1-normalized.
Vector symbol_features(const SymbolSequence& seq);

enum class Method { Persist, Sax };

struct DiscretizerConfig {
  Method method = Method::Persist;
  FitOptions persist;
  int sax_alphabet = 4;
  int sax_paa = 2;
};

/// A discretizer fitted on training data only.
class Discretizer {
 public:
  static Discretizer fit(const Dataset& train, const DiscretizerConfig& config);

  SymbolSequence apply(const TimeSeries& ts) const;
  int alphabet_size() const;
  const DiscretizerConfig& config() const { return config_; }
  const BreakpointModel& model() const { return model_; }

 private:
  DiscretizerConfig config_;
  BreakpointModel model_;
};

/// Index of the nearest row of `train` (Euclidean), smallest index on ties.
Eigen::Index nearest_neighbor(const Eigen::MatrixXd& train, const Vector& query);

struct EvalReport {
  std::string dataset;
  std::string metric;
  std::string binning;
  int alphabet_size = 1;
  Scalar accuracy = 0.0;
  Scalar mean_events_per_series = 0.0;
  Scalar fit_seconds = 0.0;
};

/// Fits on train, classifies each test series by 1-NN over symbol_features.
/// Both splits need labels; train needs at least two classes.
EvalReport evaluate(const Dataset& train, const Dataset& test, const DiscretizerConfig& config,
                    const std::string& dataset_name = "dataset");

std::string report_to_json(const EvalReport& report);

/// Mean number of run-length events per series.
Scalar mean_events(const std::vector<SymbolSequence>& seqs);

}  // namespace persist
