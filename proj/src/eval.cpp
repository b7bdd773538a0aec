#include "persist/eval.hpp"

#include "persist/events.hpp"
#include "persist/sax.hpp"

#include "json.hpp"

#include <chrono>
#include <set>

namespace persist {

Vector symbol_features(const SymbolSequence& seq) {
  const Eigen::Index k = seq.alphabet_size;
  Vector f = Vector::Zero(k + k * k);
  const auto& s = seq.symbols;
  for (int sym : s) f[sym] += 1.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) f[k + s[i] * k + s[i + 1]] += 1.0;

  auto normalize = [](auto&& block) {
    const Scalar total = block.sum();
    if (total > 0.0) block /= total;
  };
  normalize(f.head(k));
  normalize(f.tail(k * k));
  return f;
}

Discretizer Discretizer::fit(const Dataset& train, const DiscretizerConfig& config) {
  Discretizer d;
  d.config_ = config;
  if (config.method == Method::Persist) d.model_ = fit_multi(train, config.persist);
  return d;
}

SymbolSequence Discretizer::apply(const TimeSeries& ts) const {
  if (config_.method == Method::Sax) return sax_discretize(ts, config_.sax_alphabet, config_.sax_paa);
  return apply_breakpoints(ts, model_.breakpoints);
}

int Discretizer::alphabet_size() const {
  return config_.method == Method::Sax ? config_.sax_alphabet : model_.alphabet_size();
}

Eigen::Index nearest_neighbor(const Eigen::MatrixXd& train, const Vector& query) {
  Eigen::Index best = -1;
  Scalar best_dist = 0.0;
  for (Eigen::Index i = 0; i < train.rows(); ++i) {
    const Scalar d = (train.row(i).transpose() - query).squaredNorm();
    if (best < 0 || d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  return best;
}

Scalar mean_events(const std::vector<SymbolSequence>& seqs) {
  if (seqs.empty()) return 0.0;
  Scalar total = 0.0;
  for (const auto& s : seqs) total += static_cast<Scalar>(run_length_encode(s).events.size());
  return total / static_cast<Scalar>(seqs.size());
}

EvalReport evaluate(const Dataset& train, const Dataset& test, const DiscretizerConfig& config,
                    const std::string& dataset_name) {
  if (train.empty()) throw DataError("evaluation needs at least one training series");
  if (test.empty()) throw DataError("evaluation needs at least one test series");
  std::set<std::string> classes;
  for (const auto& ts : train) {
    if (!ts.label) throw DataError("training series '" + ts.id + "' has no label");
    classes.insert(*ts.label);
  }
  if (classes.size() < 2) throw DataError("training data needs at least two classes");
  for (const auto& ts : test)
    if (!ts.label) throw DataError("test series '" + ts.id + "' has no label");

  const auto start = std::chrono::steady_clock::now();
  const Discretizer disc = Discretizer::fit(train, config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  const Eigen::Index dim = disc.alphabet_size() + Eigen::Index(disc.alphabet_size()) * disc.alphabet_size();
  Eigen::MatrixXd train_features(static_cast<Eigen::Index>(train.size()), dim);
  for (std::size_t i = 0; i < train.size(); ++i)
    train_features.row(static_cast<Eigen::Index>(i)) = symbol_features(disc.apply(train[i])).transpose();

  std::vector<SymbolSequence> test_symbols;
  test_symbols.reserve(test.size());
  std::size_t correct = 0;
  for (const auto& ts : test) {
    test_symbols.push_back(disc.apply(ts));
    const auto nn = nearest_neighbor(train_features, symbol_features(test_symbols.back()));
    if (*train[static_cast<std::size_t>(nn)].label == *ts.label) ++correct;
  }

  EvalReport r;
  r.dataset = dataset_name;
  if (config.method == Method::Sax) {
    r.metric = "sax";
    r.binning = "gaussian";
  } else {
    r.metric = std::string(to_string(config.persist.metric));
    r.binning = std::string(to_string(config.persist.binning));
  }
  r.alphabet_size = disc.alphabet_size();
  r.accuracy = static_cast<Scalar>(correct) / static_cast<Scalar>(test.size());
  r.mean_events_per_series = mean_events(test_symbols);
  r.fit_seconds = elapsed.count();
  return r;
}

std::string report_to_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["dataset"] = r.dataset;
  j["metric"] = r.metric;
  j["binning"] = r.binning;
  j["alphabet_size"] = r.alphabet_size;
  j["accuracy"] = r.accuracy;
  j["mean_events_per_series"] = r.mean_events_per_series;
  j["fit_seconds"] = r.fit_seconds;
  return j.dump(2) + "\n";
}

}  // namespace persist
