#include "persist/core.hpp"

#include <cmath>
#include <string>

namespace persist {

std::string_view to_string(Metric metric) {
  return metric == Metric::KL ? "kl" : "wasserstein";
}

std::string_view to_string(Binning binning) {
  return binning == Binning::EqualFrequency ? "ef" : "ew";
}

Metric parse_metric(std::string_view text) {
  if (text == "kl") return Metric::KL;
  if (text == "wasserstein") return Metric::Wasserstein;
  throw DataError("unknown metric '" + std::string(text) + "'");
}

Binning parse_binning(std::string_view text) {
  if (text == "ef") return Binning::EqualFrequency;
  if (text == "ew") return Binning::EqualWidth;
  throw DataError("unknown binning '" + std::string(text) + "'");
}

TimeSeries::TimeSeries(std::string id_, std::optional<std::string> label_, Vector values_)
    : id(std::move(id_)), label(std::move(label_)), values(std::move(values_)) {
  if (values.size() == 0) throw DataError("series '" + id + "' is empty");
  if (!values.allFinite()) throw DataError("series '" + id + "' contains non-finite values");
}

TimeSeries::TimeSeries(std::string id_, std::optional<std::string> label_,
                       const std::vector<Scalar>& values_)
    : TimeSeries(std::move(id_), std::move(label_),
                 Eigen::Map<const Vector>(values_.data(), static_cast<Eigen::Index>(values_.size()))) {}

void BreakpointModel::validate() const {
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!std::isfinite(breakpoints[i])) throw DataError("breakpoint is not finite");
    if (i > 0 && !(breakpoints[i - 1] < breakpoints[i]))
      throw DataError("breakpoints are not strictly increasing");
  }
  if (bins < 1) throw DataError("bins must be positive");
}

void SymbolSequence::validate() const {
  if (alphabet_size < 1) throw DataError("alphabet size must be positive");
  for (int s : symbols)
    if (s < 0 || s >= alphabet_size) throw DataError("symbol out of alphabet range");
}

SymbolCounts::SymbolCounts(int alphabet_size)
    : occurrences_(alphabet_size, 0), non_terminal_(alphabet_size, 0), self_pairs_(alphabet_size, 0) {}

void SymbolCounts::add(const std::vector<int>& symbols) {
  const std::size_t n = symbols.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int s = symbols[i];
    ++occurrences_[s];
    if (i + 1 < n) {
      ++non_terminal_[s];
      if (symbols[i + 1] == s) ++self_pairs_[s];
    }
  }
  total_ += n;
}

std::vector<SymbolStats> SymbolCounts::stats() const {
  std::vector<SymbolStats> out(occurrences_.size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    auto& st = out[s];
    st.symbol = static_cast<int>(s);
    st.count = occurrences_[s];
    st.p_appear = total_ > 0 ? static_cast<Scalar>(occurrences_[s]) / static_cast<Scalar>(total_) : 0.0;
    if (non_terminal_[s] > 0)
      st.p_repeat = static_cast<Scalar>(self_pairs_[s]) / static_cast<Scalar>(non_terminal_[s]);
  }
  return out;
}

std::vector<SymbolStats> estimate_stats(const SymbolSequence& seq) {
  SymbolCounts counts(seq.alphabet_size);
  counts.add(seq.symbols);
  return counts.stats();
}

}  // namespace persist
