#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace persist {

using Scalar = double;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Input data that cannot be processed (non-finite values, degenerate series, bad schema).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem failures: unreadable input, unwritable output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Metric { KL, Wasserstein };
enum class Binning { EqualFrequency, EqualWidth };

std::string_view to_string(Metric metric);
std::string_view to_string(Binning binning);
Metric parse_metric(std::string_view text);
Binning parse_binning(std::string_view text);

/// One univariate series. Values are finite and non-empty.
struct TimeSeries {
  std::string id;
  std::optional<std::string> label;
  Vector values;

  TimeSeries() = default;
  TimeSeries(std::string id, std::optional<std::string> label, Vector values);
  TimeSeries(std::string id, std::optional<std::string> label, const std::vector<Scalar>& values);

  Eigen::Index size() const { return values.size(); }
};

using Dataset = std::vector<TimeSeries>;

/// Fitted discretizer: k-1 strictly increasing breakpoints induce k symbols.
struct BreakpointModel {
  std::vector<Scalar> breakpoints;
  Metric metric = Metric::Wasserstein;
  Binning binning = Binning::EqualFrequency;
  int bins = 100;
  Scalar final_score = 0.0;

  int alphabet_size() const { return static_cast<int>(breakpoints.size()) + 1; }
  void validate() const;

  friend bool operator==(const BreakpointModel&, const BreakpointModel&) = default;
};

struct SymbolSequence {
  std::string id;
  std::optional<std::string> label;
  std::vector<int> symbols;
  int alphabet_size = 1;

  std::size_t size() const { return symbols.size(); }
  void validate() const;

  friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;
};

/// P(s) and P_r(s) for one symbol. p_repeat is empty when the symbol never
/// occurs before the last position.
struct SymbolStats {
  int symbol = 0;
  Scalar p_appear = 0.0;
  std::optional<Scalar> p_repeat;
  std::size_t count = 0;
};

/// Raw occurrence and self-transition counts. Several sequences can be
/// accumulated; transitions never cross sequence boundaries.
class SymbolCounts {
 public:
  explicit SymbolCounts(int alphabet_size);

  void add(const std::vector<int>& symbols);
  void add(const SymbolSequence& seq) { add(seq.symbols); }

  int alphabet_size() const { return static_cast<int>(occurrences_.size()); }
  std::size_t total() const { return total_; }
  std::size_t occurrences(int s) const { return occurrences_[s]; }
  std::size_t non_terminal(int s) const { return non_terminal_[s]; }
  std::size_t self_pairs(int s) const { return self_pairs_[s]; }

  std::vector<SymbolStats> stats() const;

 private:
  std::vector<std::size_t> occurrences_;
  std::vector<std::size_t> non_terminal_;
  std::vector<std::size_t> self_pairs_;
  std::size_t total_ = 0;
};

std::vector<SymbolStats> estimate_stats(const SymbolSequence& seq);

}  // namespace persist
