// persist: fit, apply and evaluate persistence-based discretizations.

#include "persist/algorithm.hpp"
#include "persist/eval.hpp"
#include "persist/events.hpp"
#include "persist/io.hpp"
#include "persist/sax.hpp"
#include "persist/score.hpp"

#include "CLI11.hpp"

#include <iomanip>
#include <iostream>

namespace {

constexpr const char* kVersion = "persist 1.0.0";

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kIo = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};


struct Options {
  std::string input, output, model, train, test, emit = "symbols", dataset_name;
  std::string method = "persist";
  std::vector<double> breakpoints;
  bool have_breakpoints = false;
  std::string format_name = "ucr-tsv";
  std::string metric_name = "wasserstein";
  std::string binning_name = "ef";
  persist::DatasetFormat format = persist::DatasetFormat::UcrTsv;
  persist::Metric metric = persist::Metric::Wasserstein;
  persist::Binning binning = persist::Binning::EqualFrequency;
  int bins = 100;
  int alphabet = 4;
  int paa = 2;
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format_name, "Dataset format")->check(CLI::IsMember({"ucr-tsv", "csv"}));
}

void add_fit_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--metric", o.metric_name, "Persistence metric (default wasserstein)")
      ->check(CLI::IsMember({"kl", "wasserstein"}));
  cmd->add_option("--binning", o.binning_name, "Candidate initialization (default ef)")
      ->check(CLI::IsMember({"ef", "ew"}));
  cmd->add_option("--bins", o.bins, "Number of candidate bins")->check(CLI::Range(2, 100000));
}

void add_emit(CLI::App* cmd, Options& o) {
  cmd->add_option("--emit", o.emit, "Output kind")->check(CLI::IsMember({"symbols", "events"}));
}

void write_sequences(const std::vector<persist::SymbolSequence>& seqs, const Options& o) {
  if (o.emit == "events") {
    std::vector<persist::EventSequence> events;
    events.reserve(seqs.size());
    for (const auto& s : seqs) events.push_back(persist::run_length_encode(s));
    persist::export_events(events, o.output);
  } else {
    persist::write_file_atomic(o.output, persist::format_symbols_csv(seqs));
  }
}

int run_fit(const Options& o) {
  const auto data = persist::load_dataset(o.input, o.format);
  const auto model = persist::fit_multi(data, {o.metric, o.binning, o.bins});
  persist::save_model(model, o.output);
  std::cout << "final_score " << persist::format_scalar(model.final_score) << "\n"
            << "alphabet_size " << model.alphabet_size() << "\n";
  return kOk;
}

int run_apply(const Options& o) {
  const auto model = persist::load_model(o.model);
  const auto data = persist::load_dataset(o.input, o.format);
  std::vector<persist::SymbolSequence> seqs;
  for (const auto& ts : data) seqs.push_back(persist::apply_breakpoints(ts, model.breakpoints));
  write_sequences(seqs, o);
  return kOk;
}

int run_sax(const Options& o) {
  const auto data = persist::load_dataset(o.input, o.format);
  std::vector<persist::SymbolSequence> seqs;
  for (const auto& ts : data) seqs.push_back(persist::sax_discretize(ts, o.alphabet, o.paa));
  write_sequences(seqs, o);
  return kOk;
}

int run_score(const Options& o) {
  std::vector<double> bps;
  if (o.have_breakpoints) {
    bps = o.breakpoints;
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  } else if (!o.model.empty()) {
    bps = persist::load_model(o.model).breakpoints;
  } else {
    throw UsageError("score needs --model or --breakpoints");
  }
  const auto data = persist::load_dataset(o.input, o.format);
  const auto stats = persist::dataset_stats(data, bps);

  std::cout << std::fixed << std::setprecision(6);
  std::cout << "symbol\tP\tP_r\tpersistence_kl\tpersistence_w\n";
  for (const auto& s : stats) {
    std::cout << s.symbol << '\t' << s.p_appear << '\t';
    if (s.p_repeat)
      std::cout << *s.p_repeat;
    else
      std::cout << "undefined";
    std::cout << '\t' << persist::persistence_symbol(s, persist::Metric::KL) << '\t'
              << persist::persistence_symbol(s, persist::Metric::Wasserstein) << '\n';
  }
  std::cout << "aggregate_kl\t" << persist::persistence_aggregate(stats, persist::Metric::KL) << '\n'
            << "aggregate_w\t" << persist::persistence_aggregate(stats, persist::Metric::Wasserstein) << '\n';
  return kOk;
}

int run_eval(const Options& o) {
  const auto train = persist::load_dataset(o.train, o.format);
  const auto test = persist::load_dataset(o.test, o.format);
  persist::DiscretizerConfig config;
  config.method = o.method == "sax" ? persist::Method::Sax : persist::Method::Persist;
  config.persist = {o.metric, o.binning, o.bins};
  config.sax_alphabet = o.alphabet;
  config.sax_paa = o.paa;
  const std::string name = o.dataset_name.empty() ? std::filesystem::path(o.train).stem().string() : o.dataset_name;
  const auto report = persist::evaluate(train, test, config, name);
  const auto json = persist::report_to_json(report);
  if (o.output.empty())
    std::cout << json;
  else
    persist::write_file_atomic(o.output, json);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistence-based symbolic discretization of time series"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options o;

  auto* fit = app.add_subcommand("fit", "Fit breakpoints on a dataset");
  fit->add_option("--input", o.input, "Dataset path")->required();
  add_format(fit, o);
  add_fit_flags(fit, o);
  fit->add_option("--output", o.output, "Model JSON path")->required();

  auto* apply = app.add_subcommand("apply", "Discretize a dataset with a fitted model");
  apply->add_option("--model", o.model, "Model JSON path")->required();
  apply->add_option("--input", o.input, "Dataset path")->required();
  add_format(apply, o);
  apply->add_option("--output", o.output, "Output path")->required();
  add_emit(apply, o);

  auto* sax = app.add_subcommand("sax", "Discretize a dataset with SAX");
  sax->add_option("--input", o.input, "Dataset path")->required();
  add_format(sax, o);
  sax->add_option("--output", o.output, "Output path")->required();
  sax->add_option("--alphabet", o.alphabet, "Alphabet size")->check(CLI::Range(2, 26));
  sax->add_option("--paa", o.paa, "PAA window width")->check(CLI::PositiveNumber);
  add_emit(sax, o);

  auto* score = app.add_subcommand("score", "Print per-symbol persistence of a breakpoint set");
  score->add_option("--input", o.input, "Dataset path")->required();
  add_format(score, o);
  auto* model_opt = score->add_option("--model", o.model, "Model JSON path");
  score->add_option("--breakpoints", o.breakpoints, "Breakpoint values")
      ->delimiter(',')
      ->excludes(model_opt);

  auto* eval = app.add_subcommand("eval", "Evaluate a discretizer with 1-NN classification");
  eval->add_option("--train", o.train, "Training dataset")->required();
  eval->add_option("--test", o.test, "Test dataset")->required();
  add_format(eval, o);
  eval->add_option("--method", o.method, "Discretizer")->check(CLI::IsMember({"persist", "sax"}));
  add_fit_flags(eval, o);
  eval->add_option("--alphabet", o.alphabet, "SAX alphabet size")->check(CLI::Range(2, 26));
  eval->add_option("--paa", o.paa, "SAX PAA window width")->check(CLI::PositiveNumber);
  eval->add_option("--dataset", o.dataset_name, "Dataset name for the report");
  eval->add_option("--output", o.output, "Report path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  o.have_breakpoints = score->count("--breakpoints") > 0;
  o.format = persist::parse_dataset_format(o.format_name);
  o.metric = persist::parse_metric(o.metric_name);
  o.binning = persist::parse_binning(o.binning_name);

  try {
    if (*fit) return run_fit(o);
    if (*apply) return run_apply(o);
    if (*sax) return run_sax(o);
    if (*score) return run_score(o);
    if (*eval) return run_eval(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const persist::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const persist::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}
