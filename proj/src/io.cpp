#include "persist/io.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace persist {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line, std::string_view separators) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find_first_of(separators, pos);
    out.push_back(trim(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string where(std::string_view source, std::size_t line, std::size_t column) {
  std::ostringstream os;
  os << source << ": line " << line << ", column " << column;
  return os.str();
}

Scalar parse_value(std::string_view field, std::string_view source, std::size_t line, std::size_t column) {
  Scalar v = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (field.empty() || ec != std::errc() || ptr != end)
    throw DataError(where(source, line, column) + ": not a number '" + std::string(field) + "'");
  if (!std::isfinite(v))
    throw DataError(where(source, line, column) + ": non-finite value '" + std::string(field) + "'");
  return v;
}

std::string format_17(Scalar v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void add_values(std::vector<Scalar>& values, const std::vector<std::string_view>& fields, std::size_t first,
                std::string_view source, std::size_t lineno) {
  for (std::size_t c = first; c < fields.size(); ++c) {
    // Trailing separators produce an empty final field.
    if (c + 1 == fields.size() && fields[c].empty() && c > first) break;
    values.push_back(parse_value(fields[c], source, lineno, c + 1));
  }
}

}  // namespace

DatasetFormat parse_dataset_format(std::string_view text) {
  if (text == "ucr-tsv") return DatasetFormat::UcrTsv;
  if (text == "csv") return DatasetFormat::Csv;
  throw DataError("unknown dataset format '" + std::string(text) + "'");
}

Dataset parse_dataset(std::string_view text, DatasetFormat format, std::string_view source) {
  Dataset out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++lineno;
    if (line.empty()) continue;

    if (format == DatasetFormat::UcrTsv) {
      const auto fields = split_fields(line, "\t,");
      std::vector<Scalar> values;
      add_values(values, fields, 1, source, lineno);
      if (values.empty()) throw DataError(where(source, lineno, 2) + ": series has no values");
      out.emplace_back(std::to_string(out.size()), std::string(fields[0]), values);
    } else {
      const auto fields = split_fields(line, ",");
      if (!header_seen) {
        if (fields.size() < 2 || fields[0] != "id" || fields[1] != "label")
          throw DataError(where(source, lineno, 1) + ": expected header 'id,label,v0,...'");
        header_seen = true;
        continue;
      }
      if (fields.size() < 3) throw DataError(where(source, lineno, 3) + ": series has no values");
      std::vector<Scalar> values;
      add_values(values, fields, 2, source, lineno);
      std::optional<std::string> label;
      if (!fields[1].empty()) label = std::string(fields[1]);
      out.emplace_back(std::string(fields[0]), std::move(label), values);
    }
  }
  if (out.empty()) throw DataError(std::string(source) + ": dataset is empty");
  return out;
}

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format) {
  return parse_dataset(read_file(path), format, path.string());
}

std::string format_scalar(Scalar v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_dataset(std::span<const TimeSeries> data, DatasetFormat format) {
  std::string out;
  if (format == DatasetFormat::Csv) {
    Eigen::Index widest = 0;
    for (const auto& ts : data) widest = std::max(widest, ts.size());
    out += "id,label";
    for (Eigen::Index i = 0; i < widest; ++i) out += ",v" + std::to_string(i);
    out += '\n';
  }
  for (const auto& ts : data) {
    if (format == DatasetFormat::Csv) out += ts.id + ",";
    out += ts.label.value_or("");
    const char sep = format == DatasetFormat::Csv ? ',' : '\t';
    for (Eigen::Index i = 0; i < ts.size(); ++i) {
      out += sep;
      out += format_17(ts.values[i]);
    }
    out += '\n';
  }
  return out;
}

void save_dataset(std::span<const TimeSeries> data, const std::filesystem::path& path, DatasetFormat format) {
  write_file_atomic(path, format_dataset(data, format));
}

std::string model_to_json(const BreakpointModel& model) {
  std::string out = "{\"metric\":\"";
  out += to_string(model.metric);
  out += "\",\"binning\":\"";
  out += to_string(model.binning);
  out += "\",\"bins\":" + std::to_string(model.bins) + ",\"breakpoints\":[";
  for (std::size_t i = 0; i < model.breakpoints.size(); ++i) {
    if (i > 0) out += ',';
    out += format_17(model.breakpoints[i]);
  }
  out += "],\"final_score\":" + format_17(model.final_score) + "}\n";
  return out;
}

BreakpointModel model_from_json(std::string_view text) {
  BreakpointModel m;
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object()) throw DataError("model must be a JSON object");
    m.metric = parse_metric(j.at("metric").get<std::string>());
    m.binning = parse_binning(j.at("binning").get<std::string>());
    m.bins = j.at("bins").get<int>();
    m.breakpoints = j.at("breakpoints").get<std::vector<Scalar>>();
    m.final_score = j.at("final_score").get<Scalar>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("invalid model: ") + e.what());
  }
  m.validate();
  return m;
}

void save_model(const BreakpointModel& model, const std::filesystem::path& path) {
  model.validate();
  write_file_atomic(path, model_to_json(model));
}

BreakpointModel load_model(const std::filesystem::path& path) {
  try {
    return model_from_json(read_file(path));
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string format_symbols_csv(std::span<const SymbolSequence> seqs) {
  std::size_t widest = 0;
  for (const auto& s : seqs) widest = std::max(widest, s.size());
  std::string out = "id,label";
  for (std::size_t i = 0; i < widest; ++i) out += ",s" + std::to_string(i);
  out += '\n';
  for (const auto& s : seqs) {
    out += s.id + "," + s.label.value_or("");
    for (int sym : s.symbols) out += "," + std::to_string(sym);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot replace " + path.string());
  }
}

}  // namespace persist
