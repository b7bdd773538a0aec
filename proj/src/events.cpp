#include "persist/events.hpp"

#include "persist/io.hpp"

#include "json.hpp"

#include <fstream>

namespace persist {

void EventSequence::validate() const {
  if (alphabet_size < 1) throw DataError("event sequence '" + id + "': alphabet must be positive");
  long long expected_start = 0;
  for (std::size_t j = 0; j < events.size(); ++j) {
    const Event& e = events[j];
    if (e.symbol < 0 || e.symbol >= alphabet_size)
      throw DataError("event sequence '" + id + "': symbol out of range");
    if (e.duration < 1) throw DataError("event sequence '" + id + "': non-positive duration");
    if (e.start != expected_start) throw DataError("event sequence '" + id + "': events not contiguous");
    if (j > 0 && events[j - 1].symbol == e.symbol)
      throw DataError("event sequence '" + id + "': adjacent events share a symbol");
    expected_start += e.duration;
  }
}

EventSequence run_length_encode(const SymbolSequence& seq) {
  EventSequence out{seq.id, seq.label, seq.alphabet_size, {}};
  const auto& s = seq.symbols;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == 0 || s[i] != s[i - 1])
      out.events.push_back({s[i], static_cast<long long>(i), 1});
    else
      ++out.events.back().duration;
  }
  return out;
}

SymbolSequence run_length_decode(const EventSequence& events) {
  SymbolSequence out{events.id, events.label, {}, events.alphabet_size};
  out.symbols.reserve(static_cast<std::size_t>(events.length()));
  for (const auto& e : events.events) out.symbols.insert(out.symbols.end(), e.duration, e.symbol);
  return out;
}

std::string to_json_line(const EventSequence& seq) {
  nlohmann::ordered_json j;
  j["id"] = seq.id;
  j["label"] = seq.label ? nlohmann::ordered_json(*seq.label) : nlohmann::ordered_json(nullptr);
  j["alphabet"] = seq.alphabet_size;
  auto& ev = j["events"] = nlohmann::ordered_json::array();
  for (const auto& e : seq.events) ev.push_back({e.symbol, e.start, e.duration});
  return j.dump();
}

EventSequence parse_json_line(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    EventSequence out;
    out.id = j.at("id").get<std::string>();
    if (!j.at("label").is_null()) out.label = j.at("label").get<std::string>();
    out.alphabet_size = j.at("alphabet").get<int>();
    for (const auto& e : j.at("events")) {
      if (!e.is_array() || e.size() != 3) throw DataError("event must be [symbol, start, duration]");
      out.events.push_back({e[0].get<int>(), e[1].get<long long>(), e[2].get<long long>()});
    }
    out.validate();
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw DataError(std::string("malformed event line: ") + ex.what());
  }
}

void export_events(std::span<const EventSequence> seqs, const std::filesystem::path& path) {
  std::string text;
  for (const auto& s : seqs) {
    text += to_json_line(s);
    text += '\n';
  }
  write_file_atomic(path, text);
}

std::vector<EventSequence> import_events(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<EventSequence> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(parse_json_line(line));
    } catch (const DataError& e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace persist
