#pragma once

#include "persist/core.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace persist {

struct Event {
  int symbol = 0;
  long long start = 0;     // sample index
  long long duration = 1;  // sample count

  friend bool operator==(const Event&, const Event&) = default;
};

/// Contiguous runs starting at 0; neighbouring events carry different symbols.
struct EventSequence {
  std::string id;
  std::optional<std::string> label;
  int alphabet_size = 1;
  std::vector<Event> events;

  long long length() const { return events.empty() ? 0 : events.back().start + events.back().duration; }
  void validate() const;

  friend bool operator==(const EventSequence&, const EventSequence&) = default;
};

EventSequence run_length_encode(const SymbolSequence& seq);
SymbolSequence run_length_decode(const EventSequence& events);

/// One JSON object per line: {"id","label","alphabet","events":[[s,start,dur],...]}.
std::string to_json_line(const EventSequence& seq);
EventSequence parse_json_line(const std::string& line);

void export_events(std::span<const EventSequence> seqs, const std::filesystem::path& path);
std::vector<EventSequence> import_events(const std::filesystem::path& path);

}  // namespace persist
