#pragma once

#include "persist/core.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace persist {

enum class DatasetFormat { UcrTsv, Csv };

DatasetFormat parse_dataset_format(std::string_view text);

/// UCR_TSV: "label<TAB|,>v0<TAB|,>v1...", one series per line, ids are the
/// zero-based line numbers. CSV: header "id,label,v0,v1,..." then one series
/// per row; an empty label is absent. Rows may differ in length.
/// Throws DataError (with line and column) on bad values, IoError if unreadable.
Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format);
Dataset parse_dataset(std::string_view text, DatasetFormat format, std::string_view source = "<input>");

std::string format_dataset(std::span<const TimeSeries> data, DatasetFormat format);
void save_dataset(std::span<const TimeSeries> data, const std::filesystem::path& path, DatasetFormat format);

/// Shortest decimal that parses back to the same double.
std::string format_scalar(Scalar v);

std::string model_to_json(const BreakpointModel& model);
BreakpointModel model_from_json(std::string_view text);
void save_model(const BreakpointModel& model, const std::filesystem::path& path);
BreakpointModel load_model(const std::filesystem::path& path);

/// "id,label,s0,s1,..." header followed by one row per sequence.
std::string format_symbols_csv(std::span<const SymbolSequence> seqs);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace persist
