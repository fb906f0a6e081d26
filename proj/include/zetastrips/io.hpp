// io.hpp
//
// CSV and JSON artifacts. Published CSVs carry a header row, '.' decimals
// and 12 significant digits; stage caches use JSON with round-trip doubles.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zetastrips/contour.hpp"
#include "zetastrips/stats.hpp"
#include "zetastrips/strips.hpp"
#include "zetastrips/zeros.hpp"

namespace zetastrips::io {

using nlohmann::json;
namespace fs = std::filesystem;

// "%.12g"
std::string format_number(double v);

// FNV-1a, 64 bit, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

// Writes via a temporary sibling and a rename, so readers never see a torn file.
void write_text_atomic(const fs::path& path, const std::string& text);
std::string read_text(const fs::path& path);

std::string zeros_csv(std::span<const CriticalZero> zeros);
std::vector<CriticalZero> parse_zeros_csv(const std::string& text);

std::string trace_csv(const ContourTrace& trace);
std::vector<ComplexPoint> parse_trace_csv(const std::string& text);

std::string trace_file_name(int k);

// Manifest entry, without points.
json trace_manifest_entry(const ContourTrace& trace);
ContourTrace trace_from_manifest_entry(const json& entry);

// Full-precision round trip used by the stage cache.
json traces_to_json(std::span<const ContourTrace> traces);
std::vector<ContourTrace> traces_from_json(const json& j);
json zeros_to_json(std::span<const CriticalZero> zeros);
std::vector<CriticalZero> zeros_from_json(const json& j);

// Published manifest + one CSV per trace under dir/contours/.
void write_traces(const fs::path& dir, std::span<const ContourTrace> traces, const json& header);
std::vector<ContourTrace> read_traces(const fs::path& dir);

std::string strips_csv(std::span<const Strip> strips);

struct StripRow {
    int m = 0;
    double bottom_t = 0.0;
    double top_t = 0.0;
    long n_zeros = 0;
    int primary_index = 0;
};
std::vector<StripRow> parse_strips_csv(const std::string& text);

std::string series_csv(std::span<const SeriesRow> rows, std::string_view value_column);

json to_json(const FitResult& fit);
json to_json(const SampleStats& st);

}  // namespace zetastrips::io
