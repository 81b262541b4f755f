#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sizebias/model.hpp"
#include "sizebias/scaling.hpp"

namespace sizebias {

enum class InputFormat { publications, summary };

/// "publications" or "summary"; UsageError otherwise.
InputFormat parse_format(std::string_view name);

inline constexpr std::string_view kPublicationsHeader = "unit_id,unit_name,citations";
inline constexpr std::string_view kSummaryHeader = "unit_id,unit_name,n_publications,h_index";

/// Aggregated (N, h) row: enough to fit a scaling law, not enough to reshuffle.
struct SummaryRow {
    std::string unit_id;
    std::string unit_name;
    std::uint64_t n_publications = 0;
    std::uint64_t h_index = 0;
};

struct SummaryTable {
    std::string name;
    std::vector<SummaryRow> rows;
};

std::vector<SizePoint> size_points(const SummaryTable& table);

/// One row per publication. An empty citations field declares a unit that has
/// no publications. Units keep the order of their first row.
Dataset parse_publications(std::string_view text, const std::string& source);

SummaryTable parse_summary(std::string_view text, const std::string& source);

/// File contents, or a bundled table for "bundled:<name>".
/// Throws IngestError when the file cannot be read.
std::string read_input(const std::string& path);

Dataset load_publications(const std::string& path);
SummaryTable load_summary(const std::string& path);

std::variant<Dataset, SummaryTable> ingest(const std::string& path, InputFormat format);

std::string format_publications_csv(const Dataset& dataset);
std::string format_summary_csv(const SummaryTable& table);

}  // namespace sizebias
