#include "sizebias/ingest.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "sizebias/bundled.hpp"
#include "sizebias/csv.hpp"
#include "sizebias/error.hpp"

namespace sizebias {

namespace {

std::string describe(const std::string& source, const std::vector<IngestIssue>& issues) {
    std::ostringstream os;
    os << source << ": " << issues.size() << " problem(s)";
    for (const auto& i : issues) {
        os << "\n  ";
        if (i.line > 0) os << "line " << i.line << ": ";
        os << i.message;
    }
    return os.str();
}

// Parses a nonnegative integer field, or records why it is not one.
bool parse_count(std::string_view s, std::uint64_t& value, std::string& why) {
    if (s.empty()) {
        why = "empty value";
        return false;
    }
    if (s.front() == '-') {
        why = "negative value '" + std::string(s) + "'";
        return false;
    }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc::result_out_of_range) {
        why = "value '" + std::string(s) + "' exceeds the 64-bit range";
        return false;
    }
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        why = "not a nonnegative integer: '" + std::string(s) + "'";
        return false;
    }
    return true;
}

std::string header_of(const csv::Record& r) {
    std::string h;
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
        if (i) h.push_back(',');
        h += r.fields[i];
    }
    return h;
}

void check_header(const std::vector<csv::Record>& records, std::string_view expected,
                  const std::string& source) {
    if (records.empty()) throw IngestError(source, {{0, "empty file (header row required)"}});
    const auto got = header_of(records.front());
    if (got != expected) {
        throw IngestError(source, {{records.front().line, "bad header '" + got + "', expected '" +
                                                              std::string(expected) + "'"}});
    }
}

}  // namespace

IngestError::IngestError(std::string source, std::vector<IngestIssue> issues)
    : std::runtime_error(describe(source, issues)), source_(std::move(source)),
      issues_(std::move(issues)) {}

InputFormat parse_format(std::string_view name) {
    if (name == "publications") return InputFormat::publications;
    if (name == "summary") return InputFormat::summary;
    throw UsageError("unknown input format '" + std::string(name) +
                     "' (expected publications or summary)");
}

std::vector<SizePoint> size_points(const SummaryTable& table) {
    std::vector<SizePoint> points;
    points.reserve(table.rows.size());
    for (const auto& r : table.rows) {
        points.push_back({static_cast<double>(r.n_publications), static_cast<double>(r.h_index)});
    }
    return points;
}

Dataset parse_publications(std::string_view text, const std::string& source) {
    const auto records = csv::parse(text, source);
    check_header(records, kPublicationsHeader, source);

    struct Pending {
        std::string name;
        std::vector<Citations> citations;
    };
    std::vector<std::string> order;
    std::unordered_map<std::string, Pending> units;
    std::vector<IngestIssue> issues;

    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.fields.size() != 3) {
            issues.push_back({r.line, "expected 3 fields, found " + std::to_string(r.fields.size())});
            continue;
        }
        const auto& id = r.fields[0];
        const auto& name = r.fields[1];
        const auto& cites = r.fields[2];
        if (id.empty()) {
            issues.push_back({r.line, "empty unit_id"});
            continue;
        }
        auto [it, inserted] = units.try_emplace(id, Pending{name, {}});
        if (inserted) {
            order.push_back(id);
        } else if (it->second.name != name) {
            issues.push_back({r.line, "unit '" + id + "' named '" + name + "' here but '" +
                                          it->second.name + "' earlier"});
            continue;
        }
        if (cites.empty()) continue;  // unit declaration without a publication
        std::uint64_t value = 0;
        std::string why;
        if (!parse_count(cites, value, why)) {
            issues.push_back({r.line, "citations: " + why});
            continue;
        }
        it->second.citations.push_back(value);
    }
    if (order.empty() && issues.empty()) issues.push_back({0, "no data rows"});
    if (!issues.empty()) throw IngestError(source, std::move(issues));

    std::vector<Unit> out;
    out.reserve(order.size());
    for (const auto& id : order) {
        auto& p = units.at(id);
        out.emplace_back(id, std::move(p.name), std::move(p.citations));
    }
    return Dataset(source, std::move(out));
}

SummaryTable parse_summary(std::string_view text, const std::string& source) {
    const auto records = csv::parse(text, source);
    check_header(records, kSummaryHeader, source);

    SummaryTable table;
    table.name = source;
    std::unordered_map<std::string, std::size_t> seen;
    std::vector<IngestIssue> issues;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.fields.size() != 4) {
            issues.push_back({r.line, "expected 4 fields, found " + std::to_string(r.fields.size())});
            continue;
        }
        SummaryRow row{r.fields[0], r.fields[1], 0, 0};
        if (row.unit_id.empty()) {
            issues.push_back({r.line, "empty unit_id"});
            continue;
        }
        if (!seen.emplace(row.unit_id, r.line).second) {
            issues.push_back({r.line, "duplicate unit_id '" + row.unit_id + "'"});
            continue;
        }
        std::string why;
        bool ok = true;
        if (!parse_count(r.fields[2], row.n_publications, why)) {
            issues.push_back({r.line, "n_publications: " + why});
            ok = false;
        }
        if (!parse_count(r.fields[3], row.h_index, why)) {
            issues.push_back({r.line, "h_index: " + why});
            ok = false;
        }
        if (ok && row.h_index > row.n_publications) {
            issues.push_back({r.line, "h_index " + std::to_string(row.h_index) +
                                          " exceeds n_publications " +
                                          std::to_string(row.n_publications)});
            ok = false;
        }
        if (ok) table.rows.push_back(std::move(row));
    }
    if (table.rows.empty() && issues.empty()) issues.push_back({0, "no data rows"});
    if (!issues.empty()) throw IngestError(source, std::move(issues));
    return table;
}

std::string read_input(const std::string& path) {
    constexpr std::string_view prefix = "bundled:";
    if (std::string_view(path).starts_with(prefix)) {
        const auto name = std::string_view(path).substr(prefix.size());
        if (auto text = bundled::summary_csv(name)) return std::string(*text);
        throw IngestError(path, {{0, "no bundled table named '" + std::string(name) + "'"}});
    }
    if (!std::filesystem::is_regular_file(path)) {
        throw IngestError(path, {{0, "file not found or not a regular file"}});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError(path, {{0, "cannot open file"}});
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Dataset load_publications(const std::string& path) {
    return parse_publications(read_input(path), path);
}

SummaryTable load_summary(const std::string& path) { return parse_summary(read_input(path), path); }

std::variant<Dataset, SummaryTable> ingest(const std::string& path, InputFormat format) {
    if (format == InputFormat::publications) return load_publications(path);
    return load_summary(path);
}

std::string format_publications_csv(const Dataset& dataset) {
    std::string out(kPublicationsHeader);
    out.push_back('\n');
    for (const auto& u : dataset.units()) {
        if (u.citations().empty()) {
            out += csv::row({u.id(), u.name(), ""});
            continue;
        }
        const auto prefix = csv::escape(u.id()) + "," + csv::escape(u.name()) + ",";
        for (Citations c : u.citations()) {
            out += prefix;
            out += std::to_string(c);
            out.push_back('\n');
        }
    }
    return out;
}

std::string format_summary_csv(const SummaryTable& table) {
    std::string out(kSummaryHeader);
    out.push_back('\n');
    for (const auto& r : table.rows) {
        out += csv::row({r.unit_id, r.unit_name, std::to_string(r.n_publications),
                         std::to_string(r.h_index)});
    }
    return out;
}

}  // namespace sizebias
