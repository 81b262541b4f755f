#include "sizebias/csv.hpp"

#include "sizebias/error.hpp"

namespace sizebias::csv {

std::vector<Record> parse(std::string_view text, const std::string& source) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<Record> records;
    Record current;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;  // distinguishes an empty line from a record with one empty field
    std::size_t line = 1;
    current.line = 1;

    const auto end_record = [&] {
        if (field_started || !current.fields.empty()) {
            current.fields.push_back(std::move(field));
            records.push_back(std::move(current));
        }
        current = Record{};
        field.clear();
        field_started = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                field_started = true;
                break;
            case ',':
                current.fields.push_back(std::move(field));
                field.clear();
                field_started = true;
                break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') break;
                [[fallthrough]];
            case '\n':
                end_record();
                ++line;
                current.line = line;
                break;
            default:
                if (!field_started && current.fields.empty()) current.line = line;
                field.push_back(c);
                field_started = true;
        }
    }
    if (in_quotes) {
        throw IngestError(source, {{current.line, "unterminated quoted field"}});
    }
    end_record();
    return records;
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string row(std::initializer_list<std::string_view> fields) {
    std::string out;
    bool first = true;
    for (auto f : fields) {
        if (!first) out.push_back(',');
        out += escape(f);
        first = false;
    }
    out.push_back('\n');
    return out;
}

}  // namespace sizebias::csv
