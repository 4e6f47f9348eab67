#include "skewbox/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace skewbox {

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
}

CsvTable read_csv(std::istream& in) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    std::size_t line = 1;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };

    char c;
    while (in.get(c)) {
        any = true;
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\r') {
            // swallowed; \r\n handled at \n
        } else if (c == '\n') {
            ++line;
            end_record();
        } else {
            field += c;
        }
    }
    if (quoted) {
        throw std::invalid_argument("csv: unterminated quote at line " + std::to_string(line));
    }
    if (!field.empty() || !record.empty()) end_record();
    if (!any || records.empty()) {
        throw std::invalid_argument("csv: missing header");
    }

    CsvTable t;
    t.header = std::move(records.front());
    t.rows.assign(std::make_move_iterator(records.begin() + 1),
                  std::make_move_iterator(records.end()));
    return t;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open file: " + path);
    }
    return read_csv(in);
}

std::string csv_escape(const std::string& field) {
    const bool needs_quote = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quote) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

}  // namespace skewbox
