#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewbox {

// RFC-4180-style CSV: quoted fields may contain commas, doubled quotes and
// newlines; records end at a newline outside quotes.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column position by header name, or -1.
    int column(const std::string& name) const;
};

// Throws std::invalid_argument with a row number on structural errors
// (unterminated quote, missing header).
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

std::string csv_escape(const std::string& field);

// Shortest round-trip decimal form of a double (locale-independent).
std::string format_double(double v);

}  // namespace skewbox
