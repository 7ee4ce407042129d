#ifndef SYDLAB_TOOLS_REPORT_HPP
#define SYDLAB_TOOLS_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace sydlab::cli {

enum class Format { Json, Csv, Text };

// Throws std::invalid_argument for names other than json, csv, text.
Format parse_format(const std::string& name);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// One report in two shapes: a JSON document and a flat table for CSV/text.
struct Report {
    nlohmann::ordered_json json;
    Table table;
};

void emit(std::ostream& out, const Report& report, Format format);

// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(const std::string& s);

} // namespace sydlab::cli

#endif
