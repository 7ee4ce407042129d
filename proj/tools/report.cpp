#include "report.hpp"

#include <algorithm>
#include <stdexcept>

namespace sydlab::cli {

Format parse_format(const std::string& name)
{
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    if (name == "text")
        return Format::Text;
    throw std::invalid_argument("unknown output format '" + name + "'");
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

namespace {

void emit_csv(std::ostream& out, const Table& t)
{
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i)
            out << (i ? "," : "") << csv_field(fields[i]);
        out << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows)
        line(row);
}

void emit_text(std::ostream& out, const Table& t)
{
    std::vector<std::size_t> width(t.header.size(), 0);
    auto measure = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], fields[i].size());
    };
    measure(t.header);
    for (const auto& row : t.rows)
        measure(row);
    auto line = [&](const std::vector<std::string>& fields) {
        std::string s;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i)
                s += "  ";
            s += fields[i];
            if (i + 1 < fields.size())
                s.append(width[i] - fields[i].size(), ' ');
        }
        out << s << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows)
        line(row);
}

} // namespace

void emit(std::ostream& out, const Report& report, Format format)
{
    switch (format) {
    case Format::Json:
        out << report.json.dump(2) << '\n';
        break;
    case Format::Csv:
        emit_csv(out, report.table);
        break;
    case Format::Text:
        emit_text(out, report.table);
        break;
    }
}

} // namespace sydlab::cli
