#include <sydlab/diagram.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sydlab {

std::pair<int, int> row_signature(int length, Sign start, int count)
{
    int lead = (length + 1) / 2;
    int trail = length / 2;
    if (start == Sign::Plus)
        return {count * lead, count * trail};
    return {count * trail, count * lead};
}

SignedYoungDiagram::SignedYoungDiagram(std::vector<Row> rows)
{
    std::map<int, Row, std::greater<int>> merged;
    for (const Row& r : rows) {
        if (r.length < 1 || r.plus < 0 || r.minus < 0)
            throw std::invalid_argument("invalid diagram row");
        if (r.count() == 0)
            continue;
        Row& m = merged[r.length];
        m.length = r.length;
        m.plus += r.plus;
        m.minus += r.minus;
    }
    for (const auto& [len, r] : merged) {
        rows_.push_back(r);
        auto a = row_signature(len, Sign::Plus, r.plus);
        auto b = row_signature(len, Sign::Minus, r.minus);
        plus_boxes_ += a.first + b.first;
        minus_boxes_ += a.second + b.second;
    }
}

SignedYoungDiagram SignedYoungDiagram::from_signed_rows(const std::vector<std::pair<int, Sign>>& rows)
{
    std::vector<Row> out;
    for (auto [len, sign] : rows)
        out.push_back(sign == Sign::Plus ? Row{len, 1, 0} : Row{len, 0, 1});
    return SignedYoungDiagram(std::move(out));
}

int SignedYoungDiagram::row_count() const
{
    int c = 0;
    for (const Row& r : rows_)
        c += r.count();
    return c;
}

Partition SignedYoungDiagram::shape() const
{
    Partition p;
    for (const Row& r : rows_)
        for (int i = 0; i < r.count(); ++i)
            p.push_back(r.length);
    return p;
}

int SignedYoungDiagram::length_gcd() const
{
    int g = 0;
    for (const Row& r : rows_)
        g = std::gcd(g, r.length);
    return g;
}

bool SignedYoungDiagram::all_lengths_even() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.length % 2 == 0; });
}

bool SignedYoungDiagram::all_lengths_odd() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.length % 2 == 1; });
}

bool SignedYoungDiagram::single_signed() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.plus == 0 || r.minus == 0; });
}

bool SignedYoungDiagram::balanced() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.plus == r.minus; });
}

SignedYoungDiagram SignedYoungDiagram::sign_swapped() const
{
    std::vector<Row> out;
    for (const Row& r : rows_)
        out.push_back({r.length, r.minus, r.plus});
    return SignedYoungDiagram(std::move(out));
}

SignedYoungDiagram join_diagrams(const SignedYoungDiagram& a, const SignedYoungDiagram& b)
{
    std::vector<Row> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return SignedYoungDiagram(std::move(rows));
}

SignedYoungDiagram ones(int plus, int minus)
{
    return SignedYoungDiagram({Row{1, plus, minus}});
}

SignedYoungDiagram swap_canonical(const SignedYoungDiagram& d)
{
    SignedYoungDiagram s = d.sign_swapped();
    return s < d ? s : d;
}

std::string decoration_name(Decoration d)
{
    switch (d) {
    case Decoration::I:
        return "I";
    case Decoration::II:
        return "II";
    default:
        return "";
    }
}

std::string to_text(const SignedYoungDiagram& d)
{
    if (d.empty())
        return "empty";
    std::string s;
    for (const Row& r : d.rows()) {
        for (int i = 0; i < r.plus; ++i)
            s += (s.empty() ? "" : " ") + std::to_string(r.length) + "+";
        for (int i = 0; i < r.minus; ++i)
            s += (s.empty() ? "" : " ") + std::to_string(r.length) + "-";
    }
    return s;
}

std::string to_text(const OrbitLabel& label)
{
    std::string s = to_text(label.diagram);
    if (label.decoration != Decoration::None)
        s += " | decor=" + decoration_name(label.decoration);
    return s;
}

OrbitLabel parse_label(const std::string& text)
{
    OrbitLabel label;
    std::string body = text;
    auto bar = text.find('|');
    if (bar != std::string::npos) {
        body = text.substr(0, bar);
        std::string tail = text.substr(bar + 1);
        tail.erase(0, tail.find_first_not_of(' '));
        tail.erase(tail.find_last_not_of(' ') + 1);
        if (tail == "decor=I")
            label.decoration = Decoration::I;
        else if (tail == "decor=II")
            label.decoration = Decoration::II;
        else
            throw std::invalid_argument("bad decoration in '" + text + "'");
    }
    std::istringstream in(body);
    std::string tok;
    std::vector<std::pair<int, Sign>> rows;
    bool saw_empty = false;
    while (in >> tok) {
        if (tok == "empty") {
            saw_empty = true;
            continue;
        }
        char c = tok.back();
        if ((c != '+' && c != '-') || tok.size() < 2)
            throw std::invalid_argument("bad row '" + tok + "' in '" + text + "'");
        std::string num = tok.substr(0, tok.size() - 1);
        if (!std::all_of(num.begin(), num.end(), [](unsigned char ch) { return std::isdigit(ch); }) || num.size() > 6)
            throw std::invalid_argument("bad row '" + tok + "' in '" + text + "'");
        int len = std::stoi(num);
        if (len < 1)
            throw std::invalid_argument("row length must be positive in '" + text + "'");
        rows.emplace_back(len, c == '+' ? Sign::Plus : Sign::Minus);
    }
    if (saw_empty && !rows.empty())
        throw std::invalid_argument("'empty' mixed with rows in '" + text + "'");
    label.diagram = SignedYoungDiagram::from_signed_rows(rows);
    return label;
}

} // namespace sydlab
