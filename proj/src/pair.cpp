#include <sydlab/pair.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sydlab {

int SymmetricPair::rank() const
{
    switch (type) {
    case PairType::CI:
        return p;
    case PairType::DIII:
        return p / 2;
    default:
        return std::min(p, q);
    }
}

std::pair<int, int> SymmetricPair::signature() const
{
    if (type == PairType::CII)
        return {2 * p, 2 * q};
    return {p, q};
}

void validate(const SymmetricPair& pair)
{
    if (pair.p < 0 || pair.q < 0)
        throw std::invalid_argument("pair parameters must be nonnegative: " + to_string(pair));
    if (pair.single_rank() && pair.p != pair.q)
        throw std::invalid_argument("single-rank pair with p != q: " + to_string(pair));
}

std::string type_name(PairType t)
{
    switch (t) {
    case PairType::AIII_SL:
        return "AIII_SL";
    case PairType::AIII_PGL:
        return "AIII_PGL";
    case PairType::BDI:
        return "BDI";
    case PairType::CI:
        return "CI";
    case PairType::CII:
        return "CII";
    case PairType::DIII:
        return "DIII";
    case PairType::GLGL:
        return "GLGL";
    }
    return "?";
}

std::string to_string(const SymmetricPair& pair)
{
    if (pair.single_rank())
        return type_name(pair.type) + ":" + std::to_string(pair.p);
    return type_name(pair.type) + ":" + std::to_string(pair.p) + "," + std::to_string(pair.q);
}

namespace {

int parse_int(const std::string& s, const std::string& whole)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("bad pair parameter in '" + whole + "'");
    if (s.size() > 6)
        throw std::invalid_argument("pair parameter too large in '" + whole + "'");
    return std::stoi(s);
}

} // namespace

SymmetricPair parse_pair(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("pair must look like TYPE:p,q or TYPE:n, got '" + text + "'");
    std::string name = text.substr(0, colon);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
    std::string args = text.substr(colon + 1);

    PairType type;
    if (name == "SL" || name == "AIII_SL")
        type = PairType::AIII_SL;
    else if (name == "PGL" || name == "AIII_PGL")
        type = PairType::AIII_PGL;
    else if (name == "GL" || name == "GLGL")
        type = PairType::GLGL;
    else if (name == "BDI")
        type = PairType::BDI;
    else if (name == "CI")
        type = PairType::CI;
    else if (name == "CII")
        type = PairType::CII;
    else if (name == "DIII")
        type = PairType::DIII;
    else
        throw std::invalid_argument("unknown pair type '" + name + "'");

    SymmetricPair pair{type, 0, 0};
    auto comma = args.find(',');
    if (pair.single_rank()) {
        if (comma != std::string::npos)
            throw std::invalid_argument(name + " takes a single rank, got '" + text + "'");
        pair.p = pair.q = parse_int(args, text);
    } else {
        if (comma == std::string::npos)
            throw std::invalid_argument(name + " takes two parameters p,q, got '" + text + "'");
        pair.p = parse_int(args.substr(0, comma), text);
        pair.q = parse_int(args.substr(comma + 1), text);
    }
    validate(pair);
    return pair;
}

} // namespace sydlab
