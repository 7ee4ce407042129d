#include <sydlab/richardson.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <sydlab/generating.hpp>
#include <sydlab/orbits.hpp>
#include <sydlab/series.hpp>

namespace sydlab {

std::string to_string(const SignConvention& c)
{
    std::string s = c.plus_is_zero ? "+->0" : "+->1";
    s += c.compare_to_q ? ",q" : ",p";
    s += c.middle_box ? ",middle" : ",first";
    return s;
}

std::vector<SignConvention> literal_conventions()
{
    return {{true, true, false}, {true, false, false}, {false, true, false}, {false, false, false}};
}

std::vector<SignConvention> extended_conventions()
{
    auto out = literal_conventions();
    for (auto c : literal_conventions()) {
        c.middle_box = true;
        out.push_back(c);
    }
    return out;
}

namespace {

struct OddRow {
    int mu;
    int eps;
};

// Rows of an all-odd single-signed diagram, one entry per row, longest first.
std::vector<OddRow> expand_rows(const SignedYoungDiagram& d, bool plus_is_zero)
{
    std::vector<OddRow> rows;
    for (const Row& r : d.rows()) {
        bool plus = r.plus > 0;
        int eps = (plus == plus_is_zero) ? 0 : 1;
        for (int i = 0; i < r.count(); ++i)
            rows.push_back({(r.length - 1) / 2, eps});
    }
    return rows;
}

bool richardson_shape(const SignedYoungDiagram& d)
{
    return d.all_lengths_odd() && d.single_signed();
}

} // namespace

bool is_richardson_bdi(const SignedYoungDiagram& d, int p, int q, const SignConvention& c)
{
    if (p % 2 == 1 && q % 2 == 1)
        return false;
    if (!richardson_shape(d))
        return false;
    auto rows = expand_rows(d, c.plus_is_zero);
    int n = p + q;
    auto key = [&](std::size_t i) { return (rows[i].eps + rows[i].mu) % 2; };
    std::size_t start;
    if (n % 2 == 1) {
        int first = c.middle_box ? key(0) : rows[0].eps;
        int target = (c.compare_to_q ? q : p) % 2;
        if (first != target)
            return false;
        start = 1;
    } else {
        start = 0;
    }
    for (std::size_t i = start; i + 1 < rows.size(); i += 2)
        if (key(i) != key(i + 1))
            return false;
    return true;
}

namespace {

Rational b_under(int p, int q, const SignConvention& c)
{
    Rational total = 0;
    for (const OrbitLabel& l : enumerate_syd(SymmetricPair::bdi(p, q)))
        if (is_richardson_bdi(l.diagram, p, q, c))
            total += static_cast<long>(omega_data(l.diagram).pi_cardinality);
    return total;
}

} // namespace

CalibrationResult calibrate(const std::vector<SignConvention>& family, int max_n)
{
    CalibrationResult res;
    res.max_n = max_n;
    res.tried = family;
    Series odd = expand(gf::biorbital_b(), max_n);
    Series even = expand(gf::biorbital_d(), max_n);
    for (const auto& c : family) {
        bool ok = true;
        for (int n = 1; n <= max_n && ok; ++n) {
            Rational sum = 0;
            for (int p = 0; p <= n; ++p)
                if (n % 2 == 1 || p % 2 == 0)
                    sum += b_under(p, n - p, c);
            ok = sum == (n % 2 ? odd : even).coefficient(n);
        }
        if (ok)
            res.matching.push_back(c);
    }
    std::set<std::vector<bool>> predicates;
    for (const auto& c : res.matching) {
        std::vector<bool> values;
        for (int n = 0; n <= max_n; ++n)
            for (int p = 0; p <= n; ++p)
                for (const OrbitLabel& l : enumerate_syd(SymmetricPair::bdi(p, n - p)))
                    values.push_back(is_richardson_bdi(l.diagram, p, n - p, c));
        predicates.insert(values);
    }
    res.distinct_matching_predicates = static_cast<int>(predicates.size());
    return res;
}

const SignConvention& calibrated_convention()
{
    static const SignConvention chosen = [] {
        auto res = calibrate(extended_conventions());
        if (res.matching.empty())
            throw std::logic_error("no Richardson sign convention matches the biorbital generating functions");
        return res.matching.front();
    }();
    return chosen;
}

bool is_richardson(const SymmetricPair& pair, const OrbitLabel& orbit)
{
    require_orbit_label(pair, orbit);
    const auto& d = orbit.diagram;
    switch (pair.type) {
    case PairType::AIII_SL:
    case PairType::AIII_PGL:
    case PairType::GLGL:
        return d.single_signed();
    case PairType::CI:
        return std::all_of(d.rows().begin(), d.rows().end(), [](const Row& r) {
            return r.length % 2 == 0 && (r.plus == 0 || r.minus == 0);
        });
    case PairType::CII:
        return std::all_of(d.rows().begin(), d.rows().end(), [](const Row& r) {
            return r.length % 2 == 0 ? (r.plus == r.minus && r.plus <= 1) : (r.plus == 0 || r.minus == 0);
        });
    case PairType::DIII:
        return std::all_of(d.rows().begin(), d.rows().end(), [](const Row& r) {
            return r.length % 2 == 1 ? (r.plus == r.minus && r.plus <= 1) : (r.plus == 0 || r.minus == 0);
        });
    case PairType::BDI:
        return is_richardson_bdi(d, pair.p, pair.q, calibrated_convention());
    }
    return false;
}

std::vector<OrbitLabel> richardson_orbits(const SymmetricPair& pair)
{
    std::vector<OrbitLabel> out;
    for (const OrbitLabel& l : enumerate_syd(pair))
        if (is_richardson(pair, l))
            out.push_back(l);
    return out;
}

OmegaData omega_data(const SignedYoungDiagram& mu)
{
    if (!richardson_shape(mu))
        throw std::invalid_argument("omega data needs odd rows of one sign per length: " + to_text(mu));
    const auto& rows = mu.rows();
    int s = static_cast<int>(rows.size());
    OmegaData out;
    int suffix = 0;
    std::vector<int> suffix_sum(s + 1, 0);
    for (int j = s; j-- > 0;) {
        suffix += rows[j].count();
        suffix_sum[j] = suffix;
    }
    for (int j = 0; j < s; ++j) {
        if (suffix_sum[j] % 2 != 0)
            continue;
        if (j > 0) {
            int mu_prev = (rows[j - 1].length - 1) / 2;
            int mu_cur = (rows[j].length - 1) / 2;
            bool same_sign = (rows[j - 1].plus > 0) == (rows[j].plus > 0);
            if (!(mu_prev >= mu_cur + 2 || same_sign))
                continue;
        }
        out.omega.push_back(j + 1);
    }
    out.l = static_cast<int>(out.omega.size());
    bool n_even = mu.size() % 2 == 0;
    int free_bits = n_even ? out.l - 1 : out.l;
    if (mu.empty())
        free_bits = 0;
    out.pi_cardinality = std::int64_t{1} << free_bits;
    return out;
}

std::vector<PiCharacter> pi_characters(const SignedYoungDiagram& mu)
{
    OmegaData od = omega_data(mu);
    int s = static_cast<int>(mu.rows().size());
    int len = std::max(0, s - 1);
    std::vector<int> free_positions;
    for (int r = 1; r <= len; ++r)
        if (std::find(od.omega.begin(), od.omega.end(), r + 1) != od.omega.end())
            free_positions.push_back(r - 1);
    std::vector<PiCharacter> out;
    std::size_t count = std::size_t{1} << free_positions.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        PiCharacter chi(len, 0);
        for (std::size_t b = 0; b < free_positions.size(); ++b)
            if (mask >> (free_positions.size() - 1 - b) & 1)
                chi[free_positions[b]] = 1;
        out.push_back(std::move(chi));
    }
    return out;
}

int odd_part(int n)
{
    if (n <= 0)
        return 1;
    while (n % 2 == 0)
        n /= 2;
    return n;
}

Rational nilpotent_support_count(const SymmetricPair& pair, CountMode mode)
{
    validate(pair);
    switch (pair.type) {
    case PairType::BDI: {
        if (pair.p == 0 && pair.q == 0)
            return mode == CountMode::Formula ? rational(1, 2) : Rational(1);
        Rational total = 0;
        for (const OrbitLabel& l : richardson_orbits(pair))
            total += static_cast<long>(omega_data(l.diagram).pi_cardinality);
        return total;
    }
    case PairType::AIII_SL: {
        Rational total = 0;
        for (const OrbitLabel& l : richardson_orbits(pair))
            total += odd_part(l.diagram.length_gcd());
        return total;
    }
    default:
        return static_cast<long>(richardson_orbits(pair).size());
    }
}

std::vector<SlNilpotentLabel> sl_nilpotent_labels(int p, int q)
{
    std::vector<SlNilpotentLabel> out;
    for (const OrbitLabel& l : richardson_orbits(SymmetricPair::sl(p, q))) {
        int d = std::max(1, l.diagram.length_gcd());
        for (int k = 0; k < d; ++k) {
            int order = d / std::gcd(d, k);
            if (order % 2 == 1)
                out.push_back({l, k, order});
        }
    }
    return out;
}

} // namespace sydlab
