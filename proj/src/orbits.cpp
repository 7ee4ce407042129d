#include <sydlab/orbits.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sydlab {

namespace {

// Admissible + counts for `m` rows of length `len`, ascending.
std::vector<int> plus_options(PairType type, int len, int m)
{
    std::vector<int> out;
    bool even = len % 2 == 0;
    auto balanced = [&] {
        if (m % 2 == 0)
            out.push_back(m / 2);
    };
    auto both_even = [&] {
        for (int p = 0; p <= m; p += 2)
            if ((m - p) % 2 == 0)
                out.push_back(p);
    };
    switch (type) {
    case PairType::BDI:
        if (even)
            balanced();
        else
            for (int p = 0; p <= m; ++p)
                out.push_back(p);
        break;
    case PairType::CI:
        if (!even)
            balanced();
        else
            for (int p = 0; p <= m; ++p)
                out.push_back(p);
        break;
    case PairType::CII:
        if (even)
            balanced();
        else
            both_even();
        break;
    case PairType::DIII:
        if (!even)
            balanced();
        else
            both_even();
        break;
    default:
        for (int p = 0; p <= m; ++p)
            out.push_back(p);
    }
    return out;
}

bool swap_identified(const SymmetricPair& pair)
{
    return pair.type == PairType::AIII_PGL && pair.p == pair.q;
}

} // namespace

bool is_very_even(const SignedYoungDiagram& d)
{
    return !d.empty() && d.all_lengths_even();
}

bool satisfies_type_rules(const SymmetricPair& pair, const SignedYoungDiagram& d)
{
    if (d.signature() != pair.signature())
        return false;
    for (const Row& r : d.rows()) {
        auto opts = plus_options(pair.type, r.length, r.count());
        if (std::find(opts.begin(), opts.end(), r.plus) == opts.end())
            return false;
    }
    return true;
}

std::vector<OrbitLabel> enumerate_syd(const SymmetricPair& pair)
{
    validate(pair);
    auto [P, Q] = pair.signature();
    std::vector<OrbitLabel> out;
    for (const Partition& lam : enumerate_partitions(P + Q)) {
        auto mult = multiplicities(lam);
        // Plus boxes forced by the shape; each odd row starting + adds one.
        int base = 0;
        for (auto [len, m] : mult)
            base += m * (len / 2);
        int target = P - base;
        if (target < 0)
            continue;
        std::vector<std::vector<int>> options;
        std::vector<int> odd_rows_after(mult.size() + 1, 0);
        for (std::size_t i = 0; i < mult.size(); ++i)
            options.push_back(plus_options(pair.type, mult[i].first, mult[i].second));
        for (std::size_t i = mult.size(); i-- > 0;)
            odd_rows_after[i] = odd_rows_after[i + 1] + (mult[i].first % 2 ? mult[i].second : 0);

        std::vector<Row> rows(mult.size());
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
            if (i == mult.size()) {
                if (used != target)
                    return;
                SignedYoungDiagram d(rows);
                if (swap_identified(pair) && d.sign_swapped() < d)
                    return;
                if (pair.type == PairType::BDI && is_very_even(d)) {
                    out.push_back({d, Decoration::I});
                    out.push_back({d, Decoration::II});
                } else {
                    out.push_back({d, Decoration::None});
                }
                return;
            }
            auto [len, m] = mult[i];
            for (int p : options[i]) {
                int add = len % 2 ? p : 0;
                if (used + add > target)
                    break;
                if (used + add + odd_rows_after[i + 1] < target)
                    continue;
                rows[i] = Row{len, p, m - p};
                rec(i + 1, used + add);
            }
        };
        rec(0, 0);
    }
    return out;
}

bool is_orbit_label(const SymmetricPair& pair, const OrbitLabel& label)
{
    const auto& d = label.diagram;
    if (!satisfies_type_rules(pair, d))
        return false;
    if (swap_identified(pair) && d.sign_swapped() < d)
        return false;
    bool decorated = pair.type == PairType::BDI && is_very_even(d);
    return decorated == (label.decoration != Decoration::None);
}

void require_orbit_label(const SymmetricPair& pair, const OrbitLabel& label)
{
    if (!is_orbit_label(pair, label))
        throw std::invalid_argument("'" + to_text(label) + "' is not an orbit label of " + to_string(pair));
}

} // namespace sydlab
