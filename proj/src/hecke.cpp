#include <sydlab/hecke.hpp>

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <sydlab/generating.hpp>
#include <sydlab/partition.hpp>
#include <sydlab/series.hpp>

namespace sydlab {

std::string to_string(HeckeKind k)
{
    switch (k) {
    case HeckeKind::B_1_neg1:
        return "B_1_neg1";
    case HeckeKind::B_1_1:
        return "B_1_1";
    case HeckeKind::B_neg1_neg1:
        return "B_neg1_neg1";
    case HeckeKind::B_neg1_1:
        return "B_neg1_1";
    case HeckeKind::D_neg1:
        return "D_neg1";
    }
    return "?";
}

HeckeKind parse_hecke_kind(const std::string& s)
{
    for (HeckeKind k : {HeckeKind::B_1_neg1, HeckeKind::B_1_1, HeckeKind::B_neg1_neg1, HeckeKind::B_neg1_1, HeckeKind::D_neg1})
        if (to_string(k) == s)
            return k;
    throw std::invalid_argument("unknown Hecke family '" + s + "'");
}

namespace {

std::int64_t cached_coefficient(const ProductSpec& spec, std::vector<std::int64_t>& table, std::mutex& mu, int k)
{
    if (k < 0)
        throw std::invalid_argument("negative Hecke rank");
    std::lock_guard<std::mutex> lock(mu);
    if (k >= static_cast<int>(table.size())) {
        int order = std::max(2 * k, 64);
        Series s = expand(spec, order);
        table.clear();
        for (int i = 0; i <= order; ++i) {
            const Integer& num = s.coefficient(i).get_num();
            if (!num.fits_slong_p())
                throw std::overflow_error("Hecke count exceeds 64 bits");
            table.push_back(num.get_si());
        }
    }
    return table[k];
}

} // namespace

std::int64_t hecke_d(int k)
{
    static std::vector<std::int64_t> table;
    static std::mutex mu;
    return cached_coefficient(gf::hecke_d(), table, mu, k);
}

std::int64_t hecke_e(int k)
{
    static std::vector<std::int64_t> table;
    static std::mutex mu;
    return cached_coefficient(gf::hecke_e(), table, mu, k);
}

Rational hecke_count(const HeckeFamily& f)
{
    if (f.rank < 0)
        throw std::invalid_argument("negative Hecke rank");
    switch (f.kind) {
    case HeckeKind::B_1_neg1:
        return static_cast<long>(partition_count(f.rank));
    case HeckeKind::B_1_1:
        return static_cast<long>(bipartition_count(f.rank));
    case HeckeKind::B_neg1_neg1:
        return static_cast<long>(hecke_d(f.rank));
    case HeckeKind::B_neg1_1:
        return static_cast<long>(hecke_e(f.rank));
    case HeckeKind::D_neg1:
        if (f.rank == 0)
            return 1;
        return Rational(static_cast<long>(hecke_e(f.rank))) / 2;
    }
    return 0;
}

Rational f_b(int q)
{
    Rational s = 0;
    for (int k = 0; k <= q; ++k)
        s += Rational(static_cast<long>(hecke_d(k) * hecke_d(q - k)));
    return s;
}

Rational f_d(int n, CountMode mode)
{
    if (n == 0)
        return mode == CountMode::Formula ? rational(1, 2) : Rational(1);
    Rational s = 0;
    for (int k = 0; k <= n; ++k)
        s += Rational(static_cast<long>(hecke_e(k) * hecke_e(n - k)));
    return s / 2;
}

Rational f_d_unequal(int q)
{
    Rational s = 0;
    for (int k = 0; k <= q; ++k)
        s += Rational(static_cast<long>(hecke_e(k) * hecke_e(q - k)));
    return s;
}

Rational theta_ci(int n)
{
    Rational s = 0;
    for (int k = 0; k <= n; ++k)
        s += Rational(static_cast<long>(hecke_d(k) * hecke_e(n - k)));
    return s;
}

Rational full_support_count(const SymmetricPair& pair, CountMode mode)
{
    validate(pair);
    int lo = std::min(pair.p, pair.q);
    auto p_of = [](int k) { return Rational(static_cast<long>(partition_count(k))); };
    switch (pair.type) {
    case PairType::BDI:
        if ((pair.p + pair.q) % 2 == 1)
            return f_b(lo);
        if (pair.p == pair.q)
            return f_d(lo, mode);
        return f_d_unequal(lo);
    case PairType::CI:
        return theta_ci(pair.n());
    case PairType::AIII_SL:
        return p_of(lo) + (pair.p == pair.q && lo > 0 ? Rational(static_cast<long>(bipartition_count(lo))) : Rational(0));
    case PairType::AIII_PGL:
        return pair.p == pair.q && lo > 0 ? 2 * p_of(lo) : p_of(lo);
    case PairType::DIII:
        return p_of(pair.rank());
    default:
        return p_of(lo);
    }
}

} // namespace sydlab
