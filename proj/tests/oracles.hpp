#ifndef SYDLAB_TESTS_ORACLES_HPP
#define SYDLAB_TESTS_ORACLES_HPP

// Brute-force reference computations kept independent of the library code
// paths they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <sydlab/pair.hpp>

namespace oracle {

using Parts = std::vector<int>;

// Partitions of n with parts <= max_part, weakly decreasing.
inline void partitions_rec(int n, int max_part, Parts& cur, std::vector<Parts>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(n - part, part, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Parts> partitions(int n)
{
    std::vector<Parts> out;
    Parts cur;
    partitions_rec(n, n, cur, out);
    return out;
}

inline std::int64_t partition_count(int n)
{
    return static_cast<std::int64_t>(partitions(n).size());
}

inline bool distinct(const Parts& p)
{
    return std::adjacent_find(p.begin(), p.end()) == p.end();
}

inline bool all_odd(const Parts& p)
{
    return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 1; });
}

// Pairs (a, b) of distinct-part partitions with 2|a| + |b| = k.
inline std::int64_t hecke_d(int k)
{
    std::int64_t count = 0;
    for (int a = 0; 2 * a <= k; ++a) {
        std::int64_t na = 0, nb = 0;
        for (const auto& p : partitions(a))
            na += distinct(p);
        for (const auto& p : partitions(k - 2 * a))
            nb += distinct(p);
        count += na * nb;
    }
    return count;
}

// Pairs (a, b), a distinct odd parts, b distinct parts, |a| + |b| = k.
inline std::int64_t hecke_e(int k)
{
    std::int64_t count = 0;
    for (int a = 0; a <= k; ++a) {
        std::int64_t na = 0, nb = 0;
        for (const auto& p : partitions(a))
            na += distinct(p) && all_odd(p);
        for (const auto& p : partitions(k - a))
            nb += distinct(p);
        count += na * nb;
    }
    return count;
}

// A signed diagram as (length -> (rows starting +, rows starting -)).
using Signed = std::map<int, std::pair<int, int>, std::greater<>>;

inline std::pair<int, int> signature(const Signed& d)
{
    int plus = 0, minus = 0;
    for (const auto& [len, c] : d) {
        plus += c.first * ((len + 1) / 2) + c.second * (len / 2);
        minus += c.first * (len / 2) + c.second * ((len + 1) / 2);
    }
    return {plus, minus};
}

inline void signed_rec(const std::vector<std::pair<int, int>>& mult, std::size_t i, Signed& cur, const std::function<void(const Signed&)>& fn)
{
    if (i == mult.size()) {
        fn(cur);
        return;
    }
    auto [len, c] = mult[i];
    for (int a = 0; a <= c; ++a) {
        cur[len] = {a, c - a};
        signed_rec(mult, i + 1, cur, fn);
    }
    cur.erase(len);
}

// Calls fn on every sign assignment of every partition of n.
inline void for_each_signed(int n, const std::function<void(const Signed&)>& fn)
{
    for (const auto& p : partitions(n)) {
        std::map<int, int, std::greater<>> m;
        for (int x : p)
            ++m[x];
        std::vector<std::pair<int, int>> mult(m.begin(), m.end());
        Signed cur;
        signed_rec(mult, 0, cur, fn);
    }
}

inline bool orthogonal(const Signed& d)
{
    for (const auto& [len, c] : d)
        if (len % 2 == 0 && c.first != c.second)
            return false;
    return true;
}

inline bool symplectic(const Signed& d)
{
    for (const auto& [len, c] : d)
        if (len % 2 == 1 && c.first != c.second)
            return false;
    return true;
}

// Even lengths balanced, odd lengths with even counts of each sign (and the
// roles of parity swapped when odd_balanced).
inline bool quaternionic(const Signed& d, bool odd_balanced)
{
    for (const auto& [len, c] : d) {
        bool balanced_len = (len % 2 == 1) == odd_balanced;
        if (balanced_len ? c.first != c.second : (c.first % 2 || c.second % 2))
            return false;
    }
    return true;
}

inline Signed swapped(const Signed& d)
{
    Signed s;
    for (const auto& [len, c] : d)
        s[len] = {c.second, c.first};
    return s;
}

inline bool very_even(const Signed& d)
{
    return !d.empty() && std::all_of(d.begin(), d.end(), [](const auto& e) { return e.first % 2 == 0; });
}

// Number of orbit labels of a pair by exhaustive filtering.
inline std::int64_t orbit_count(const sydlab::SymmetricPair& pair)
{
    using sydlab::PairType;
    int n = 0;
    std::pair<int, int> sig;
    switch (pair.type) {
    case PairType::CI:
    case PairType::DIII:
        n = 2 * pair.p;
        sig = {pair.p, pair.p};
        break;
    case PairType::CII:
        n = 2 * (pair.p + pair.q);
        sig = {2 * pair.p, 2 * pair.q};
        break;
    default:
        n = pair.p + pair.q;
        sig = {pair.p, pair.q};
    }
    std::set<Signed> seen;
    std::int64_t count = 0;
    for_each_signed(n, [&](const Signed& d) {
        if (signature(d) != sig)
            return;
        switch (pair.type) {
        case PairType::BDI:
            if (!orthogonal(d))
                return;
            count += very_even(d) ? 2 : 1;
            break;
        case PairType::CI:
            count += symplectic(d);
            break;
        case PairType::CII:
            count += quaternionic(d, false);
            break;
        case PairType::DIII:
            count += quaternionic(d, true);
            break;
        case PairType::AIII_PGL:
            if (pair.p == pair.q) {
                Signed key = std::min(d, swapped(d));
                count += seen.insert(key).second;
            } else {
                ++count;
            }
            break;
        default:
            ++count;
        }
    });
    return count;
}

// Component-group character count for the split orthogonal and symplectic
// pairs: 2^r with r from the odd (orthogonal) or even (symplectic) rows.
inline std::int64_t component_characters(const Signed& d, bool orthogonal_type)
{
    int r = 0;
    bool any = false;
    for (const auto& [len, c] : d)
        if ((len % 2 == 1) == orthogonal_type) {
            any = true;
            r += (c.first > 0) + (c.second > 0);
        }
    if (orthogonal_type && any)
        --r;
    return std::int64_t{1} << r;
}

// Sum over orbits of the number of component-group characters.
inline std::int64_t orbital_count(const sydlab::SymmetricPair& pair)
{
    bool ortho = pair.type == sydlab::PairType::BDI;
    int n = ortho ? pair.p + pair.q : 2 * pair.p;
    std::pair<int, int> sig = ortho ? std::pair{pair.p, pair.q} : std::pair{pair.p, pair.p};
    std::int64_t total = 0;
    for_each_signed(n, [&](const Signed& d) {
        if (signature(d) == sig && (ortho ? orthogonal(d) : symplectic(d)))
            total += (ortho && very_even(d) ? 2 : 1) * component_characters(d, ortho);
    });
    return total;
}

// Signed permutations as (perm, sign) with x_i -> sign_i x_{perm_i}.
struct Element {
    std::vector<int> perm;
    std::vector<int> sign;
};

inline std::vector<Element> hyperoctahedral(int r)
{
    std::vector<Element> out;
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int mask = 0; mask < (1 << r); ++mask) {
            Element e{perm, std::vector<int>(r, 1)};
            for (int i = 0; i < r; ++i)
                if (mask >> i & 1)
                    e.sign[i] = -1;
            out.push_back(e);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Keeps the first m coordinates as a block.
inline bool preserves_block(const Element& e, int m)
{
    for (int i = 0; i < static_cast<int>(e.perm.size()); ++i)
        if ((i < m) != (e.perm[i] < m))
            return false;
    return true;
}

inline int negatives(const Element& e, int from, int to)
{
    int n = 0;
    for (int i = from; i < to; ++i)
        n += e.sign[i] < 0;
    return n;
}

} // namespace oracle

#endif
