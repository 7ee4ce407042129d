#include <sydlab/weyl.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace sydlab {

SignedPermutation SignedPermutation::identity(int rank)
{
    SignedPermutation s;
    s.perm.resize(rank);
    std::iota(s.perm.begin(), s.perm.end(), 0);
    s.sign.assign(rank, 1);
    return s;
}

std::vector<int> SignedPermutation::apply(const std::vector<int>& x) const
{
    std::vector<int> y(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        y[perm[i]] = sign[i] * x[i];
    return y;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b)
{
    SignedPermutation c;
    c.perm.resize(b.perm.size());
    c.sign.resize(b.perm.size());
    for (std::size_t i = 0; i < b.perm.size(); ++i) {
        c.perm[i] = a.perm[b.perm[i]];
        c.sign[i] = a.sign[b.perm[i]] * b.sign[i];
    }
    return c;
}

SignedPermutation SignedPermutation::inverse() const
{
    SignedPermutation inv;
    inv.perm.resize(perm.size());
    inv.sign.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        inv.perm[perm[i]] = static_cast<int>(i);
        inv.sign[perm[i]] = sign[i];
    }
    return inv;
}

int SignedPermutation::negative_signs() const
{
    return static_cast<int>(std::count(sign.begin(), sign.end(), -1));
}

std::uint32_t SignedPermutation::key() const
{
    std::uint32_t k = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        k |= static_cast<std::uint32_t>(perm[i]) << (3 * i);
        if (sign[i] < 0)
            k |= std::uint32_t{1} << (21 + i);
    }
    return k;
}

SignedPermutation SignedPermutation::from_key(std::uint32_t key, int rank)
{
    SignedPermutation s;
    for (int i = 0; i < rank; ++i) {
        s.perm.push_back(static_cast<int>((key >> (3 * i)) & 7));
        s.sign.push_back((key >> (21 + i)) & 1 ? -1 : 1);
    }
    return s;
}

int weyl_rank(const SymmetricPair& pair)
{
    validate(pair);
    switch (pair.type) {
    case PairType::CI:
        return pair.n();
    case PairType::DIII:
        return pair.n() / 2;
    default:
        return std::min(pair.p, pair.q);
    }
}

IGroup i_group(const SymmetricPair& pair)
{
    int r = weyl_rank(pair);
    IGroup g;
    switch (pair.type) {
    case PairType::BDI:
        g.rank = r;
        g.permuted_by_weyl = true;
        g.iota.assign(r, (pair.p + pair.q) % 2 == 1 ? 1 : 0);
        break;
    case PairType::CI:
        g.rank = r;
        g.permuted_by_weyl = true;
        g.iota.assign(r, 0);
        break;
    case PairType::AIII_SL:
    case PairType::AIII_PGL:
        g.rank = pair.p == pair.q && pair.p > 0 ? 1 : 0;
        g.iota.assign(g.rank, pair.type == PairType::AIII_PGL && pair.p % 2 == 1 ? 1 : 0);
        break;
    default:
        break;
    }
    g.iota_nontrivial = std::count(g.iota.begin(), g.iota.end(), 1) > 0;
    RestrictedRootDatum datum = restricted_root_datum(pair);
    // I^0 is spanned by the real-root coroots; reduce over F_2.
    std::vector<std::vector<int>> basis;
    for (const auto& root : datum.roots) {
        if (std::count(root.coroot_mod2.begin(), root.coroot_mod2.end(), 1) == 0)
            continue;
        if (std::find(g.generators.begin(), g.generators.end(), root.coroot_mod2) == g.generators.end())
            g.generators.push_back(root.coroot_mod2);
        std::vector<int> v = root.coroot_mod2;
        for (const auto& b : basis) {
            int pivot = static_cast<int>(std::find(b.begin(), b.end(), 1) - b.begin());
            if (v[pivot])
                for (std::size_t i = 0; i < v.size(); ++i)
                    v[i] ^= b[i];
        }
        if (std::count(v.begin(), v.end(), 1) > 0)
            basis.push_back(v);
    }
    g.rank0 = static_cast<int>(basis.size());
    return g;
}

namespace {

struct Multiplicities {
    int long_roots = 0;  // eps_i +- eps_j
    int short_roots = 0; // eps_i
    int double_roots = 0; // 2 eps_i
};

Multiplicities multiplicities_of(const SymmetricPair& pair)
{
    int r = weyl_rank(pair);
    int n = pair.p + pair.q;
    Multiplicities m;
    switch (pair.type) {
    case PairType::BDI:
        m.long_roots = 1;
        m.short_roots = std::abs(pair.p - pair.q);
        break;
    case PairType::CI:
        m = {1, 0, 1};
        break;
    case PairType::AIII_SL:
    case PairType::AIII_PGL:
    case PairType::GLGL:
        m = {2, 2 * (n - 2 * r), 1};
        break;
    case PairType::CII:
        m = {4, 4 * (n - 2 * r), 3};
        break;
    case PairType::DIII:
        m = {4, pair.n() % 2 == 1 ? 4 : 0, 1};
        break;
    }
    return m;
}

SignedPermutation reflection(const std::vector<int>& alpha)
{
    int r = static_cast<int>(alpha.size());
    int aa = 0;
    for (int a : alpha)
        aa += a * a;
    SignedPermutation s = SignedPermutation::identity(r);
    for (int k = 0; k < r; ++k) {
        std::vector<int> img(r, 0);
        img[k] = 1;
        int xa = alpha[k];
        for (int i = 0; i < r; ++i)
            img[i] -= 2 * xa * alpha[i] / aa;
        for (int i = 0; i < r; ++i)
            if (img[i] != 0) {
                s.perm[k] = i;
                s.sign[k] = img[i];
            }
    }
    return s;
}

std::vector<int> primitive(std::vector<int> v)
{
    int g = 0;
    for (int x : v)
        g = std::gcd(g, std::abs(x));
    for (int& x : v)
        x /= g;
    auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (first != v.end() && *first < 0)
        for (int& x : v)
            x = -x;
    return v;
}

std::vector<std::uint32_t> closure(const std::vector<SignedPermutation>& gens, int rank)
{
    std::unordered_set<std::uint32_t> seen;
    std::deque<SignedPermutation> queue;
    SignedPermutation id = SignedPermutation::identity(rank);
    seen.insert(id.key());
    queue.push_back(id);
    while (!queue.empty()) {
        SignedPermutation x = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            SignedPermutation y = g * x;
            if (seen.insert(y.key()).second)
                queue.push_back(std::move(y));
        }
    }
    std::vector<std::uint32_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

void check_bound(int rank, int bound)
{
    if (rank > bound || rank > 7)
        throw std::domain_error("brute force bound: rank " + std::to_string(rank) + " exceeds " + std::to_string(std::min(bound, 7)));
}

} // namespace

RestrictedRootDatum restricted_root_datum(const SymmetricPair& pair)
{
    int r = weyl_rank(pair);
    Multiplicities mult = multiplicities_of(pair);
    RestrictedRootDatum d;
    d.rank = r;
    bool coords = pair.type == PairType::BDI || pair.type == PairType::CI;
    int i_rank = coords ? r : ((pair.type == PairType::AIII_SL || pair.type == PairType::AIII_PGL) && pair.p == pair.q && pair.p > 0 ? 1 : 0);
    auto zero = std::vector<int>(i_rank, 0);
    auto add = [&](std::vector<int> v, int m, std::vector<int> coroot) {
        if (m <= 0)
            return;
        d.roots.push_back({v, m, coroot});
        for (int& x : v)
            x = -x;
        d.roots.push_back({v, m, coroot});
    };
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            for (int s : {-1, 1}) {
                std::vector<int> v(r, 0);
                v[i] = 1;
                v[j] = s;
                std::vector<int> c = zero;
                if (coords) {
                    c[i] = 1;
                    c[j] = 1;
                }
                add(v, mult.long_roots, c);
            }
    for (int i = 0; i < r; ++i) {
        std::vector<int> v(r, 0);
        v[i] = 1;
        add(v, mult.short_roots, zero);
        v[i] = 2;
        std::vector<int> c = zero;
        if (coords)
            c[i] = 1;
        else if (pair.type == PairType::AIII_SL && i_rank == 1)
            c[0] = 1;
        add(v, mult.double_roots, c);
    }
    if (r == 0)
        d.type = "0";
    else if (pair.type == PairType::BDI)
        d.type = (pair.p == pair.q ? "D" : "B") + std::to_string(r);
    else if (pair.type == PairType::CI)
        d.type = "C" + std::to_string(r);
    else
        d.type = (mult.short_roots > 0 ? "BC" : "C") + std::to_string(r);

    std::map<std::vector<int>, ReflectionData> lines;
    for (const auto& root : d.roots) {
        auto line = primitive(root.coords);
        auto [it, fresh] = lines.try_emplace(line);
        ReflectionData& rd = it->second;
        if (fresh) {
            rd.root = line;
            rd.element = reflection(line);
            rd.coroot_mod2 = root.coroot_mod2;
        } else if (root.coords != line && std::abs(*std::max_element(root.coords.begin(), root.coords.end(), [](int a, int b) { return std::abs(a) < std::abs(b); })) == 1) {
            rd.coroot_mod2 = root.coroot_mod2;
        }
        rd.delta += root.multiplicity;
    }
    for (auto& [line, rd] : lines) {
        rd.delta /= 2;
        d.reflections.push_back(rd);
    }
    return d;
}

std::vector<SignedPermutation> little_weyl_group(const SymmetricPair& pair, int rank_bound)
{
    RestrictedRootDatum d = restricted_root_datum(pair);
    check_bound(d.rank, rank_bound);
    std::vector<SignedPermutation> gens;
    for (const auto& rd : d.reflections)
        gens.push_back(rd.element);
    std::vector<SignedPermutation> out;
    for (auto k : closure(gens, d.rank))
        out.push_back(SignedPermutation::from_key(k, d.rank));
    return out;
}

ICharacter act_on_character(const SignedPermutation& w, const ICharacter& c, const IGroup& i)
{
    if (!i.permuted_by_weyl)
        return c;
    ICharacter out(c.size(), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
        out[w.perm[k]] = c[k];
    return out;
}

std::vector<ICharacter> character_orbit_reps(const SymmetricPair& pair)
{
    IGroup i = i_group(pair);
    std::vector<ICharacter> out;
    for (int m = 0; m <= i.rank; ++m) {
        ICharacter c(i.rank, 0);
        std::fill(c.begin(), c.begin() + m, 1);
        out.push_back(c);
    }
    return out;
}

int character_orbit_count(const SymmetricPair& pair, int rank_bound)
{
    IGroup i = i_group(pair);
    auto group = little_weyl_group(pair, rank_bound);
    int total = 1 << i.rank;
    std::vector<int> orbit(total, -1);
    int count = 0;
    for (int start = 0; start < total; ++start) {
        if (orbit[start] >= 0)
            continue;
        ICharacter c(i.rank);
        for (int b = 0; b < i.rank; ++b)
            c[b] = (start >> b) & 1;
        for (const auto& w : group) {
            ICharacter img = act_on_character(w, c, i);
            int code = 0;
            for (int b = 0; b < i.rank; ++b)
                code |= img[b] << b;
            orbit[code] = count;
        }
        ++count;
    }
    return count;
}

StabilizerReport stabilizer(const SymmetricPair& pair, const ICharacter& chi, int rank_bound)
{
    RestrictedRootDatum d = restricted_root_datum(pair);
    check_bound(d.rank, rank_bound);
    IGroup i = i_group(pair);
    if (static_cast<int>(chi.size()) != i.rank)
        throw std::invalid_argument("character length " + std::to_string(chi.size()) + " does not match rank of I " + std::to_string(i.rank));
    auto group = little_weyl_group(pair, rank_bound);

    StabilizerReport rep;
    rep.weyl_order = static_cast<std::int64_t>(group.size());
    for (const auto& w : group)
        if (act_on_character(w, chi, i) == chi)
            rep.stabilizer_keys.push_back(w.key());
    std::sort(rep.stabilizer_keys.begin(), rep.stabilizer_keys.end());

    std::vector<SignedPermutation> gens0;
    for (const auto& rd : d.reflections) {
        int pairing = 0;
        for (std::size_t k = 0; k < chi.size(); ++k)
            pairing ^= chi[k] & rd.coroot_mod2[k];
        if (rd.delta > 1 || (rd.delta == 1 && pairing == 0))
            gens0.push_back(rd.element);
    }
    rep.w0_keys = closure(gens0, d.rank);
    rep.stabilizer_order = static_cast<std::int64_t>(rep.stabilizer_keys.size());
    rep.w0_order = static_cast<std::int64_t>(rep.w0_keys.size());

    auto in = [](const std::vector<std::uint32_t>& set, std::uint32_t k) { return std::binary_search(set.begin(), set.end(), k); };
    rep.w0_contained = std::all_of(rep.w0_keys.begin(), rep.w0_keys.end(), [&](std::uint32_t k) { return in(rep.stabilizer_keys, k); });
    rep.w0_normal = true;
    rep.quotient_elementary2 = true;
    for (std::uint32_t k : rep.stabilizer_keys) {
        SignedPermutation g = SignedPermutation::from_key(k, d.rank);
        SignedPermutation gi = g.inverse();
        for (const auto& s : gens0)
            if (!in(rep.w0_keys, (g * s * gi).key()))
                rep.w0_normal = false;
        if (!in(rep.w0_keys, (g * g).key()))
            rep.quotient_elementary2 = false;
    }
    for (const auto& rd : d.reflections) {
        rep.stabilizer_reflections += in(rep.stabilizer_keys, rd.element.key());
        rep.w0_reflections += in(rep.w0_keys, rd.element.key());
    }
    if (rep.w0_contained && rep.w0_order > 0 && rep.stabilizer_order % rep.w0_order == 0) {
        std::int64_t index = rep.stabilizer_order / rep.w0_order;
        while (index > 1 && index % 2 == 0) {
            rep.quotient.push_back(2);
            index /= 2;
        }
        if (index > 1)
            rep.quotient.push_back(static_cast<int>(index));
    }
    return rep;
}

} // namespace sydlab
