#include <sydlab/invariants.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <sydlab/orbits.hpp>
#include <sydlab/richardson.hpp>

namespace sydlab {

ComponentGroup ComponentGroup::cyclic(int d)
{
    if (d < 1)
        throw std::invalid_argument("cyclic order must be positive");
    return d == 1 ? ComponentGroup{} : ComponentGroup{Kind::Cyclic, d};
}

ComponentGroup ComponentGroup::elementary2(int r)
{
    if (r < 0)
        throw std::invalid_argument("elementary 2-group rank must be nonnegative");
    return r == 0 ? ComponentGroup{} : ComponentGroup{Kind::Elementary2, r};
}

std::int64_t ComponentGroup::order() const
{
    switch (kind) {
    case Kind::Cyclic:
        return value;
    case Kind::Elementary2:
        return std::int64_t{1} << value;
    default:
        return 1;
    }
}

std::string to_string(const ComponentGroup& g)
{
    switch (g.kind) {
    case ComponentGroup::Kind::Cyclic:
        return "Z/" + std::to_string(g.value);
    case ComponentGroup::Kind::Elementary2:
        return "(Z/2)^" + std::to_string(g.value);
    default:
        return "1";
    }
}

int r_orthogonal(const SignedYoungDiagram& d)
{
    int r = 0;
    bool odd = false;
    for (const Row& row : d.rows())
        if (row.length % 2 == 1) {
            odd = true;
            r += (row.plus > 0) + (row.minus > 0);
        }
    return odd ? r - 1 : 0;
}

int r_symplectic(const SignedYoungDiagram& d)
{
    int r = 0;
    for (const Row& row : d.rows())
        if (row.length % 2 == 0)
            r += (row.plus > 0) + (row.minus > 0);
    return r;
}

ComponentGroup component_group(const SymmetricPair& pair, const OrbitLabel& orbit)
{
    require_orbit_label(pair, orbit);
    const auto& d = orbit.diagram;
    switch (pair.type) {
    case PairType::AIII_SL:
        return ComponentGroup::cyclic(std::max(1, d.length_gcd()));
    case PairType::AIII_PGL:
        return ComponentGroup::elementary2(d.balanced() && !d.empty() ? 1 : 0);
    case PairType::BDI:
        return ComponentGroup::elementary2(r_orthogonal(d));
    case PairType::CI:
        return ComponentGroup::elementary2(r_symplectic(d));
    default:
        return {};
    }
}

std::int64_t orbital_complex_count(const SymmetricPair& pair, CountMode mode)
{
    validate(pair);
    if (mode == CountMode::Formula && pair.type == PairType::BDI && pair.p == 0 && pair.q == 0)
        return 2;
    std::int64_t total = 0;
    for (const OrbitLabel& l : enumerate_syd(pair))
        total += component_group(pair, l).character_count();
    return total;
}

SymmetricPair SupportLabel::reduced_pair() const
{
    switch (pair.type) {
    case PairType::BDI:
        return SymmetricPair::bdi(pair.p - m - 2 * k, pair.q - m - 2 * k);
    case PairType::CI:
        return SymmetricPair::ci(pair.n() - m - 2 * k);
    case PairType::AIII_PGL:
        return SymmetricPair::pgl(pair.p - k, pair.q - k);
    case PairType::GLGL:
        return SymmetricPair::gl(pair.p - k, pair.q - k);
    case PairType::CII:
        return SymmetricPair::cii(pair.p - k, pair.q - k);
    case PairType::DIII:
        return SymmetricPair::diii(pair.n() - 2 * k);
    case PairType::AIII_SL:
        return SymmetricPair::sl(pair.p - m * k, pair.q - m * k);
    }
    return pair;
}

OrbitLabel SupportLabel::orbit() const
{
    SignedYoungDiagram base;
    switch (pair.type) {
    case PairType::BDI:
    case PairType::CI:
        base = SignedYoungDiagram({Row{1, m, m}, Row{2, k, k}});
        break;
    case PairType::AIII_PGL:
    case PairType::GLGL:
        base = ones(k, k);
        break;
    case PairType::CII:
    case PairType::DIII:
        base = ones(2 * k, 2 * k);
        break;
    case PairType::AIII_SL:
        if (k > 0)
            base = SignedYoungDiagram({Row{m, k, k}});
        break;
    }
    SignedYoungDiagram d = join_diagrams(base, mu.diagram);
    if (pair.type == PairType::AIII_PGL && pair.p == pair.q)
        d = swap_canonical(d);
    return {d, decoration};
}

std::string to_text(const SupportLabel& s)
{
    std::string out = to_string(s.pair) + " ";
    switch (s.shape) {
    case SupportShape::MK:
        out += "m=" + std::to_string(s.m) + " k=" + std::to_string(s.k);
        break;
    case SupportShape::K:
        out += "k=" + std::to_string(s.k);
        break;
    case SupportShape::ML:
        out += "m=" + std::to_string(s.m) + " l=" + std::to_string(s.k);
        break;
    }
    out += " mu=" + to_text(s.mu.diagram);
    if (s.decoration != Decoration::None)
        out += " decor=" + decoration_name(s.decoration);
    return out;
}

namespace {

void push_mk(std::vector<SupportLabel>& out, const SymmetricPair& pair, int m, int k)
{
    SupportLabel proto{pair, SupportShape::MK, m, k, {}, Decoration::None};
    for (const OrbitLabel& mu : richardson_orbits(proto.reduced_pair())) {
        SupportLabel s = proto;
        s.mu = mu;
        if (pair.type == PairType::BDI && is_very_even(s.orbit().diagram)) {
            s.decoration = Decoration::I;
            out.push_back(s);
            s.decoration = Decoration::II;
        }
        out.push_back(s);
    }
}

void push_k(std::vector<SupportLabel>& out, const SymmetricPair& pair, int k)
{
    SupportLabel proto{pair, SupportShape::K, 0, k, {}, Decoration::None};
    for (const OrbitLabel& mu : richardson_orbits(proto.reduced_pair())) {
        SupportLabel s = proto;
        s.mu = mu;
        out.push_back(s);
    }
}

} // namespace

std::vector<SupportLabel> support_set(const SymmetricPair& pair)
{
    validate(pair);
    std::vector<SupportLabel> out;
    int lo = std::min(pair.p, pair.q);
    switch (pair.type) {
    case PairType::BDI: {
        bool n_even = (pair.p + pair.q) % 2 == 0;
        for (int m = 0; m <= lo; ++m) {
            if (n_even && (m - pair.q) % 2 != 0)
                continue;
            for (int k = 0; m + 2 * k <= lo; ++k)
                push_mk(out, pair, m, k);
        }
        break;
    }
    case PairType::CI:
        for (int m = 0; m <= pair.n(); ++m)
            for (int k = 0; m + 2 * k <= pair.n(); ++k)
                push_mk(out, pair, m, k);
        break;
    case PairType::AIII_PGL:
    case PairType::GLGL:
    case PairType::CII:
        for (int k = 0; k <= lo; ++k)
            push_k(out, pair, k);
        break;
    case PairType::DIII:
        for (int k = 0; 2 * k <= pair.n(); ++k)
            push_k(out, pair, k);
        break;
    case PairType::AIII_SL: {
        int n = pair.p + pair.q;
        // l = 0: the stratum does not depend on m; m = 1 is the placeholder.
        for (const OrbitLabel& mu : richardson_orbits(pair))
            out.push_back({pair, SupportShape::ML, 1, 0, mu, Decoration::None});
        for (int m = 1; 2 * m <= n; ++m)
            for (int l = 1; 2 * m * l <= n; ++l) {
                if (m * l > lo)
                    break;
                SupportLabel proto{pair, SupportShape::ML, m, l, {}, Decoration::None};
                bool fills = 2 * m * l == n && pair.p == pair.q;
                for (const OrbitLabel& mu : richardson_orbits(proto.reduced_pair())) {
                    bool ok = m % 2 == 1 ? (mu.diagram.empty() || mu.diagram.length_gcd() % m == 0) : (fills && mu.diagram.empty());
                    if (!ok)
                        continue;
                    SupportLabel s = proto;
                    s.mu = mu;
                    out.push_back(s);
                }
            }
        break;
    }
    }
    return out;
}

bool in_support_set(const SupportLabel& s)
{
    auto all = support_set(s.pair);
    return std::find(all.begin(), all.end(), s) != all.end();
}

std::string family_name(BraidFamily f)
{
    switch (f) {
    case BraidFamily::B:
        return "B";
    case BraidFamily::D:
        return "D";
    case BraidFamily::ExtB:
        return "ExtB";
    case BraidFamily::ExtD:
        return "ExtD";
    }
    return "?";
}

std::string to_string(const FundGroupDescriptor& f)
{
    std::string out;
    for (const auto& b : f.braid) {
        if (!out.empty())
            out += " x ";
        out += family_name(b.family) + "(" + std::to_string(b.rank) + ")";
    }
    for (int a : f.abelian) {
        if (!out.empty())
            out += " x ";
        out += "Z/" + std::to_string(a);
    }
    return out.empty() ? "1" : out;
}

int sl_check_d(const SupportLabel& s)
{
    int d_mu = s.mu.diagram.length_gcd();
    if (s.k == 0)
        return std::max(1, d_mu);
    if (s.mu.diagram.empty())
        return 2 * s.m;
    return std::gcd(2 * s.m, d_mu);
}

FundGroupDescriptor fundamental_group_descriptor(const SupportLabel& s)
{
    if (!in_support_set(s))
        throw std::invalid_argument("not a support label: " + to_text(s));
    FundGroupDescriptor f;
    auto braid = [&](BraidFamily fam, int rank) {
        if (rank > 0)
            f.braid.push_back({fam, rank});
    };
    auto twos = [&](int r) {
        for (int i = 0; i < r; ++i)
            f.abelian.push_back(2);
    };
    const auto& mu = s.mu.diagram;
    switch (s.pair.type) {
    case PairType::AIII_PGL:
        braid(BraidFamily::B, s.k);
        // The empty diagram has d = 0; PGL(0) itself has no Z/2.
        if (mu.empty() ? s.k > 0 : mu.length_gcd() % 2 == 0)
            f.abelian.push_back(2);
        break;
    case PairType::GLGL:
    case PairType::CII:
    case PairType::DIII:
        braid(BraidFamily::B, s.k);
        break;
    case PairType::AIII_SL: {
        braid(BraidFamily::B, s.k);
        int d = sl_check_d(s);
        if (d > 1)
            f.abelian.push_back(d);
        break;
    }
    case PairType::BDI:
        if (mu.empty()) {
            braid(BraidFamily::ExtD, s.m);
            braid(BraidFamily::ExtB, s.k);
        } else {
            braid(BraidFamily::ExtB, s.m);
            braid(BraidFamily::ExtB, s.k);
            twos(r_orthogonal(mu));
        }
        break;
    case PairType::CI:
        braid(BraidFamily::ExtB, s.m);
        braid(BraidFamily::ExtB, s.k);
        twos(r_symplectic(mu));
        break;
    }
    return f;
}

} // namespace sydlab
