#include <sydlab/atlas.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <sydlab/generating.hpp>
#include <sydlab/hecke.hpp>
#include <sydlab/orbits.hpp>
#include <sydlab/series.hpp>

namespace sydlab {

std::string kind_name(LocalSystemKind k)
{
    switch (k) {
    case LocalSystemKind::Tau:
        return "Tau";
    case LocalSystemKind::TauPsi2:
        return "TauPsi2";
    case LocalSystemKind::TauPsiM:
        return "TauPsiM";
    case LocalSystemKind::RhoPsi2m:
        return "RhoPsi2m";
    case LocalSystemKind::RhoTau:
        return "RhoTau";
    case LocalSystemKind::RhoTauPhi:
        return "RhoTauPhi";
    case LocalSystemKind::RhoOmegaTauPhi:
        return "RhoOmegaTauPhi";
    case LocalSystemKind::NilpotentE:
        return "NilpotentE";
    }
    return "?";
}

namespace {

std::string bits(const PiCharacter& phi)
{
    std::string out;
    for (int b : phi)
        out += b ? '1' : '0';
    return out.empty() ? "-" : out;
}

bool has_theta(LocalSystemKind k)
{
    return k == LocalSystemKind::RhoTau || k == LocalSystemKind::RhoTauPhi || k == LocalSystemKind::RhoOmegaTauPhi;
}

bool has_tau(LocalSystemKind k)
{
    return k != LocalSystemKind::RhoPsi2m && k != LocalSystemKind::NilpotentE;
}

bool has_phi(LocalSystemKind k)
{
    return k == LocalSystemKind::RhoTauPhi || k == LocalSystemKind::RhoOmegaTauPhi;
}

bool has_psi(LocalSystemKind k)
{
    return k == LocalSystemKind::TauPsiM || k == LocalSystemKind::RhoPsi2m || k == LocalSystemKind::NilpotentE;
}

std::int64_t as_int(const Rational& r)
{
    if (!is_integer(r))
        throw std::logic_error("expected an integer count, got " + to_string(r));
    return r.get_num().get_si();
}

int totient(int n)
{
    int count = 0;
    for (int i = 1; i <= n; ++i)
        count += std::gcd(i, n) == 1;
    return count;
}

// Exponents e of Z/d whose character psi_e has order exactly m.
std::vector<int> exponents_of_order(int d, int m)
{
    std::vector<int> out;
    for (int e = 0; e < d; ++e)
        if (d / std::gcd(e, d) == m)
            out.push_back(e);
    return out;
}

int cyclic_order(int d)
{
    return std::max(1, d);
}

void push_bdi(std::vector<CharSheafLabel>& out, const SupportLabel& s)
{
    const SymmetricPair& pair = s.pair;
    bool n_odd = (pair.p + pair.q) % 2 == 1;
    bool mu_empty = s.mu.diagram.empty();
    auto taus = enumerate_partitions(s.k);
    CharSheafLabel base;
    base.support = s;
    if (!n_odd && mu_empty && s.m == 0) {
        base.kind = LocalSystemKind::Tau;
        for (const auto& tau : taus) {
            base.tau = tau;
            out.push_back(base);
        }
        return;
    }
    std::int64_t thetas = as_int(n_odd ? f_b(s.m) : f_d(s.m, CountMode::Enumeration));
    if (!n_odd && mu_empty) {
        base.kind = LocalSystemKind::RhoTau;
        for (int t = 0; t < thetas; ++t)
            for (const auto& tau : taus) {
                base.theta = t;
                base.tau = tau;
                out.push_back(base);
            }
        return;
    }
    auto phis = pi_characters(s.mu.diagram);
    std::vector<Decoration> omegas = {Decoration::None};
    if (!n_odd && s.m >= 1)
        omegas = {Decoration::I, Decoration::II};
    base.kind = omegas.size() == 2 ? LocalSystemKind::RhoOmegaTauPhi : LocalSystemKind::RhoTauPhi;
    for (int t = 0; t < thetas; ++t)
        for (Decoration w : omegas)
            for (const auto& tau : taus)
                for (const auto& phi : phis) {
                    base.theta = t;
                    base.omega = w;
                    base.tau = tau;
                    base.phi = phi;
                    out.push_back(base);
                }
}

void push_ci(std::vector<CharSheafLabel>& out, const SupportLabel& s)
{
    std::int64_t thetas = as_int(theta_ci(s.m));
    CharSheafLabel base;
    base.support = s;
    base.kind = LocalSystemKind::RhoTau;
    for (int t = 0; t < thetas; ++t)
        for (const auto& tau : enumerate_partitions(s.k)) {
            base.theta = t;
            base.tau = tau;
            out.push_back(base);
        }
}

bool carries_psi2(const SupportLabel& s)
{
    return s.pair.type == PairType::AIII_PGL && s.pair.p == s.pair.q && s.pair.p > 0 && s.k == s.pair.p;
}

void push_k(std::vector<CharSheafLabel>& out, const SupportLabel& s)
{
    CharSheafLabel base;
    base.support = s;
    std::vector<LocalSystemKind> kinds = {LocalSystemKind::Tau};
    if (carries_psi2(s))
        kinds.push_back(LocalSystemKind::TauPsi2);
    for (auto kind : kinds)
        for (const auto& tau : enumerate_partitions(s.k)) {
            base.kind = kind;
            base.tau = tau;
            out.push_back(base);
        }
}

bool carries_rho(const SupportLabel& s)
{
    return s.k >= 1 && s.mu.diagram.empty() && s.pair.p == s.pair.q && 2 * s.m * s.k == s.pair.p + s.pair.q;
}

void push_sl(std::vector<CharSheafLabel>& out, const SupportLabel& s)
{
    CharSheafLabel base;
    base.support = s;
    if (s.k == 0) {
        int d = cyclic_order(s.mu.diagram.length_gcd());
        base.kind = LocalSystemKind::NilpotentE;
        for (int e = 0; e < d; ++e) {
            int order = d / std::gcd(e, d);
            if (order % 2 == 0)
                continue;
            base.exponent = e;
            base.order = order;
            out.push_back(base);
        }
        return;
    }
    int d = sl_check_d(s);
    if (s.m % 2 == 1) {
        base.kind = LocalSystemKind::TauPsiM;
        base.order = s.m;
        for (const auto& tau : enumerate_partitions(s.k))
            for (int e : exponents_of_order(d, s.m)) {
                base.tau = tau;
                base.exponent = e;
                out.push_back(base);
            }
    }
    if (carries_rho(s)) {
        base.kind = LocalSystemKind::RhoPsi2m;
        base.tau.clear();
        base.order = 2 * s.m;
        for (const auto& rho : enumerate_bipartitions(s.k))
            for (int e : exponents_of_order(d, 2 * s.m)) {
                base.rho = rho;
                base.exponent = e;
                out.push_back(base);
            }
    }
}

} // namespace

std::string to_text(const CharSheafLabel& l)
{
    std::string out = to_text(l.support) + " | " + kind_name(l.kind);
    if (has_theta(l.kind))
        out += " theta=" + std::to_string(l.theta);
    if (l.kind == LocalSystemKind::RhoOmegaTauPhi)
        out += " omega=" + decoration_name(l.omega);
    if (has_tau(l.kind))
        out += " tau=" + to_string(l.tau);
    if (l.kind == LocalSystemKind::RhoPsi2m)
        out += " rho=" + to_string(l.rho.first) + ";" + to_string(l.rho.second);
    if (has_phi(l.kind))
        out += " phi=" + bits(l.phi);
    if (has_psi(l.kind))
        out += " psi=" + std::to_string(l.exponent) + "/" + std::to_string(l.order);
    return out;
}

std::vector<CharSheafLabel> enumerate_char_labels(const SymmetricPair& pair)
{
    std::vector<CharSheafLabel> out;
    for (const SupportLabel& s : support_set(pair)) {
        switch (pair.type) {
        case PairType::BDI:
            push_bdi(out, s);
            break;
        case PairType::CI:
            push_ci(out, s);
            break;
        case PairType::AIII_SL:
            push_sl(out, s);
            break;
        default:
            push_k(out, s);
            break;
        }
    }
    return out;
}

std::int64_t char_count(const SymmetricPair& pair)
{
    return static_cast<std::int64_t>(enumerate_char_labels(pair).size());
}

std::vector<OrbitalDatum> enumerate_orbital_data(const SymmetricPair& pair)
{
    std::vector<OrbitalDatum> out;
    for (const OrbitLabel& orbit : enumerate_syd(pair)) {
        std::int64_t n = component_group(pair, orbit).character_count();
        for (int c = 0; c < n; ++c)
            out.push_back({orbit, c});
    }
    return out;
}

namespace {

// Strips min(plus, minus)/divisor rows of each sign from every length.
struct Split {
    std::vector<std::pair<int, int>> stripped; // (length, rows of each sign)
    SignedYoungDiagram residual;
};

Split split_rows(const SignedYoungDiagram& d, int divisor)
{
    Split s;
    std::vector<Row> rest;
    for (const Row& row : d.rows()) {
        int l = std::min(row.plus, row.minus) / divisor;
        if (l > 0)
            s.stripped.push_back({row.length, l});
        rest.push_back({row.length, row.plus - divisor * l, row.minus - divisor * l});
    }
    s.residual = SignedYoungDiagram(rest);
    return s;
}

CharSheafLabel k_shape(const SymmetricPair& pair, const OrbitLabel& orbit, int character)
{
    int divisor = pair.type == PairType::CII || pair.type == PairType::DIII ? 2 : 1;
    Split s = split_rows(orbit.diagram, divisor);
    int k = 0;
    for (auto [length, l] : s.stripped)
        k += length * l;
    CharSheafLabel out;
    out.support = {pair, SupportShape::K, 0, k, {}, Decoration::None};
    SignedYoungDiagram mu = s.residual;
    if (pair.type == PairType::AIII_PGL && out.support.reduced_pair().p == out.support.reduced_pair().q)
        mu = swap_canonical(mu);
    out.support.mu = {mu, Decoration::None};
    out.kind = character == 1 ? LocalSystemKind::TauPsi2 : LocalSystemKind::Tau;
    out.tau = transpose(from_multiplicities(s.stripped));
    return out;
}

CharSheafLabel sl_map(const SymmetricPair& pair, const OrbitLabel& orbit, int character)
{
    const auto& lambda = orbit.diagram;
    int d = cyclic_order(lambda.length_gcd());
    int order = d / std::gcd(character, d);
    int j = character / (d / order);
    CharSheafLabel out;
    if (order % 2 == 1) {
        if (is_richardson(pair, orbit)) {
            out.support = {pair, SupportShape::ML, 1, 0, orbit, Decoration::None};
            out.kind = LocalSystemKind::NilpotentE;
            out.exponent = character;
            out.order = order;
            return out;
        }
        int m = order;
        Split s = split_rows(lambda, 1);
        int l = 0;
        std::vector<std::pair<int, int>> tau;
        for (auto [length, count] : s.stripped) {
            l += length / m * count;
            tau.push_back({length / m, count});
        }
        out.support = {pair, SupportShape::ML, m, l, {s.residual, Decoration::None}, Decoration::None};
        out.kind = LocalSystemKind::TauPsiM;
        out.tau = from_multiplicities(tau);
        out.order = m;
        out.exponent = j * (sl_check_d(out.support) / m);
        return out;
    }
    int m = order / 2;
    std::vector<std::pair<int, int>> plus, minus;
    for (const Row& row : lambda.rows()) {
        if (row.plus > 0)
            plus.push_back({row.length / order, row.plus});
        if (row.minus > 0)
            minus.push_back({row.length / order, row.minus});
    }
    out.support = {pair, SupportShape::ML, m, (pair.p + pair.q) / order, {}, Decoration::None};
    out.kind = LocalSystemKind::RhoPsi2m;
    out.rho = {from_multiplicities(plus), from_multiplicities(minus)};
    out.order = order;
    out.exponent = j * (sl_check_d(out.support) / order);
    return out;
}

} // namespace

CharSheafLabel bijection_orbital_to_char(const SymmetricPair& pair, const OrbitLabel& orbit, int character)
{
    require_orbit_label(pair, orbit);
    std::int64_t characters = component_group(pair, orbit).character_count();
    if (character < 0 || character >= characters)
        throw std::invalid_argument("character " + std::to_string(character) + " outside the component group of " + to_text(orbit));
    switch (pair.type) {
    case PairType::AIII_PGL:
    case PairType::GLGL:
    case PairType::CII:
    case PairType::DIII:
        return k_shape(pair, orbit, character);
    case PairType::AIII_SL:
        return sl_map(pair, orbit, character);
    default:
        throw std::invalid_argument("no explicit bijection for " + to_string(pair));
    }
}

BijectionReport verify_bijection(const SymmetricPair& pair)
{
    BijectionReport rep;
    rep.pair = pair;
    std::set<std::string> codomain;
    for (const auto& l : enumerate_char_labels(pair))
        codomain.insert(to_text(l));
    rep.codomain = static_cast<std::int64_t>(codomain.size());
    std::set<std::string> image;
    auto data = enumerate_orbital_data(pair);
    rep.domain = static_cast<std::int64_t>(data.size());
    for (const auto& datum : data) {
        CharSheafLabel l = bijection_orbital_to_char(pair, datum.orbit, datum.character);
        image.insert(to_text(l));
        if (pair.type == PairType::AIII_SL) {
            int d = cyclic_order(datum.orbit.diagram.length_gcd());
            int order = d / std::gcd(datum.character, d);
            int family = l.kind == LocalSystemKind::TauPsiM ? l.support.m : l.kind == LocalSystemKind::RhoPsi2m ? 2 * l.support.m : l.order;
            if (family != order)
                rep.order_preserving = false;
        }
    }
    rep.injective = image.size() == data.size();
    rep.surjective = image == codomain;
    return rep;
}

namespace {

std::int64_t p_of(int n)
{
    return partition_count(n);
}

Rational b_formula(int p, int q)
{
    return nilpotent_support_count(SymmetricPair::bdi(p, q), CountMode::Formula);
}

Rational family_count(const SupportLabel& s)
{
    const SymmetricPair& pair = s.pair;
    switch (pair.type) {
    case PairType::AIII_SL: {
        if (s.k == 0)
            return odd_part(s.mu.diagram.length_gcd());
        Rational total = 0;
        if (s.m % 2 == 1)
            total += Rational(static_cast<long>(p_of(s.k) * totient(s.m)));
        if (carries_rho(s))
            total += Rational(static_cast<long>(bipartition_count(s.k) * totient(2 * s.m)));
        return total;
    }
    default:
        return Rational(static_cast<long>(p_of(s.k) * (carries_psi2(s) ? 2 : 1)));
    }
}

} // namespace

Rational bdi_support_count(int p, int q)
{
    int r = std::min(p, q);
    Rational total = 0;
    if ((p + q) % 2 == 1) {
        for (int m = 0; m <= r; ++m)
            for (int k = 0; m + 2 * k <= r; ++k)
                total += f_b(m) * Rational(static_cast<long>(p_of(k))) * b_formula(p - m - 2 * k, q - m - 2 * k);
        return total;
    }
    int start = p % 2 == 1 ? 1 : 0;
    for (int m = start; m <= r; m += 2)
        for (int k = 0; m + 2 * k <= r; ++k)
            total += 2 * f_d(m, CountMode::Formula) * Rational(static_cast<long>(p_of(k))) * b_formula(p - m - 2 * k, q - m - 2 * k);
    if (p == q && p % 2 == 0)
        total += rational(3, 2) * Rational(static_cast<long>(p_of(p / 2)));
    return total;
}

Rational bdi_total_closed_form(int p, int q)
{
    if (p < q)
        throw std::invalid_argument("closed form needs p >= q");
    ProductSpec spec;
    spec.times(product_factor(1, {0, p - q}, -1, 0, 0)).times(product_factor(1, {1, 0})).times(product_factor(-1, {1, 0}, -3));
    Rational value = expand(spec, q).coefficient(q);
    if (p == q)
        value += rational(3, 2) * expand(gf::partitions_even(), q).coefficient(q);
    return value;
}

Rational bdi_nilpotent_closed_form(int p, int q)
{
    if (p < q)
        throw std::invalid_argument("closed form needs p >= q");
    if (p % 2 == 1 && q % 2 == 1)
        throw std::invalid_argument("closed form needs p or q even");
    ProductSpec spec;
    spec.times(product_factor(1, {0, p - q}, -1, 0, 0)).times(product_factor(-1, {2, 0}, -2));
    if ((p + q) % 2 == 1)
        spec.times(product_factor(1, {2, -1}, 2));
    else
        spec.times(product_factor(1, {2, 0}, 2));
    return expand(spec, q).coefficient(q);
}

std::int64_t bdi_nilpotent_label_count(int p, int q)
{
    std::int64_t count = 0;
    for (const auto& l : enumerate_char_labels(SymmetricPair::bdi(p, q)))
        count += l.support.m == 0 && l.support.k == 0;
    return count;
}

CountReport verify_counts(const SymmetricPair& pair)
{
    validate(pair);
    CountReport rep;
    rep.pair = pair;
    rep.orbital = orbital_complex_count(pair, CountMode::Enumeration);
    rep.orbital_formula_mode = orbital_complex_count(pair, CountMode::Formula);
    auto labels = enumerate_char_labels(pair);
    rep.labels = static_cast<std::int64_t>(labels.size());
    std::set<std::string> keys;
    for (const auto& l : labels)
        keys.insert(to_text(l));
    rep.labels_distinct = keys.size() == labels.size();
    switch (pair.type) {
    case PairType::BDI:
        rep.formula = bdi_support_count(pair.p, pair.q);
        break;
    case PairType::CI: {
        int n = pair.n();
        Rational total = 0;
        for (int m = 0; m <= n; ++m)
            for (int k = 0; m + 2 * k <= n; ++k)
                total += theta_ci(m) * Rational(static_cast<long>(p_of(k))) * nilpotent_support_count(SymmetricPair::ci(n - m - 2 * k));
        rep.formula = total;
        rep.series = expand(gf::orbital_c(), n).coefficient(n);
        break;
    }
    default: {
        Rational total = 0;
        for (const auto& s : support_set(pair))
            total += family_count(s);
        rep.formula = total;
        break;
    }
    }
    Rational target = pair.type == PairType::BDI ? rep.orbital_formula_mode : Rational(static_cast<long>(rep.orbital));
    rep.ok = rep.labels_distinct && rep.labels == rep.orbital && rep.formula == target && (!rep.series || *rep.series == target);
    return rep;
}

} // namespace sydlab
