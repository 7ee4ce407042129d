#include <sydlab/suites.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <sydlab/atlas.hpp>
#include <sydlab/generating.hpp>
#include <sydlab/hecke.hpp>
#include <sydlab/identities.hpp>
#include <sydlab/invariants.hpp>
#include <sydlab/orbits.hpp>
#include <sydlab/richardson.hpp>
#include <sydlab/series.hpp>
#include <sydlab/weyl.hpp>

namespace sydlab {

void RunConfig::validate() const
{
    auto need = [](int v, const char* name) {
        if (v < 1)
            throw std::invalid_argument(std::string(name) + " must be at least 1");
    };
    need(truncation_order1, "truncationOrder1");
    need(truncation_order2, "truncationOrder2");
    need(weyl_rank_bound, "weylRankBound");
    need(atlas_rank_bound, "atlasRankBound");
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"appendixC", "counting", "weyl", "richardson", "atlas", "all"};
    return names;
}

namespace {

class Collector {
public:
    explicit Collector(std::string suite) : suite_(std::move(suite)) {}

    // Records the first failure detail; passes if no failure was noted.
    void begin(std::string check)
    {
        current_ = {suite_, std::move(check), true, ""};
    }
    void fail(const std::string& detail)
    {
        if (current_.passed)
            current_.detail = detail;
        current_.passed = false;
    }
    void expect(bool cond, const std::string& detail)
    {
        if (!cond)
            fail(detail);
    }
    void end(std::vector<CheckResult>& out)
    {
        out.push_back(current_);
    }

private:
    std::string suite_;
    CheckResult current_;
};

std::string str(const Rational& r)
{
    return to_string(r);
}

std::string str(std::int64_t v)
{
    return std::to_string(v);
}

void appendix_c(std::vector<CheckResult>& out, const RunConfig& cfg)
{
    Collector c("appendixC");
    for (const auto& name : identity_names()) {
        int order = default_order(name);
        if (name == "C2_wt_product")
            order = cfg.truncation_order2;
        else if (name == "Fodd" || name == "Feven" || name == "qGauss_at_CI_specialization" || name == "psi1_specializations")
            order = cfg.truncation_order1;
        c.begin(name);
        IdentityReport r = verify_identity(name, order);
        if (!r.holds && r.first_mismatch)
            c.fail(r.first_mismatch->where + ": " + r.first_mismatch->lhs + " != " + r.first_mismatch->rhs);
        c.end(out);
    }
    c.begin("wt_2_1_spot");
    Series2 f = expand2(gf::wt_bivariate(), 2, 1);
    c.expect(wt_by_enumeration(2, 1) == 6 && f.coefficient(2, 1) == 6, "wt(2,1) enumeration " + str(wt_by_enumeration(2, 1)) + ", product " + str(f.coefficient(2, 1)));
    c.end(out);
}

void counting(std::vector<CheckResult>& out, const RunConfig& cfg)
{
    Collector c("counting");
    c.begin("hecke_d_values");
    const std::int64_t d_expected[] = {1, 1, 2, 3, 4};
    for (int k = 0; k < 5; ++k)
        c.expect(hecke_d(k) == d_expected[k], "d(" + str(k) + ") = " + str(hecke_d(k)));
    c.end(out);

    c.begin("hecke_e_values");
    const std::int64_t e_expected[] = {1, 2, 2, 4};
    for (int k = 0; k < 4; ++k)
        c.expect(hecke_e(k) == e_expected[k], "e(" + str(k) + ") = " + str(hecke_e(k)));
    c.end(out);

    c.begin("hecke_e_even");
    for (int k = 1; k <= cfg.truncation_order1; ++k)
        c.expect(hecke_e(k) % 2 == 0, "e(" + str(k) + ") = " + str(hecke_e(k)) + " is odd");
    c.end(out);

    c.begin("full_support_products");
    {
        int order = std::min(30, cfg.truncation_order1);
        Series fb = expand(gf::full_support_b(), order);
        Series fd = expand(gf::full_support_d(), order);
        for (int m = 0; m <= order; ++m) {
            c.expect(f_b(m) == fb.coefficient(m), "f_B(" + str(m) + ") = " + str(f_b(m)) + " vs " + str(fb.coefficient(m)));
            c.expect(f_d(m, CountMode::Formula) == fd.coefficient(m), "f_D(" + str(m) + ") = " + str(f_d(m, CountMode::Formula)) + " vs " + str(fd.coefficient(m)));
        }
    }
    c.end(out);

    int bound = cfg.atlas_rank_bound;
    c.begin("type_C_counts");
    for (int n = 0; n <= bound; ++n) {
        CountReport r = verify_counts(SymmetricPair::ci(n));
        c.expect(r.ok, "CI:" + str(n) + " orbital " + str(r.orbital) + ", labels " + str(r.labels) + ", formula " + str(r.formula));
    }
    c.end(out);

    c.begin("type_BD_counts");
    for (int n = 0; n <= bound; ++n)
        for (int p = 0; p <= n; ++p) {
            CountReport r = verify_counts(SymmetricPair::bdi(p, n - p));
            c.expect(r.ok, to_string(r.pair) + " orbital " + str(r.orbital) + ", labels " + str(r.labels) + ", support formula " + str(r.formula));
        }
    c.end(out);

    c.begin("orthogonal_closed_forms");
    for (int q = 0; q <= 8; ++q)
        for (int gap = 0; gap <= 6; ++gap) {
            int p = q + gap;
            SymmetricPair pair = SymmetricPair::bdi(p, q);
            Rational total = orbital_complex_count(pair, CountMode::Formula);
            c.expect(bdi_total_closed_form(p, q) == total, to_string(pair) + " total " + str(total) + " vs closed form " + str(bdi_total_closed_form(p, q)));
            if (p % 2 == 0 || q % 2 == 0) {
                Rational nil = nilpotent_support_count(pair, CountMode::Formula);
                c.expect(bdi_nilpotent_closed_form(p, q) == nil, to_string(pair) + " nilpotent " + str(nil) + " vs closed form " + str(bdi_nilpotent_closed_form(p, q)));
            }
        }
    c.end(out);
}

void richardson(std::vector<CheckResult>& out)
{
    Collector c("richardson");
    c.begin("calibration_literal_unique");
    CalibrationResult lit = calibrate(literal_conventions(), 13);
    c.expect(lit.matching.size() == 1, str(static_cast<std::int64_t>(lit.matching.size())) + " of " + str(static_cast<std::int64_t>(lit.tried.size())) + " literal conventions match");
    c.end(out);

    c.begin("calibration_extended_unique");
    CalibrationResult ext = calibrate(extended_conventions(), 13);
    c.expect(ext.distinct_matching_predicates == 1, str(static_cast<std::int64_t>(ext.distinct_matching_predicates)) + " distinct matching predicates");
    c.end(out);

    c.begin("b_symmetry");
    for (int n = 0; n <= 14; ++n)
        for (int p = 0; p <= n; ++p) {
            Rational a = nilpotent_support_count(SymmetricPair::bdi(p, n - p));
            Rational b = nilpotent_support_count(SymmetricPair::bdi(n - p, p));
            c.expect(a == b, "b(" + str(p) + "," + str(n - p) + ") = " + str(a) + " vs " + str(b));
        }
    c.end(out);

    c.begin("b_C_product");
    {
        Series rc = expand(gf::richardson_c(), 20);
        for (int n = 0; n <= 20; ++n) {
            Rational b = nilpotent_support_count(SymmetricPair::ci(n));
            c.expect(b == rc.coefficient(n), "b_C(" + str(n) + ") = " + str(b) + " vs " + str(rc.coefficient(n)));
        }
    }
    c.end(out);
}

std::int64_t factorial(int n)
{
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

std::int64_t order_b(int n)
{
    return (std::int64_t{1} << n) * factorial(n);
}

std::int64_t order_d(int n)
{
    return n == 0 ? 1 : order_b(n) / 2;
}

struct ExpectedOrders {
    std::int64_t stabilizer;
    std::int64_t w0;
};

ExpectedOrders expected_orders(const SymmetricPair& pair, int m)
{
    int r = weyl_rank(pair);
    if (pair.type == PairType::CI)
        return {order_b(m) * order_b(r - m), order_d(m) * order_b(r - m)};
    if (pair.p == pair.q) {
        if (m == 0 || m == r)
            return {order_d(r), order_d(r)};
        return {order_b(m) * order_b(r - m) / 2, order_d(m) * order_d(r - m)};
    }
    return {order_b(m) * order_b(r - m), order_b(m) * order_b(r - m)};
}

void weyl(std::vector<CheckResult>& out, const RunConfig& cfg)
{
    Collector c("weyl");
    std::vector<SymmetricPair> pairs;
    for (int n = 1; n <= std::min(6, cfg.weyl_rank_bound); ++n)
        pairs.push_back(SymmetricPair::ci(n));
    for (int q = 1; q <= std::min(5, cfg.weyl_rank_bound); ++q)
        pairs.push_back(SymmetricPair::bdi(q + 1, q));
    for (int n = 1; n <= std::min(6, cfg.weyl_rank_bound); ++n)
        pairs.push_back(SymmetricPair::bdi(n, n));
    for (int q = 1; q <= std::min(5, cfg.weyl_rank_bound); ++q)
        for (int gap = 2; gap <= 3; ++gap)
            pairs.push_back(SymmetricPair::bdi(q + gap, q));

    c.begin("stabilizer_orders");
    for (const auto& pair : pairs)
        for (const ICharacter& chi : character_orbit_reps(pair)) {
            int m = static_cast<int>(std::count(chi.begin(), chi.end(), 1));
            StabilizerReport s = stabilizer(pair, chi, cfg.weyl_rank_bound);
            ExpectedOrders e = expected_orders(pair, m);
            c.expect(s.stabilizer_order == e.stabilizer && s.w0_order == e.w0,
                     to_string(pair) + " chi_" + str(m) + ": " + str(s.stabilizer_order) + "/" + str(s.w0_order) + " expected " + str(e.stabilizer) + "/" + str(e.w0));
        }
    c.end(out);

    c.begin("quotient_elementary_2");
    std::vector<SymmetricPair> all = pairs;
    for (int q = 1; q <= std::min(4, cfg.weyl_rank_bound); ++q) {
        all.push_back(SymmetricPair::sl(q, q));
        all.push_back(SymmetricPair::pgl(q, q));
    }
    for (const auto& pair : all)
        for (const ICharacter& chi : character_orbit_reps(pair)) {
            StabilizerReport s = stabilizer(pair, chi, cfg.weyl_rank_bound);
            bool ok = s.w0_contained && s.w0_normal && s.quotient_elementary2 && std::all_of(s.quotient.begin(), s.quotient.end(), [](int f) { return f == 2; });
            c.expect(ok, to_string(pair) + ": quotient is not an elementary 2-group");
        }
    c.end(out);

    c.begin("character_orbit_counts");
    for (const auto& pair : pairs) {
        int expected = weyl_rank(pair) + 1;
        int got = character_orbit_count(pair, cfg.weyl_rank_bound);
        c.expect(got == expected && static_cast<int>(character_orbit_reps(pair).size()) == expected, to_string(pair) + ": " + str(got) + " orbits, expected " + str(expected));
    }
    c.end(out);

    c.begin("ci2_spot");
    StabilizerReport spot = stabilizer(SymmetricPair::ci(2), {1, 0}, cfg.weyl_rank_bound);
    c.expect(spot.stabilizer_order == 4 && spot.w0_order == 2, "orders " + str(spot.stabilizer_order) + "/" + str(spot.w0_order));
    c.end(out);
}

void atlas(std::vector<CheckResult>& out, const RunConfig& cfg)
{
    Collector c("atlas");
    int bound = cfg.atlas_rank_bound;
    int k_bound = std::min(10, bound);
    c.begin("k_shape_bijections");
    for (int n = 0; n <= k_bound; ++n) {
        std::vector<SymmetricPair> pairs = {SymmetricPair::diii(n)};
        for (int p = 0; p <= n; ++p) {
            pairs.push_back(SymmetricPair::pgl(p, n - p));
            pairs.push_back(SymmetricPair::gl(p, n - p));
        }
        if (n % 2 == 0)
            for (int p = 0; p <= n / 2; ++p)
                pairs.push_back(SymmetricPair::cii(p, n / 2 - p));
        for (const auto& pair : pairs) {
            BijectionReport b = verify_bijection(pair);
            c.expect(b.ok(), to_string(pair) + ": " + str(b.domain) + " orbital data, " + str(b.codomain) + " labels");
        }
    }
    c.end(out);

    c.begin("sl_bijections");
    for (int n = 1; n <= bound; ++n)
        for (int p = 0; p <= n; ++p) {
            BijectionReport b = verify_bijection(SymmetricPair::sl(p, n - p));
            c.expect(b.ok(), to_string(b.pair) + ": " + str(b.domain) + " orbital data, " + str(b.codomain) + " labels");
        }
    c.end(out);

    c.begin("label_counts");
    for (int n = 0; n <= bound; ++n)
        for (int p = 0; p <= n; ++p)
            for (const auto& pair : {SymmetricPair::sl(p, n - p), SymmetricPair::pgl(p, n - p), SymmetricPair::gl(p, n - p), SymmetricPair::bdi(p, n - p)}) {
                if (n == 0 && pair.type == PairType::AIII_SL)
                    continue;
                CountReport r = verify_counts(pair);
                c.expect(r.ok, to_string(pair) + ": orbital " + str(r.orbital) + ", labels " + str(r.labels));
            }
    c.end(out);

    c.begin("cuspidal_tally");
    for (int p = 1; 2 * p + 1 <= bound; ++p) {
        SymmetricPair pair = SymmetricPair::sl(p, p + 1);
        std::int64_t regular = 0;
        int len = 2 * p + 1;
        for (const auto& l : enumerate_char_labels(pair))
            if (l.kind == LocalSystemKind::NilpotentE && l.support.mu.diagram.rows().size() == 1 && l.support.mu.diagram.rows()[0].length == len)
                regular += l.order == len;
        std::int64_t phi = 0;
        for (int i = 1; i <= len; ++i)
            phi += std::gcd(i, len) == 1;
        c.expect(regular == phi, to_string(pair) + ": " + str(regular) + " primitive labels on the regular orbit, expected " + str(phi));
    }
    c.end(out);

    c.begin("spot_values");
    c.expect(char_count(SymmetricPair::sl(1, 1)) == 5, "SL:1,1 labels " + str(char_count(SymmetricPair::sl(1, 1))));
    c.expect(char_count(SymmetricPair::pgl(1, 1)) == 3, "PGL:1,1 labels " + str(char_count(SymmetricPair::pgl(1, 1))));
    c.expect(char_count(SymmetricPair::ci(1)) == 5, "CI:1 labels " + str(char_count(SymmetricPair::ci(1))));
    c.end(out);
}

} // namespace

std::vector<CheckResult> run_suite(const std::string& name, const RunConfig& config)
{
    config.validate();
    std::vector<CheckResult> out;
    bool all = name == "all";
    if (!all && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    if (all || name == "appendixC")
        appendix_c(out, config);
    if (all || name == "counting")
        counting(out, config);
    if (all || name == "weyl")
        weyl(out, config);
    if (all || name == "richardson")
        richardson(out);
    if (all || name == "atlas")
        atlas(out, config);
    return out;
}

} // namespace sydlab
