#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include <sydlab/atlas.hpp>
#include <sydlab/generating.hpp>
#include <sydlab/hecke.hpp>
#include <sydlab/identities.hpp>
#include <sydlab/invariants.hpp>
#include <sydlab/orbits.hpp>
#include <sydlab/richardson.hpp>
#include <sydlab/series.hpp>
#include <sydlab/suites.hpp>
#include <sydlab/weyl.hpp>

#include "report.hpp"

using namespace sydlab;
using cli::Report;
using nlohmann::ordered_json;

namespace {

// Exit status for a run whose checks did not all hold.
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
    RunConfig config;
    std::string format = "text";
    std::string pair;
    // orbits / richardson / weyl / atlas
    bool calibrate = false;
    std::string family = "extended";
    int max_n = 13;
    std::string what = "all";
    int max_rank = 0;
    std::optional<int> chi;
    bool list = false;
    bool verify = false;
    std::string suite = "all";
    std::string identity;
    std::string product;
    std::optional<int> order;
};

std::string str(const Rational& r)
{
    return to_string(r);
}

std::string str(std::int64_t v)
{
    return std::to_string(v);
}

std::string bool_str(bool b)
{
    return b ? "true" : "false";
}

SymmetricPair require_pair(const Options& o)
{
    if (o.pair.empty())
        throw std::invalid_argument("--pair is required");
    SymmetricPair p = parse_pair(o.pair);
    validate(p);
    return p;
}

std::string bits(const std::vector<int>& v)
{
    std::string s;
    for (int b : v)
        s += b ? '1' : '0';
    return s.empty() ? "-" : s;
}

int run_orbits(const Options& o, Report& r)
{
    SymmetricPair pair = require_pair(o);
    auto labels = enumerate_syd(pair);
    r.json["pair"] = to_string(pair);
    r.json["count"] = labels.size();
    r.json["orbits"] = ordered_json::array();
    r.table.header = {"label", "componentGroup", "characters", "richardson"};
    for (const auto& l : labels) {
        ComponentGroup g = component_group(pair, l);
        bool rich = is_richardson(pair, l);
        ordered_json item;
        item["label"] = to_text(l);
        item["componentGroup"] = to_string(g);
        item["characters"] = g.character_count();
        item["richardson"] = rich;
        r.json["orbits"].push_back(item);
        r.table.rows.push_back({to_text(l), to_string(g), str(g.character_count()), bool_str(rich)});
    }
    return 0;
}

int run_richardson(const Options& o, Report& r)
{
    if (o.calibrate) {
        if (o.family != "literal" && o.family != "extended")
            throw std::invalid_argument("--family must be literal or extended");
        CalibrationResult c = calibrate(o.family == "literal" ? literal_conventions() : extended_conventions(), o.max_n);
        r.json["family"] = o.family;
        r.json["maxN"] = c.max_n;
        r.json["tried"] = ordered_json::array();
        r.json["matching"] = ordered_json::array();
        r.table.header = {"convention", "matches"};
        for (const auto& conv : c.tried) {
            bool match = std::find(c.matching.begin(), c.matching.end(), conv) != c.matching.end();
            r.json["tried"].push_back(to_string(conv));
            if (match)
                r.json["matching"].push_back(to_string(conv));
            r.table.rows.push_back({to_string(conv), bool_str(match)});
        }
        r.json["distinctMatchingPredicates"] = c.distinct_matching_predicates;
        return 0;
    }
    SymmetricPair pair = require_pair(o);
    auto labels = richardson_orbits(pair);
    r.json["pair"] = to_string(pair);
    r.json["count"] = labels.size();
    r.json["nilpotentSupportCount"] = str(nilpotent_support_count(pair, CountMode::Enumeration));
    r.json["orbits"] = ordered_json::array();
    bool bdi = pair.type == PairType::BDI;
    r.table.header = {"label"};
    if (bdi)
        r.table.header.insert(r.table.header.end(), {"omega", "l", "piCardinality"});
    for (const auto& l : labels) {
        ordered_json item;
        item["label"] = to_text(l);
        std::vector<std::string> row = {to_text(l)};
        if (bdi) {
            OmegaData od = omega_data(l.diagram);
            item["omega"] = od.omega;
            item["l"] = od.l;
            item["piCardinality"] = od.pi_cardinality;
            std::string om;
            for (int w : od.omega)
                om += (om.empty() ? "" : " ") + std::to_string(w);
            row.insert(row.end(), {om.empty() ? "-" : om, str(od.l), str(od.pi_cardinality)});
        }
        r.json["orbits"].push_back(item);
        r.table.rows.push_back(row);
    }
    return 0;
}

int run_counts(const Options& o, Report& r)
{
    static const std::vector<std::string> whats = {"all", "orbital", "fullsupport", "nilpotent", "hecke"};
    if (std::find(whats.begin(), whats.end(), o.what) == whats.end())
        throw std::invalid_argument("--what must be one of all, orbital, fullsupport, nilpotent, hecke");
    if (o.what == "hecke") {
        int max_rank = o.max_rank > 0 ? o.max_rank : o.config.atlas_rank_bound;
        r.json["maxRank"] = max_rank;
        r.json["rows"] = ordered_json::array();
        r.table.header = {"k", "partitions", "bipartitions", "d", "e", "typeD"};
        for (int k = 0; k <= max_rank; ++k) {
            std::vector<std::string> row = {str(k), str(partition_count(k)), str(bipartition_count(k)), str(hecke_d(k)), str(hecke_e(k)), str(hecke_count({HeckeKind::D_neg1, k}))};
            ordered_json item;
            for (std::size_t i = 0; i < row.size(); ++i)
                item[r.table.header[i]] = row[i];
            r.json["rows"].push_back(item);
            r.table.rows.push_back(row);
        }
        return 0;
    }
    SymmetricPair pair = require_pair(o);
    r.json["pair"] = to_string(pair);
    r.table.header = {"quantity", "enumeration", "formula"};
    auto add = [&](const std::string& name, const std::string& e, const std::string& f) {
        r.json[name] = {{"enumeration", e}, {"formula", f}};
        r.table.rows.push_back({name, e, f});
    };
    if (o.what == "all" || o.what == "orbital")
        add("orbital", str(orbital_complex_count(pair, CountMode::Enumeration)), str(orbital_complex_count(pair, CountMode::Formula)));
    if (o.what == "all" || o.what == "fullsupport")
        add("fullsupport", str(full_support_count(pair, CountMode::Enumeration)), str(full_support_count(pair, CountMode::Formula)));
    if (o.what == "all" || o.what == "nilpotent")
        add("nilpotent", str(nilpotent_support_count(pair, CountMode::Enumeration)), str(nilpotent_support_count(pair, CountMode::Formula)));
    return 0;
}

ordered_json stabilizer_json(const SymmetricPair& pair, const ICharacter& chi, int bound, std::vector<std::string>& row)
{
    StabilizerReport s = stabilizer(pair, chi, bound);
    int m = static_cast<int>(std::count(chi.begin(), chi.end(), 1));
    ordered_json j;
    j["chi"] = m;
    j["stabilizerOrder"] = s.stabilizer_order;
    j["w0Order"] = s.w0_order;
    j["quotient"] = s.quotient;
    j["stabilizerReflections"] = s.stabilizer_reflections;
    j["w0Reflections"] = s.w0_reflections;
    j["quotientElementary2"] = s.w0_contained && s.w0_normal && s.quotient_elementary2;
    std::string q;
    for (int f : s.quotient)
        q += (q.empty() ? "" : "x") + std::string("Z/") + std::to_string(f);
    row = {str(m), str(s.stabilizer_order), str(s.w0_order), q.empty() ? "1" : q, str(s.stabilizer_reflections), str(s.w0_reflections)};
    return j;
}

int run_weyl(const Options& o, Report& r)
{
    SymmetricPair pair = require_pair(o);
    int bound = o.config.weyl_rank_bound;
    RestrictedRootDatum d = restricted_root_datum(pair);
    IGroup ig = i_group(pair);
    auto reps = character_orbit_reps(pair);
    r.table.header = {"chi", "stabilizerOrder", "w0Order", "quotient", "stabilizerReflections", "w0Reflections"};
    if (o.chi) {
        if (*o.chi < 0 || *o.chi >= static_cast<int>(reps.size()))
            throw std::invalid_argument("--chi must lie in 0.." + std::to_string(reps.size() - 1));
        std::vector<std::string> row;
        r.json = stabilizer_json(pair, reps[*o.chi], bound, row);
        r.json["pair"] = to_string(pair);
        r.table.rows.push_back(row);
        return 0;
    }
    r.json["pair"] = to_string(pair);
    r.json["rootSystem"] = d.type;
    r.json["rank"] = d.rank;
    ordered_json roots = ordered_json::array();
    std::map<std::string, int> mults;
    for (const auto& root : d.roots) {
        int len2 = 0;
        for (int x : root.coords)
            len2 += x * x;
        std::string kind = len2 == 2 ? "e_i+-e_j" : len2 == 1 ? "e_i" : "2e_i";
        mults[kind] = root.multiplicity;
    }
    for (const auto& [kind, mult] : mults)
        roots.push_back({{"root", kind}, {"multiplicity", mult}});
    r.json["multiplicities"] = roots;
    r.json["iRank"] = ig.rank;
    r.json["i0Rank"] = ig.rank0;
    r.json["iotaNontrivial"] = ig.iota_nontrivial;
    r.json["iota"] = bits(ig.iota);
    r.json["weylOrder"] = little_weyl_group(pair, bound).size();
    r.json["characterOrbits"] = character_orbit_count(pair, bound);
    r.json["characters"] = ordered_json::array();
    for (const auto& chi : reps) {
        std::vector<std::string> row;
        r.json["characters"].push_back(stabilizer_json(pair, chi, bound, row));
        r.table.rows.push_back(row);
    }
    return 0;
}

ordered_json label_json(const CharSheafLabel& l)
{
    ordered_json j;
    j["support"] = to_text(l.support);
    j["supportOrbit"] = to_text(l.support.orbit());
    j["kind"] = kind_name(l.kind);
    j["label"] = to_text(l);
    return j;
}

std::vector<SymmetricPair> atlas_pairs(int max_rank)
{
    std::vector<SymmetricPair> out;
    for (int n = 0; n <= max_rank; ++n) {
        for (int p = 0; p <= n; ++p) {
            if (n > 0)
                out.push_back(SymmetricPair::sl(p, n - p));
            out.push_back(SymmetricPair::pgl(p, n - p));
            out.push_back(SymmetricPair::gl(p, n - p));
            out.push_back(SymmetricPair::bdi(p, n - p));
        }
        out.push_back(SymmetricPair::ci(n));
        out.push_back(SymmetricPair::diii(n));
        if (n % 2 == 0)
            for (int p = 0; p <= n / 2; ++p)
                out.push_back(SymmetricPair::cii(p, n / 2 - p));
    }
    return out;
}

int run_atlas(const Options& o, Report& r)
{
    if (o.verify == o.list)
        throw std::invalid_argument("atlas needs exactly one of --list or --verify");
    if (o.list) {
        SymmetricPair pair = require_pair(o);
        auto labels = enumerate_char_labels(pair);
        r.json["pair"] = to_string(pair);
        r.json["count"] = labels.size();
        r.json["labels"] = ordered_json::array();
        r.table.header = {"label"};
        for (const auto& l : labels) {
            r.json["labels"].push_back(label_json(l));
            r.table.rows.push_back({to_text(l)});
        }
        return 0;
    }
    int max_rank = o.max_rank > 0 ? o.max_rank : o.config.atlas_rank_bound;
    r.table.header = {"pair", "|A|", "|Char|", "formulaValue", "ok"};
    r.json["maxRank"] = max_rank;
    r.json["rows"] = ordered_json::array();
    bool all_ok = true;
    for (const auto& pair : atlas_pairs(max_rank)) {
        CountReport c = verify_counts(pair);
        bool ok = c.ok;
        bool explicit_map = pair.type != PairType::BDI && pair.type != PairType::CI;
        if (explicit_map)
            ok = ok && verify_bijection(pair).ok();
        all_ok = all_ok && ok;
        std::vector<std::string> row = {to_string(pair), str(c.orbital), str(c.labels), str(c.formula), bool_str(ok)};
        r.json["rows"].push_back({{"pair", row[0]}, {"|A|", c.orbital}, {"|Char|", c.labels}, {"formulaValue", row[3]}, {"ok", ok}});
        r.table.rows.push_back(row);
    }
    r.json["ok"] = all_ok;
    return all_ok ? 0 : kCheckFailed;
}

int run_verify(const Options& o, Report& r)
{
    auto results = run_suite(o.suite, o.config);
    r.table.header = {"suite", "check", "status", "detail"};
    r.json["suite"] = o.suite;
    r.json["checks"] = ordered_json::array();
    int failed = 0;
    for (const auto& c : results) {
        failed += !c.passed;
        std::string status = c.passed ? "PASS" : "FAIL";
        r.json["checks"].push_back({{"suite", c.suite}, {"check", c.check}, {"status", status}, {"detail", c.detail}});
        r.table.rows.push_back({c.suite, c.check, status, c.detail});
        if (!c.passed)
            std::cerr << "failed: " << c.suite << "/" << c.check << ": " << c.detail << '\n';
    }
    r.json["passed"] = static_cast<int>(results.size()) - failed;
    r.json["failed"] = failed;
    return failed == 0 ? 0 : kCheckFailed;
}

const std::map<std::string, std::function<ProductSpec()>>& products()
{
    static const std::map<std::string, std::function<ProductSpec()>> table = {
        {"hecke_d", gf::hecke_d},
        {"hecke_e", gf::hecke_e},
        {"richardson_c", gf::richardson_c},
        {"orbital_c", gf::orbital_c},
        {"full_support_b", gf::full_support_b},
        {"full_support_d", gf::full_support_d},
        {"biorbital_b", gf::biorbital_b},
        {"biorbital_d", gf::biorbital_d},
        {"partitions", gf::partitions},
        {"f_odd_parts", gf::f_odd_parts},
    };
    return table;
}

int run_series(const Options& o, Report& r)
{
    if (!o.product.empty()) {
        auto it = products().find(o.product);
        if (it == products().end())
            throw std::invalid_argument("unknown product '" + o.product + "'");
        int order = o.order.value_or(o.config.truncation_order1);
        if (order < 0)
            throw std::invalid_argument("--order must be nonnegative");
        Series s = expand(it->second(), order);
        r.json["product"] = o.product;
        r.json["order"] = order;
        r.json["coefficients"] = ordered_json::array();
        r.table.header = {"exponent", "coefficient"};
        for (int i = 0; i <= order; ++i) {
            r.json["coefficients"].push_back(str(s.coefficient(i)));
            r.table.rows.push_back({str(i), str(s.coefficient(i))});
        }
        return 0;
    }
    std::vector<std::string> names = identity_names();
    if (!o.identity.empty())
        names = {o.identity};
    r.table.header = {"identity", "order", "holds", "firstMismatch"};
    r.json["identities"] = ordered_json::array();
    bool all = true;
    for (const auto& name : names) {
        IdentityReport rep = verify_identity(name, o.identity.empty() ? std::nullopt : o.order);
        all = all && rep.holds;
        std::string mismatch;
        ordered_json item{{"identity", rep.identity}, {"order", rep.order}, {"holds", rep.holds}};
        if (rep.first_mismatch) {
            mismatch = rep.first_mismatch->where + ": " + rep.first_mismatch->lhs + " != " + rep.first_mismatch->rhs;
            item["firstMismatch"] = {{"where", rep.first_mismatch->where}, {"lhs", rep.first_mismatch->lhs}, {"rhs", rep.first_mismatch->rhs}};
            std::cerr << "failed: " << name << " at " << mismatch << '\n';
        } else {
            item["firstMismatch"] = nullptr;
        }
        r.json["identities"].push_back(item);
        r.table.rows.push_back({rep.identity, str(rep.order), bool_str(rep.holds), mismatch});
    }
    return all ? 0 : kCheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Signed Young diagram, character sheaf and Weyl group enumeration"};
    app.require_subcommand(1);
    app.fallthrough();
    auto positive = CLI::Range(1, 1 << 20);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->envname("SYDLAB_OUTPUT_FORMAT");
    app.add_option("--truncation-order1", o.config.truncation_order1, "Truncation of series identities")->check(positive)->envname("SYDLAB_TRUNCATION_ORDER1");
    app.add_option("--truncation-order2", o.config.truncation_order2, "Total degree of the bivariate orbit product")->check(positive)->envname("SYDLAB_TRUNCATION_ORDER2");
    app.add_option("--weyl-rank-bound", o.config.weyl_rank_bound, "Largest rank for brute-force Weyl groups")->check(CLI::Range(1, 7))->envname("SYDLAB_WEYL_RANK_BOUND");
    app.add_option("--atlas-rank-bound", o.config.atlas_rank_bound, "Largest rank for atlas sweeps")->check(positive)->envname("SYDLAB_ATLAS_RANK_BOUND");

    auto* orbits = app.add_subcommand("orbits", "List orbit labels of a pair");
    orbits->add_option("--pair", o.pair, "TYPE:p,q or TYPE:n")->required();

    auto* rich = app.add_subcommand("richardson", "Richardson orbits, or the sign-convention calibration");
    rich->add_option("--pair", o.pair, "TYPE:p,q or TYPE:n");
    rich->add_flag("--calibrate", o.calibrate, "Run the sign-convention search");
    rich->add_option("--family", o.family, "literal or extended")->check(CLI::IsMember({"literal", "extended"}));
    rich->add_option("--max-n", o.max_n, "Largest total rank tested")->check(positive);

    auto* counts = app.add_subcommand("counts", "Orbital, full-support, nilpotent-support and Hecke counts");
    counts->add_option("--pair", o.pair, "TYPE:p,q or TYPE:n");
    counts->add_option("--what", o.what, "all, orbital, fullsupport, nilpotent or hecke");
    counts->add_option("--max-rank", o.max_rank, "Largest rank for the Hecke table")->check(positive);

    auto* weyl = app.add_subcommand("weyl", "Restricted roots, the group I and character stabilizers");
    weyl->add_option("--pair", o.pair, "TYPE:p,q or TYPE:n")->required();
    weyl->add_option("--chi", o.chi, "Character representative chi_m");

    auto* atlas = app.add_subcommand("atlas", "Character-sheaf labels and count verification");
    atlas->add_option("--pair", o.pair, "TYPE:p,q or TYPE:n");
    atlas->add_flag("--list", o.list, "Dump the label set of --pair");
    atlas->add_flag("--verify", o.verify, "Verify counts and bijections up to --max-rank");
    atlas->add_option("--max-rank", o.max_rank, "Largest rank swept")->check(positive);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", o.suite, "appendixC, counting, weyl, richardson, atlas or all")->check(CLI::IsMember(suite_names()));

    auto* series = app.add_subcommand("series", "Check identities or expand a named product");
    series->add_option("--name", o.identity, "Identity name; all identities when omitted");
    series->add_option("--product", o.product, "Expand a named product instead");
    series->add_option("--order", o.order, "Truncation order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        o.config.validate();
        Report report;
        int status = 0;
        if (*orbits)
            status = run_orbits(o, report);
        else if (*rich)
            status = run_richardson(o, report);
        else if (*counts)
            status = run_counts(o, report);
        else if (*weyl)
            status = run_weyl(o, report);
        else if (*atlas)
            status = run_atlas(o, report);
        else if (*verify)
            status = run_verify(o, report);
        else if (*series)
            status = run_series(o, report);
        cli::emit(std::cout, report, cli::parse_format(o.format));
        return status;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kCheckFailed;
    }
}
