#include <sydlab/identities.hpp>

#include <functional>
#include <map>
#include <stdexcept>

#include <sydlab/generating.hpp>
#include <sydlab/invariants.hpp>
#include <sydlab/orbits.hpp>
#include <sydlab/series.hpp>

namespace sydlab {

const std::vector<std::string>& identity_names()
{
    static const std::vector<std::string> names = {
        "C2_wt_product",
        "C3_diagonal",
        "C2b_bn",
        "C2b_cn",
        "Fodd",
        "Feven",
        "qGauss_at_CI_specialization",
        "psi1_specializations",
        "hecke_CI_count",
        "partition_identity_1",
    };
    return names;
}

int default_order(const std::string& name)
{
    static const std::map<std::string, int> orders = {
        {"C2_wt_product", 14},
        {"C3_diagonal", 24},
        {"C2b_bn", 25},
        {"C2b_cn", 24},
        {"Fodd", 60},
        {"Feven", 60},
        {"qGauss_at_CI_specialization", 60},
        {"psi1_specializations", 60},
        {"hecke_CI_count", 12},
        {"partition_identity_1", 40},
    };
    auto it = orders.find(name);
    if (it == orders.end())
        throw std::invalid_argument("unknown identity '" + name + "'");
    return it->second;
}

std::int64_t wt_by_enumeration(int p, int q)
{
    std::int64_t total = 0;
    for (const OrbitLabel& l : enumerate_syd(SymmetricPair::bdi(p, q))) {
        if (l.decoration == Decoration::II)
            continue;
        const auto& d = l.diagram;
        total += d.all_lengths_even() ? 1 : (std::int64_t{2} << r_orthogonal(d));
    }
    return total;
}

std::int64_t wt_odd_partition(const Partition& lambda)
{
    std::vector<int> mu;
    for (int part : lambda) {
        if (part % 2 == 0)
            throw std::invalid_argument("wt needs a partition into odd parts");
        mu.push_back((part - 1) / 2);
    }
    int s = static_cast<int>(mu.size());
    int n = size(lambda);
    // 1-based pairs (2j-1, 2j) for n odd, (2j, 2j+1) for n even.
    int offset = n % 2 == 1 ? 0 : 1;
    int pairs = n % 2 == 1 ? (s - 1) / 2 : s / 2 - 1;
    std::int64_t w = 1;
    for (int j = 1; j <= pairs; ++j) {
        int a = mu[2 * j - 2 + offset];
        int b = mu[2 * j - 1 + offset];
        if (a == b + 1)
            w *= 3;
        else if (a >= b + 2)
            w *= 4;
    }
    return w;
}

namespace {

Rational odd_partition_sum(int total)
{
    Rational sum = 0;
    for (const Partition& lam : enumerate_partitions(total)) {
        bool odd = true;
        for (int part : lam)
            odd = odd && part % 2 == 1;
        if (odd)
            sum += static_cast<long>(wt_odd_partition(lam));
    }
    return sum;
}

} // namespace

Rational b_n_by_partitions(int n)
{
    return odd_partition_sum(2 * n + 1);
}

Rational c_n_by_partitions(int n)
{
    if (n == 0)
        return rational(1, 4);
    return odd_partition_sum(2 * n);
}

namespace {

struct Check {
    IdentityReport report;

    bool compare(const std::string& where, const Rational& lhs, const Rational& rhs)
    {
        if (lhs == rhs)
            return true;
        if (!report.first_mismatch)
            report.first_mismatch = Mismatch{where, to_string(lhs), to_string(rhs)};
        report.holds = false;
        return false;
    }

    void series(const std::string& prefix, const Series& lhs, const Series& rhs, int from = 0)
    {
        int n = std::min(lhs.order(), rhs.order());
        for (int i = from; i <= n; ++i)
            if (!compare(prefix + "x^" + std::to_string(i), lhs.coefficient(i), rhs.coefficient(i)))
                return;
    }
};

void check_order(int order)
{
    if (order < 1)
        throw std::invalid_argument("identity order must be at least 1");
}

void wt_product(Check& c, int degree)
{
    Series2 f = expand2(gf::wt_bivariate(), degree, degree);
    for (int total = 0; total <= degree; ++total)
        for (int p = total; p >= 0; --p) {
            int q = total - p;
            if (!c.compare("u^" + std::to_string(p) + " v^" + std::to_string(q), Rational(static_cast<long>(wt_by_enumeration(p, q))), f.coefficient(p, q)))
                return;
        }
}

void diagonal(Check& c, int t_order)
{
    int order = t_order / 2;
    for (int k = 0; k <= 4; ++k) {
        Series rhs = expand(gf::wt_diagonal(k), order);
        Series lhs(order);
        for (int p = 0; p <= order; ++p)
            lhs.at(p) = static_cast<long>(wt_by_enumeration(p + k, p));
        c.series("k=" + std::to_string(k) + ": ", lhs, rhs);
    }
}

void bn(Check& c, int order)
{
    // q (-q^4;q^4)^2 (-q^2;q^2)^2
    ProductSpec spec;
    spec.times(pochhammer(-1, 4, 4, 2)).times(pochhammer(-1, 2, 2, 2)).scaled(1, 1);
    Series rhs = expand(spec, order);
    for (int n = 0; 2 * n + 1 <= order; ++n)
        if (!c.compare("x^" + std::to_string(2 * n + 1), b_n_by_partitions(n), rhs.coefficient(2 * n + 1)))
            return;
}

void cn(Check& c, int order)
{
    // 1/4 (-q^2;q^4)^2 (-q^2;q^2)^2
    ProductSpec spec;
    spec.times(pochhammer(-1, 2, 4, 2)).times(pochhammer(-1, 2, 2, 2)).scaled(rational(1, 4));
    Series rhs = expand(spec, order);
    for (int n = 0; 2 * n <= order; ++n)
        if (!c.compare("x^" + std::to_string(2 * n), c_n_by_partitions(n), rhs.coefficient(2 * n)))
            return;
}

void f_sides(Check& c, int order, bool odd)
{
    Series f = expand(gf::f_odd_parts(), order);
    Series g = f.substitute(-1, 1);
    Series lhs = odd ? f - g : f + g;
    Series rhs = expand(odd ? gf::f_odd_side() : gf::f_even_side(), order);
    c.series("", lhs, rhs);
}

void q_gauss(Check& c, int order)
{
    // Q = q^4, a = b = -q^2, c = q^6: sum (a;Q)_m (b;Q)_m / ((Q;Q)_m (c;Q)_m) q^{2m}.
    {
        Series lhs(order);
        for (int m = 0; 2 * m <= order; ++m) {
            ProductSpec term;
            term.times(pochhammer(-1, 2, 4, 2, m)).times(pochhammer(1, 4, 4, -1, m)).times(pochhammer(1, 6, 4, -1, m)).scaled(1, 2 * m);
            lhs += expand(term, order);
        }
        ProductSpec rhs;
        rhs.times(pochhammer(-1, 4, 4, 2)).times(pochhammer(1, 6, 4, -1)).times(pochhammer(1, 2, 4, -1));
        c.series("a=b=-q^2,c=q^6: ", lhs, expand(rhs, order));
    }
    // Q = q^4, a = b = -1, c = q^2.
    {
        Series lhs(order);
        for (int m = 0; 2 * m <= order; ++m) {
            ProductSpec term;
            term.times(pochhammer(-1, 0, 4, 2, m)).times(pochhammer(1, 4, 4, -1, m)).times(pochhammer(1, 2, 4, -1, m)).scaled(1, 2 * m);
            lhs += expand(term, order);
        }
        ProductSpec rhs;
        rhs.times(pochhammer(-1, 2, 4, 2)).times(pochhammer(1, 2, 4, -2));
        c.series("a=b=-1,c=q^2: ", lhs, expand(rhs, order));
    }
}

// sum over k in Z with the given parity of q^k/(1+q^{2k}); the summand is
// invariant under k -> -k.
Series bilateral(int order, int parity)
{
    Series s(order);
    if (parity != 1)
        s.at(0) += rational(1, 2);
    for (int k = 1; k <= order; ++k) {
        if (parity >= 0 && k % 2 != parity)
            continue;
        for (int j = 0; k * (2 * j + 1) <= order; ++j)
            s.at(k * (2 * j + 1)) += (j % 2 == 0 ? 2 : -2);
    }
    return s;
}

void psi1(Check& c, int order)
{
    {
        ProductSpec rhs;
        rhs.times(pochhammer(-1, 4, 4, 2)).times(pochhammer(1, 4, 4, 2)).times(pochhammer(1, 2, 4, -2)).times(pochhammer(-1, 2, 4, -2)).scaled(2, 1);
        c.series("odd k: ", bilateral(order, 1), expand(rhs, order));
    }
    {
        ProductSpec rhs;
        rhs.times(pochhammer(-1, 2, 4, 2)).times(pochhammer(1, 4, 4, 2)).times(pochhammer(1, 2, 4, -2)).times(pochhammer(-1, 4, 4, -2)).scaled(rational(1, 2));
        c.series("even k: ", bilateral(order, 0), expand(rhs, order));
    }
    {
        ProductSpec rhs = gf::f_odd_parts();
        rhs.times(pochhammer(1, 2, 2, 2)).times(pochhammer(-1, 2, 2, -2)).scaled(rational(1, 2));
        c.series("all k: ", bilateral(order, -1), expand(rhs, order));
    }
}

void hecke_ci(Check& c, int order)
{
    Series rhs = expand(gf::orbital_c(), order);
    for (int n = 0; n <= order; ++n) {
        Rational lhs = static_cast<long>(orbital_complex_count(SymmetricPair::ci(n)));
        if (!c.compare("x^" + std::to_string(n), lhs, rhs.coefficient(n)))
            return;
    }
}

void partition_identity(Check& c, int order)
{
    Series rhs = expand(gf::richardson_c(), order);
    for (int n = 0; n <= order; ++n) {
        Rational lhs = 0;
        for (int k = 0; k <= n; ++k)
            lhs += Rational(static_cast<long>(p_distinct_sizes(n, k))) * Rational(static_cast<long>(std::int64_t{1} << k));
        if (!c.compare("x^" + std::to_string(n), lhs, rhs.coefficient(n)))
            return;
    }
}

} // namespace

IdentityReport verify_identity(const std::string& name, std::optional<int> order)
{
    int ord = order ? *order : default_order(name);
    check_order(ord);
    Check c;
    c.report.identity = name;
    c.report.order = ord;
    c.report.holds = true;
    if (name == "C2_wt_product")
        wt_product(c, ord);
    else if (name == "C3_diagonal")
        diagonal(c, ord);
    else if (name == "C2b_bn")
        bn(c, ord);
    else if (name == "C2b_cn")
        cn(c, ord);
    else if (name == "Fodd")
        f_sides(c, ord, true);
    else if (name == "Feven")
        f_sides(c, ord, false);
    else if (name == "qGauss_at_CI_specialization")
        q_gauss(c, ord);
    else if (name == "psi1_specializations")
        psi1(c, ord);
    else if (name == "hecke_CI_count")
        hecke_ci(c, ord);
    else if (name == "partition_identity_1")
        partition_identity(c, ord);
    else
        throw std::invalid_argument("unknown identity '" + name + "'");
    return c.report;
}

} // namespace sydlab
