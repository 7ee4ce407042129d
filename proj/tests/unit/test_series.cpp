#include <catch_amalgamated.hpp>

#include <stdexcept>

#include <sydlab/generating.hpp>
#include <sydlab/hecke.hpp>
#include <sydlab/identities.hpp>
#include <sydlab/series.hpp>

#include "oracles.hpp"

using namespace sydlab;

TEST_CASE("series arithmetic", "[series]")
{
    Series a = Series::from_coefficients({1, 1, 0, 0});
    Series b = a.inverse();
    CHECK(b.coefficients() == std::vector<Rational>{1, -1, 1, -1});
    CHECK(a * b == Series::one(3));
    CHECK((a + a).coefficient(1) == 2);
    CHECK((a - a) == Series(3));
    CHECK((a * rational(1, 2)).coefficient(0) == rational(1, 2));
    CHECK(a.substitute(-1, 2).coefficients() == std::vector<Rational>{1, 0, -1, 0});
    CHECK(a.truncated(1).order() == 1);
    CHECK_THROWS_AS(a.coefficient(4), std::out_of_range);
}

TEST_CASE("division by a non-unit", "[series]")
{
    Series x = Series::monomial(4, 1);
    try {
        (void)x.inverse();
        FAIL("no throw");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()) == "division by non-unit");
    }
    ProductSpec bad;
    bad.times(pochhammer(1, 0, 1, -1, 1));
    CHECK_THROWS_AS(expand(bad, 4), std::domain_error);
}

TEST_CASE("expansion of the Hecke products", "[series]")
{
    Series d = expand(gf::hecke_d(), 4);
    CHECK(d.coefficients() == std::vector<Rational>{1, 1, 2, 3, 4});
    Series e = expand(gf::hecke_e(), 3);
    CHECK(e.coefficients() == std::vector<Rational>{1, 2, 2, 4});
    CHECK(expand(ProductSpec{}, 5) == Series::one(5));
}

TEST_CASE("Hecke counts against the distinct-part oracle", "[series]")
{
    for (int k = 0; k <= 18; ++k) {
        CHECK(hecke_d(k) == oracle::hecke_d(k));
        CHECK(hecke_e(k) == oracle::hecke_e(k));
    }
    for (int k = 1; k <= 60; ++k)
        CHECK(hecke_e(k) % 2 == 0);
}

TEST_CASE("partition product against the oracle", "[series]")
{
    Series p = expand(gf::partitions(), 20);
    for (int n = 0; n <= 20; ++n)
        CHECK(p.coefficient(n) == oracle::partition_count(n));
}

TEST_CASE("bivariate expansion is symmetric", "[series]")
{
    Series2 w = expand2(gf::wt_bivariate(), 6, 6);
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j)
            CHECK(w.coefficient(i, j) == w.coefficient(j, i));
    CHECK(w.coefficient(0, 0) == 1);
}

TEST_CASE("orbit weight enumeration", "[series]")
{
    CHECK(wt_by_enumeration(2, 1) == 6);
    CHECK(wt_by_enumeration(0, 0) == 1);
    Series2 w = expand2(gf::wt_bivariate(), 6, 6);
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; p + q <= 6; ++q)
            CHECK(w.coefficient(p, q) == wt_by_enumeration(p, q));
}

TEST_CASE("identity registry", "[series]")
{
    for (const auto& name : identity_names()) {
        INFO(name);
        int order = std::min(default_order(name), 10);
        auto rep = verify_identity(name, order);
        CHECK(rep.holds);
        CHECK_FALSE(rep.first_mismatch.has_value());
    }
    CHECK_THROWS_AS(default_order("nope"), std::invalid_argument);
    CHECK(c_n_by_partitions(0) == rational(1, 4));
}

TEST_CASE("mismatch location", "[series]")
{
    Series a = Series::from_coefficients({1, 2, 3});
    Series b = Series::from_coefficients({1, 2, 4, 5});
    CHECK(first_mismatch(a, b) == 2);
    CHECK_FALSE(first_mismatch(a, a).has_value());
}
