#include <catch_amalgamated.hpp>

#include <stdexcept>

#include <sydlab/orbits.hpp>
#include <sydlab/richardson.hpp>

using namespace sydlab;

TEST_CASE("Richardson orbits of small examples", "[richardson]")
{
    CHECK(is_richardson(SymmetricPair::bdi(3, 0), parse_label("1+ 1+ 1+")));
    CHECK_FALSE(is_richardson(SymmetricPair::ci(2), parse_label("2+ 2-")));
    CHECK_FALSE(is_richardson(SymmetricPair::sl(1, 1), parse_label("1+ 1-")));
    CHECK_THROWS_AS(is_richardson(SymmetricPair::bdi(2, 1), parse_label("1+ 1+")), std::invalid_argument);
}

TEST_CASE("omega data", "[richardson]")
{
    auto a = omega_data(parse_label("3+ 3+ 1+").diagram);
    CHECK(a.omega.empty());
    CHECK(a.l == 0);
    CHECK(a.pi_cardinality == 1);
    auto b = omega_data(parse_label("3+ 3+ 1+ 1+").diagram);
    CHECK(b.omega == std::vector<int>{1, 2});
    CHECK(b.l == 2);
    CHECK(b.pi_cardinality == 2);
    CHECK(omega_data(SignedYoungDiagram{}).pi_cardinality == 1);
}

TEST_CASE("Pi characters", "[richardson]")
{
    auto a = pi_characters(parse_label("3+ 3+ 1+").diagram);
    REQUIRE(a.size() == 1);
    for (int v : a[0])
        CHECK(v == 0);
    CHECK(pi_characters(parse_label("3+ 3+ 1+ 1+").diagram).size() == 2);
    auto single = pi_characters(parse_label("3+ 3+").diagram);
    REQUIRE(single.size() == 1);
    CHECK(single[0].empty());
}

TEST_CASE("nilpotent support counts", "[richardson]")
{
    CHECK(nilpotent_support_count(SymmetricPair::ci(2)) == 4);
    CHECK(nilpotent_support_count(SymmetricPair::bdi(3, 0)) == 1);
    CHECK(nilpotent_support_count(SymmetricPair::bdi(0, 0)) == rational(1, 2));
    CHECK(nilpotent_support_count(SymmetricPair::bdi(0, 0), CountMode::Enumeration) == 1);
    CHECK(nilpotent_support_count(SymmetricPair::bdi(3, 1)) == 0);
    for (int p = 0; p <= 7; ++p)
        for (int q = 0; p + q <= 10; ++q)
            CHECK(nilpotent_support_count(SymmetricPair::bdi(p, q)) == nilpotent_support_count(SymmetricPair::bdi(q, p)));
}

TEST_CASE("SL nilpotent labels", "[richardson]")
{
    auto a = sl_nilpotent_labels(1, 1);
    REQUIRE(a.size() == 2);
    for (const auto& l : a)
        CHECK(l.order == 1);
    auto b = sl_nilpotent_labels(2, 1);
    int on_three = 0;
    for (const auto& l : b)
        if (to_text(l.orbit) == "3+")
            ++on_three;
    CHECK(on_three == 3);
    auto c = sl_nilpotent_labels(1, 0);
    REQUIRE(c.size() == 1);
    CHECK(to_text(c[0].orbit) == "1+");
    for (const auto& l : sl_nilpotent_labels(4, 3))
        CHECK(l.order % 2 == 1);
    CHECK(odd_part(12) == 3);
    CHECK(odd_part(7) == 7);
}

TEST_CASE("calibration", "[richardson]")
{
    auto lit = calibrate(literal_conventions(), 9);
    CHECK(lit.tried.size() == 4);
    auto ext = calibrate(extended_conventions(), 9);
    CHECK(ext.tried.size() == 8);
    CHECK_FALSE(ext.matching.empty());
    CHECK(ext.distinct_matching_predicates == 1);
    CHECK(calibrated_convention() == ext.matching.front());
}

TEST_CASE("Richardson list is a sublist of the orbit list", "[richardson]")
{
    for (const auto& pair : {SymmetricPair::bdi(4, 3), SymmetricPair::ci(3), SymmetricPair::sl(3, 2), SymmetricPair::diii(4)}) {
        auto all = enumerate_syd(pair);
        auto rich = richardson_orbits(pair);
        std::size_t j = 0;
        for (const auto& l : all)
            if (j < rich.size() && rich[j] == l)
                ++j;
        CHECK(j == rich.size());
        CHECK_FALSE(rich.empty());
    }
}
