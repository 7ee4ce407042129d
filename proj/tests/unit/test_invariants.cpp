#include <catch_amalgamated.hpp>

#include <stdexcept>

#include <sydlab/invariants.hpp>
#include <sydlab/orbits.hpp>

#include "oracles.hpp"

using namespace sydlab;

namespace {

OrbitLabel label(const std::string& s)
{
    return parse_label(s);
}

} // namespace

TEST_CASE("component groups of small examples", "[invariants]")
{
    CHECK(component_group(SymmetricPair::sl(16, 16), label("6+ 6+ 6+ 6+ 4- 4-")) == ComponentGroup::cyclic(2));
    CHECK(component_group(SymmetricPair::bdi(4, 3), label("3+ 3- 1+")) == ComponentGroup::elementary2(2));
    CHECK(component_group(SymmetricPair::ci(1), label("1+ 1-")) == ComponentGroup{});
    CHECK(component_group(SymmetricPair::pgl(1, 1), label("1+ 1-")) == ComponentGroup::elementary2(1));
    CHECK(component_group(SymmetricPair::cii(1, 1), label("2+ 2-")) == ComponentGroup{});
    CHECK(component_group(SymmetricPair::pgl(0, 0), OrbitLabel{}) == ComponentGroup{});
    CHECK(ComponentGroup::cyclic(1) == ComponentGroup{});
    CHECK(ComponentGroup::elementary2(3).order() == 8);
}

TEST_CASE("orbital complex counts", "[invariants]")
{
    CHECK(orbital_complex_count(SymmetricPair::bdi(2, 1)) == 3);
    CHECK(orbital_complex_count(SymmetricPair::ci(1)) == 5);
    CHECK(orbital_complex_count(SymmetricPair::sl(1, 1)) == 5);
    CHECK(orbital_complex_count(SymmetricPair::bdi(0, 0)) == 1);
    CHECK(orbital_complex_count(SymmetricPair::bdi(0, 0), CountMode::Formula) == 2);
}

TEST_CASE("orbital counts agree with the character-sum oracle", "[invariants]")
{
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; p + q <= 9; ++q) {
            INFO(p << "," << q);
            CHECK(orbital_complex_count(SymmetricPair::bdi(p, q)) == oracle::orbital_count(SymmetricPair::bdi(p, q)));
        }
    for (int n = 0; n <= 6; ++n)
        CHECK(orbital_complex_count(SymmetricPair::ci(n)) == oracle::orbital_count(SymmetricPair::ci(n)));
}

TEST_CASE("component characters match the row oracle", "[invariants]")
{
    for (const auto& l : enumerate_syd(SymmetricPair::bdi(5, 4))) {
        oracle::Signed s;
        for (const Row& r : l.diagram.rows())
            s[r.length] = {r.plus, r.minus};
        CHECK(component_group(SymmetricPair::bdi(5, 4), l).order() == oracle::component_characters(s, true));
    }
}

TEST_CASE("support sets of small examples", "[invariants]")
{
    auto cii = support_set(SymmetricPair::cii(1, 1));
    REQUIRE(cii.size() == 2);
    CHECK(cii[0].k == 0);
    CHECK(to_text(cii[0].mu) == "2+ 2-");
    CHECK(cii[1].k == 1);
    CHECK(cii[1].mu.diagram.empty());

    auto sl = support_set(SymmetricPair::sl(1, 1));
    REQUIRE(sl.size() == 3);
    int with_l = 0;
    for (const auto& s : sl)
        if (s.k == 1) {
            ++with_l;
            CHECK(s.m == 1);
            CHECK(s.mu.diagram.empty());
        }
    CHECK(with_l == 1);

    auto b30 = support_set(SymmetricPair::bdi(3, 0));
    REQUIRE(b30.size() == 1);
    CHECK(to_text(b30[0].mu) == "1+ 1+ 1+");
}

TEST_CASE("support orbits are orbit labels of the ambient pair", "[invariants]")
{
    std::vector<SymmetricPair> pairs{SymmetricPair::bdi(4, 4), SymmetricPair::bdi(5, 2), SymmetricPair::ci(4), SymmetricPair::sl(3, 3),
                                     SymmetricPair::pgl(3, 3), SymmetricPair::cii(2, 1), SymmetricPair::diii(4), SymmetricPair::gl(3, 2)};
    for (const auto& pair : pairs)
        for (const auto& s : support_set(pair)) {
            INFO(to_text(s));
            CHECK(is_orbit_label(pair, s.orbit()));
            CHECK(in_support_set(s));
        }
}

TEST_CASE("BDI parity constraint on m", "[invariants]")
{
    for (const auto& s : support_set(SymmetricPair::bdi(4, 2)))
        CHECK(s.m % 2 == 0);
    for (const auto& s : support_set(SymmetricPair::bdi(3, 3)))
        CHECK(s.m % 2 == 1);
}

TEST_CASE("fundamental group descriptors", "[invariants]")
{
    auto sl = support_set(SymmetricPair::sl(1, 1));
    for (const auto& s : sl)
        if (s.k == 1) {
            auto f = fundamental_group_descriptor(s);
            CHECK(f.braid == std::vector<BraidFactor>{{BraidFamily::B, 1}});
            CHECK(f.abelian == std::vector<int>{2});
            CHECK(to_string(f) == "B(1) x Z/2");
        }
    auto cii = support_set(SymmetricPair::cii(1, 1));
    auto f0 = fundamental_group_descriptor(cii[0]);
    CHECK(f0.braid.empty());
    CHECK(f0.abelian.empty());
    CHECK(to_string(f0) == "1");

    for (const auto& s : support_set(SymmetricPair::bdi(5, 3))) {
        auto f = fundamental_group_descriptor(s);
        if (!s.mu.diagram.empty()) {
            CHECK(static_cast<int>(f.abelian.size()) == r_orthogonal(s.mu.diagram));
            for (const auto& b : f.braid)
                CHECK(b.family == BraidFamily::ExtB);
        }
    }
    SupportLabel bogus{SymmetricPair::cii(1, 1), SupportShape::K, 0, 3, {}, Decoration::None};
    CHECK_THROWS_AS(fundamental_group_descriptor(bogus), std::invalid_argument);
}
