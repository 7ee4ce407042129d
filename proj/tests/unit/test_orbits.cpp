#include <catch_amalgamated.hpp>

#include <set>
#include <stdexcept>

#include <sydlab/orbits.hpp>

#include "oracles.hpp"

using namespace sydlab;

namespace {

std::vector<SymmetricPair> small_pairs()
{
    std::vector<SymmetricPair> out;
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q) {
            out.push_back(SymmetricPair::sl(p, q));
            out.push_back(SymmetricPair::pgl(p, q));
            out.push_back(SymmetricPair::gl(p, q));
            out.push_back(SymmetricPair::bdi(p, q));
            if (p + q <= 4)
                out.push_back(SymmetricPair::cii(p, q));
        }
    for (int n = 0; n <= 5; ++n) {
        out.push_back(SymmetricPair::ci(n));
        out.push_back(SymmetricPair::diii(n));
    }
    return out;
}

oracle::Signed to_oracle(const SignedYoungDiagram& d)
{
    oracle::Signed s;
    for (const Row& r : d.rows())
        s[r.length] = {r.plus, r.minus};
    return s;
}

} // namespace

TEST_CASE("orbit counts of small examples", "[orbits]")
{
    CHECK(enumerate_syd(SymmetricPair::bdi(2, 1)).size() == 2);
    CHECK(enumerate_syd(SymmetricPair::ci(1)).size() == 3);
    CHECK(enumerate_syd(SymmetricPair::cii(1, 1)).size() == 2);
}

TEST_CASE("orbit counts agree with exhaustive filtering", "[orbits]")
{
    for (const auto& pair : small_pairs()) {
        INFO(to_string(pair));
        auto labels = enumerate_syd(pair);
        CHECK(static_cast<std::int64_t>(labels.size()) == oracle::orbit_count(pair));
        CHECK(std::set<OrbitLabel>(labels.begin(), labels.end()).size() == labels.size());
        for (const auto& l : labels) {
            CHECK(l.diagram.signature() == pair.signature());
            CHECK(satisfies_type_rules(pair, l.diagram));
            CHECK(is_orbit_label(pair, l));
            CHECK(oracle::signature(to_oracle(l.diagram)) == pair.signature());
        }
    }
}

TEST_CASE("decorations appear only on very even BDI diagrams with p = q", "[orbits]")
{
    for (int n = 0; n <= 6; ++n) {
        auto labels = enumerate_syd(SymmetricPair::bdi(n, n));
        for (const auto& l : labels)
            if (l.decoration != Decoration::None)
                CHECK(is_very_even(l.diagram));
        for (const auto& l : labels)
            if (is_very_even(l.diagram))
                CHECK(l.decoration != Decoration::None);
    }
    for (const auto& l : enumerate_syd(SymmetricPair::bdi(3, 2)))
        CHECK(l.decoration == Decoration::None);
}

TEST_CASE("PGL with p = q emits swap-canonical diagrams", "[orbits]")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : enumerate_syd(SymmetricPair::pgl(n, n)))
            CHECK(swap_canonical(l.diagram) == l.diagram);
}

TEST_CASE("label text round trips", "[orbits]")
{
    for (const auto& pair : {SymmetricPair::bdi(4, 4), SymmetricPair::sl(3, 2), SymmetricPair::ci(3)})
        for (const auto& l : enumerate_syd(pair))
            CHECK(parse_label(to_text(l)) == l);
    CHECK(to_text(OrbitLabel{}) == "empty");
    CHECK_THROWS_AS(parse_label("3x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_label("2+ 2- | decor=III"), std::invalid_argument);
}

TEST_CASE("non-labels are rejected", "[orbits]")
{
    auto pair = SymmetricPair::bdi(2, 1);
    CHECK_FALSE(is_orbit_label(pair, parse_label("2+ 1+")));
    CHECK_THROWS_AS(require_orbit_label(pair, parse_label("1+ 1+")), std::invalid_argument);
    CHECK_THROWS_AS(validate(SymmetricPair{PairType::CI, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(parse_pair("XYZ:1"), std::invalid_argument);
    CHECK(parse_pair("bdi:2,1") == SymmetricPair::bdi(2, 1));
    CHECK(to_string(SymmetricPair::ci(3)) == "CI:3");
}
