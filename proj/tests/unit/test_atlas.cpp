#include <catch_amalgamated.hpp>

#include <map>
#include <set>
#include <stdexcept>

#include <sydlab/atlas.hpp>
#include <sydlab/orbits.hpp>

#include "oracles.hpp"

using namespace sydlab;

namespace {

std::set<std::string> texts(const std::vector<CharSheafLabel>& labels)
{
    std::set<std::string> out;
    for (const auto& l : labels)
        out.insert(to_text(l));
    return out;
}

} // namespace

TEST_CASE("SL(1,1) label breakdown", "[atlas]")
{
    auto labels = enumerate_char_labels(SymmetricPair::sl(1, 1));
    REQUIRE(labels.size() == 5);
    std::map<LocalSystemKind, int> by_kind;
    for (const auto& l : labels)
        ++by_kind[l.kind];
    CHECK(by_kind[LocalSystemKind::NilpotentE] == 2);
    CHECK(by_kind[LocalSystemKind::TauPsiM] == 1);
    CHECK(by_kind[LocalSystemKind::RhoPsi2m] == 2);
}

TEST_CASE("label counts of small pairs", "[atlas]")
{
    CHECK(char_count(SymmetricPair::pgl(1, 1)) == 3);
    CHECK(char_count(SymmetricPair::ci(1)) == 5);
    CHECK(char_count(SymmetricPair::bdi(2, 1)) == 3);
    CHECK(char_count(SymmetricPair::bdi(0, 0)) == 1);
}

TEST_CASE("labels are distinct and counts agree", "[atlas]")
{
    std::vector<SymmetricPair> pairs;
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            pairs.push_back(SymmetricPair::bdi(p, q));
            pairs.push_back(SymmetricPair::sl(p, q));
            pairs.push_back(SymmetricPair::pgl(p, q));
        }
    for (int n = 0; n <= 5; ++n)
        pairs.push_back(SymmetricPair::ci(n));
    for (const auto& pair : pairs) {
        INFO(to_string(pair));
        auto labels = enumerate_char_labels(pair);
        CHECK(texts(labels).size() == labels.size());
        auto rep = verify_counts(pair);
        CHECK(rep.ok);
        CHECK(rep.labels_distinct);
        if (pair.type == PairType::BDI || pair.type == PairType::CI)
            CHECK(rep.orbital == oracle::orbital_count(pair));
    }
}

TEST_CASE("bijection examples", "[atlas]")
{
    auto pgl = SymmetricPair::pgl(1, 1);
    auto twisted = bijection_orbital_to_char(pgl, parse_label("1+ 1-"), 1);
    CHECK(twisted.kind == LocalSystemKind::TauPsi2);
    auto plain = bijection_orbital_to_char(pgl, parse_label("1+ 1-"), 0);
    CHECK(plain.kind == LocalSystemKind::Tau);
    CHECK(plain.tau == Partition{1});

    auto sl = SymmetricPair::sl(1, 1);
    auto nil = bijection_orbital_to_char(sl, parse_label("2+"), 0);
    CHECK(nil.kind == LocalSystemKind::NilpotentE);
    auto odd = bijection_orbital_to_char(sl, parse_label("1+ 1-"), 0);
    CHECK(odd.kind == LocalSystemKind::TauPsiM);
    auto even = bijection_orbital_to_char(sl, parse_label("2+"), 1);
    CHECK(even.kind == LocalSystemKind::RhoPsi2m);
    CHECK(even.order == 2);

    CHECK_THROWS_AS(bijection_orbital_to_char(SymmetricPair::bdi(2, 1), parse_label("3+"), 0), std::invalid_argument);
    CHECK_THROWS_AS(bijection_orbital_to_char(sl, parse_label("2+"), 2), std::invalid_argument);
    CHECK_THROWS_AS(bijection_orbital_to_char(sl, parse_label("3+"), 0), std::invalid_argument);
}

TEST_CASE("bijections for the non-split pairs", "[atlas]")
{
    std::vector<SymmetricPair> pairs;
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            pairs.push_back(SymmetricPair::sl(p, q));
            pairs.push_back(SymmetricPair::pgl(p, q));
            pairs.push_back(SymmetricPair::gl(p, q));
            if (p + q <= 4)
                pairs.push_back(SymmetricPair::cii(p, q));
        }
    for (int n = 0; n <= 6; ++n)
        pairs.push_back(SymmetricPair::diii(n));
    for (const auto& pair : pairs) {
        INFO(to_string(pair));
        auto data = enumerate_orbital_data(pair);
        std::set<std::string> image;
        for (const auto& d : data)
            image.insert(to_text(bijection_orbital_to_char(pair, d.orbit, d.character)));
        CHECK(image.size() == data.size());
        CHECK(image == texts(enumerate_char_labels(pair)));
        CHECK(verify_bijection(pair).ok());
    }
}

TEST_CASE("orthogonal closed forms", "[atlas]")
{
    for (int q = 0; q <= 5; ++q)
        for (int gap = 0; gap <= 4; ++gap) {
            int p = q + gap;
            INFO(p << "," << q);
            CHECK(bdi_total_closed_form(p, q) == orbital_complex_count(SymmetricPair::bdi(p, q), CountMode::Formula));
            CHECK(bdi_support_count(p, q) == bdi_total_closed_form(p, q));
            if (p % 2 == 0 || q % 2 == 0) {
                CHECK(bdi_nilpotent_closed_form(p, q) == nilpotent_support_count(SymmetricPair::bdi(p, q)));
                if (p + q > 0)
                    CHECK(bdi_nilpotent_label_count(p, q) == nilpotent_support_count(SymmetricPair::bdi(p, q)));
            }
        }
}
