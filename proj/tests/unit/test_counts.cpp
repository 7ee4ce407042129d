#include <catch_amalgamated.hpp>

#include <sydlab/hecke.hpp>
#include <sydlab/invariants.hpp>

#include "oracles.hpp"

using namespace sydlab;

TEST_CASE("full-support counts of small split pairs", "[counts]")
{
    CHECK(full_support_count(SymmetricPair::bdi(2, 1)) == 2);
    CHECK(full_support_count(SymmetricPair::bdi(1, 1)) == 2);
    CHECK(full_support_count(SymmetricPair::bdi(0, 0)) == 1);
    CHECK(full_support_count(SymmetricPair::bdi(0, 0), CountMode::Formula) == rational(1, 2));
}

TEST_CASE("f_B and f_D convolutions", "[counts]")
{
    for (int q = 0; q <= 12; ++q) {
        std::int64_t fb = 0, fd = 0, ci = 0;
        for (int k = 0; k <= q; ++k) {
            fb += oracle::hecke_d(k) * oracle::hecke_d(q - k);
            fd += oracle::hecke_e(k) * oracle::hecke_e(q - k);
            ci += oracle::hecke_d(k) * oracle::hecke_e(q - k);
        }
        CHECK(f_b(q) == fb);
        CHECK(f_d_unequal(q) == fd);
        CHECK(theta_ci(q) == ci);
        if (q > 0)
            CHECK(f_d(q, CountMode::Formula) == Rational(fd) / 2);
    }
    CHECK(f_d(0, CountMode::Formula) == rational(1, 2));
    CHECK(f_d(0, CountMode::Enumeration) == 1);
}

TEST_CASE("Hecke family counts", "[counts]")
{
    for (int k = 0; k <= 10; ++k) {
        CHECK(hecke_count({HeckeKind::B_1_neg1, k}) == oracle::partition_count(k));
        CHECK(hecke_count({HeckeKind::B_neg1_neg1, k}) == oracle::hecke_d(k));
        CHECK(hecke_count({HeckeKind::B_neg1_1, k}) == oracle::hecke_e(k));
        CHECK(hecke_count({HeckeKind::D_neg1, k}) == (k == 0 ? Rational(1) : Rational(oracle::hecke_e(k)) / 2));
    }
    CHECK(parse_hecke_kind(to_string(HeckeKind::D_neg1)) == HeckeKind::D_neg1);
    CHECK_THROWS_AS(parse_hecke_kind("nope"), std::invalid_argument);
}
