#include <catch_amalgamated.hpp>

#include <set>

#include <sydlab/partition.hpp>

#include "oracles.hpp"

using namespace sydlab;

TEST_CASE("partition counts match the recursive oracle", "[partition]")
{
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(5) == 7);
    for (int n = 0; n <= 20; ++n)
        CHECK(partition_count(n) == oracle::partition_count(n));
}

TEST_CASE("enumeration is reverse lexicographic and complete", "[partition]")
{
    for (int n = 0; n <= 12; ++n) {
        auto ps = enumerate_partitions(n);
        auto ref = oracle::partitions(n);
        REQUIRE(ps.size() == ref.size());
        CHECK(ps == ref);
        for (const auto& p : ps) {
            CHECK(is_partition(p));
            CHECK(size(p) == n);
        }
    }
    CHECK(enumerate_partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
}

TEST_CASE("transpose is an involution preserving size", "[partition]")
{
    CHECK(transpose({3, 1}) == Partition{2, 1, 1});
    CHECK(transpose({}) == Partition{});
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(transpose(transpose(p)) == p);
            CHECK(size(transpose(p)) == n);
        }
}

TEST_CASE("bipartitions", "[partition]")
{
    for (int n = 0; n <= 8; ++n) {
        std::int64_t ref = 0;
        for (int a = 0; a <= n; ++a)
            ref += oracle::partition_count(a) * oracle::partition_count(n - a);
        auto bs = enumerate_bipartitions(n);
        CHECK(bipartition_count(n) == ref);
        CHECK(static_cast<std::int64_t>(bs.size()) == ref);
        CHECK(std::set<Bipartition>(bs.begin(), bs.end()).size() == bs.size());
    }
}

TEST_CASE("distinct part sizes", "[partition]")
{
    CHECK(p_distinct_sizes(3, 1) == 2);
    CHECK(distinct_sizes({3, 3, 1}) == 2);
    std::int64_t weighted = 0;
    for (int k = 0; k <= 2; ++k)
        weighted += p_distinct_sizes(2, k) << k;
    CHECK(weighted == 4);
    for (int l = 0; l <= 12; ++l) {
        std::int64_t total = 0;
        for (int k = 0; k <= l; ++k) {
            std::int64_t ref = 0;
            for (const auto& p : oracle::partitions(l))
                ref += std::set<int>(p.begin(), p.end()).size() == static_cast<std::size_t>(k);
            CHECK(p_distinct_sizes(l, k) == ref);
            total += ref;
        }
        CHECK(total == partition_count(l));
    }
}

TEST_CASE("multiplicities round trip", "[partition]")
{
    for (const auto& p : enumerate_partitions(9))
        CHECK(from_multiplicities(multiplicities(p)) == p);
    CHECK(multiplicities({3, 3, 1}) == std::vector<std::pair<int, int>>{{3, 2}, {1, 1}});
    CHECK(!is_partition({1, 2}));
    CHECK(!is_partition({2, 0}));
}
