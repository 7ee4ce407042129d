#include <catch_amalgamated.hpp>

#include <algorithm>
#include <stdexcept>

#include <sydlab/weyl.hpp>

#include "oracles.hpp"

using namespace sydlab;

namespace {

std::uint32_t key_of(const oracle::Element& e)
{
    return SignedPermutation{e.perm, e.sign}.key();
}

std::vector<std::uint32_t> keys_where(int r, const std::function<bool(const oracle::Element&)>& pred)
{
    std::vector<std::uint32_t> out;
    for (const auto& e : oracle::hyperoctahedral(r))
        if (pred(e))
            out.push_back(key_of(e));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("signed permutation group laws", "[weyl]")
{
    auto all = oracle::hyperoctahedral(3);
    for (std::size_t i = 0; i < all.size(); i += 5)
        for (std::size_t j = 0; j < all.size(); j += 7) {
            SignedPermutation a{all[i].perm, all[i].sign}, b{all[j].perm, all[j].sign};
            std::vector<int> x{1, 2, 3};
            CHECK((a * b).apply(x) == a.apply(b.apply(x)));
            CHECK(a * a.inverse() == SignedPermutation::identity(3));
            CHECK(SignedPermutation::from_key(a.key(), 3) == a);
        }
}

TEST_CASE("restricted root data", "[weyl]")
{
    CHECK(restricted_root_datum(SymmetricPair::ci(3)).type == "C3");
    CHECK(restricted_root_datum(SymmetricPair::bdi(3, 3)).type == "D3");
    CHECK(restricted_root_datum(SymmetricPair::bdi(4, 3)).type == "B3");
    CHECK(restricted_root_datum(SymmetricPair::bdi(3, 0)).type == "0");
    CHECK(little_weyl_group(SymmetricPair::ci(3)).size() == 48);
    CHECK(little_weyl_group(SymmetricPair::bdi(3, 3)).size() == 24);
    CHECK(little_weyl_group(SymmetricPair::bdi(5, 2)).size() == 8);
}

TEST_CASE("the group I and its real-root part", "[weyl]")
{
    auto ci = i_group(SymmetricPair::ci(3));
    CHECK(ci.rank == 3);
    CHECK(ci.rank0 == 3);
    CHECK_FALSE(ci.iota_nontrivial);
    auto b = i_group(SymmetricPair::bdi(4, 3));
    CHECK(b.rank == 3);
    CHECK(b.iota_nontrivial);
    auto d = i_group(SymmetricPair::bdi(3, 3));
    CHECK(d.rank == 3);
    CHECK(d.rank0 == 2);
    CHECK(i_group(SymmetricPair::cii(2, 1)).rank == 0);
}

TEST_CASE("stabilizers match the membership predicates", "[weyl]")
{
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= n; ++m) {
            INFO("CI " << n << " m=" << m);
            ICharacter chi(n, 0);
            std::fill(chi.begin(), chi.begin() + m, 1);
            auto rep = stabilizer(SymmetricPair::ci(n), chi);
            CHECK(rep.stabilizer_keys == keys_where(n, [&](const oracle::Element& e) { return oracle::preserves_block(e, m); }));
            CHECK(rep.w0_keys == keys_where(n, [&](const oracle::Element& e) {
                      return oracle::preserves_block(e, m) && oracle::negatives(e, 0, m) % 2 == 0;
                  }));
            CHECK(rep.w0_contained);
            CHECK(rep.w0_normal);
            CHECK(rep.quotient_elementary2);
        }
    for (int n = 2; n <= 4; ++n)
        for (int m = 0; m <= n; ++m) {
            INFO("D " << n << " m=" << m);
            ICharacter chi(n, 0);
            std::fill(chi.begin(), chi.begin() + m, 1);
            auto rep = stabilizer(SymmetricPair::bdi(n, n), chi);
            bool edge = m == 0 || m == n;
            CHECK(rep.stabilizer_keys == keys_where(n, [&](const oracle::Element& e) {
                      return oracle::preserves_block(e, m) && oracle::negatives(e, 0, n) % 2 == 0;
                  }));
            CHECK(rep.w0_keys == keys_where(n, [&](const oracle::Element& e) {
                      if (edge)
                          return oracle::negatives(e, 0, n) % 2 == 0;
                      return oracle::preserves_block(e, m) && oracle::negatives(e, 0, m) % 2 == 0 && oracle::negatives(e, m, n) % 2 == 0;
                  }));
        }
}

TEST_CASE("a rank-2 spot value", "[weyl]")
{
    auto rep = stabilizer(SymmetricPair::ci(2), {1, 0});
    CHECK(rep.stabilizer_order == 4);
    CHECK(rep.w0_order == 2);
    CHECK(rep.quotient == std::vector<int>{2});
}

TEST_CASE("character orbits", "[weyl]")
{
    CHECK(character_orbit_count(SymmetricPair::ci(3)) == 4);
    CHECK(character_orbit_count(SymmetricPair::bdi(4, 3)) == 4);
    CHECK(character_orbit_reps(SymmetricPair::ci(2)).size() == 3);
}

TEST_CASE("brute-force bound", "[weyl]")
{
    CHECK_THROWS_AS(little_weyl_group(SymmetricPair::ci(6), 5), std::domain_error);
    CHECK_THROWS_AS(stabilizer(SymmetricPair::ci(6), ICharacter(6, 0), 5), std::domain_error);
}
