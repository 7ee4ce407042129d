#ifndef SYDLAB_WEYL_HPP
#define SYDLAB_WEYL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <sydlab/pair.hpp>

namespace sydlab {

// x -> y with y[perm[i]] = sign[i] * x[i].
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> sign;

    static SignedPermutation identity(int rank);
    int rank() const { return static_cast<int>(perm.size()); }
    std::vector<int> apply(const std::vector<int>& x) const;
    // (a * b)(x) = a(b(x)).
    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
    SignedPermutation inverse() const;
    int negative_signs() const;
    // Injective code for rank <= 7.
    std::uint32_t key() const;
    static SignedPermutation from_key(std::uint32_t key, int rank);

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

struct RestrictedRoot {
    std::vector<int> coords;
    int multiplicity = 0;
    // Image of the coroot at -1 in I, as a vector over F_2.
    std::vector<int> coroot_mod2;
};

struct ReflectionData {
    // Primitive positive representative of the reflecting line.
    std::vector<int> root;
    SignedPermutation element;
    // Half the summed multiplicities of the roots on the line.
    int delta = 0;
    // From the shortest root on the line that carries a coroot image.
    std::vector<int> coroot_mod2;
};

struct RestrictedRootDatum {
    // "B2", "C3", "BC1", "D4", or "0" for rank 0.
    std::string type;
    int rank = 0;
    std::vector<RestrictedRoot> roots;
    std::vector<ReflectionData> reflections;
};

RestrictedRootDatum restricted_root_datum(const SymmetricPair& pair);

struct IGroup {
    int rank = 0;
    int rank0 = 0;
    // Images of the real-root coroots; they span I^0.
    std::vector<std::vector<int>> generators;
    // Character of I through K/K^0 as a vector over F_2 (all zero if trivial).
    std::vector<int> iota;
    bool iota_nontrivial = false;
    // The little Weyl group permutes the coordinates of I; otherwise it acts trivially.
    bool permuted_by_weyl = false;
};

IGroup i_group(const SymmetricPair& pair);

// chi(x) = c . x over F_2.
using ICharacter = std::vector<int>;

// chi_m = 1^m 0^{r-m}, m = 0..rank(I).
std::vector<ICharacter> character_orbit_reps(const SymmetricPair& pair);

// All elements of the little Weyl group, generated from its reflections.
// Throws std::domain_error("brute force bound") above rank_bound.
std::vector<SignedPermutation> little_weyl_group(const SymmetricPair& pair, int rank_bound = 7);

// Number of orbits of the little Weyl group on the characters of I.
int character_orbit_count(const SymmetricPair& pair, int rank_bound = 7);

ICharacter act_on_character(const SignedPermutation& w, const ICharacter& c, const IGroup& i);

struct StabilizerReport {
    std::int64_t weyl_order = 0;
    std::int64_t stabilizer_order = 0;
    std::int64_t w0_order = 0;
    int stabilizer_reflections = 0;
    int w0_reflections = 0;
    bool w0_contained = false;
    bool w0_normal = false;
    // Every square of W_chi lies in W0.
    bool quotient_elementary2 = false;
    // Invariant factors of W_chi / W0 (each 2).
    std::vector<int> quotient;
    // Sorted element keys.
    std::vector<std::uint32_t> stabilizer_keys;
    std::vector<std::uint32_t> w0_keys;
};

StabilizerReport stabilizer(const SymmetricPair& pair, const ICharacter& chi, int rank_bound = 7);

int weyl_rank(const SymmetricPair& pair);

} // namespace sydlab

#endif
