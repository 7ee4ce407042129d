#ifndef SYDLAB_INVARIANTS_HPP
#define SYDLAB_INVARIANTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <sydlab/count_mode.hpp>
#include <sydlab/diagram.hpp>
#include <sydlab/pair.hpp>

namespace sydlab {

struct ComponentGroup {
    enum class Kind { Trivial, Cyclic, Elementary2 };
    Kind kind = Kind::Trivial;
    // Cyclic: order d >= 2. Elementary2: rank r >= 1. Trivial: 1 / 0.
    int value = 0;

    static ComponentGroup cyclic(int d);
    static ComponentGroup elementary2(int r);
    std::int64_t order() const;
    // Number of irreducible characters; the group is abelian.
    std::int64_t character_count() const { return order(); }

    friend bool operator==(const ComponentGroup&, const ComponentGroup&) = default;
};

std::string to_string(const ComponentGroup& g);

// Throws std::invalid_argument unless orbit is a label of the pair.
ComponentGroup component_group(const SymmetricPair& pair, const OrbitLabel& orbit);

// r for an orthogonal diagram: odd lengths with p_i > 0 plus odd lengths with
// q_i > 0, minus one; 0 without odd lengths.
int r_orthogonal(const SignedYoungDiagram& d);
// r for a symplectic split diagram: even lengths with p_i > 0 plus even
// lengths with q_i > 0.
int r_symplectic(const SignedYoungDiagram& d);

// Sum over orbit labels of the number of characters of the component group.
// Formula mode counts BDI(0,0) as 2 (the empty diagram taken as very even).
std::int64_t orbital_complex_count(const SymmetricPair& pair, CountMode mode = CountMode::Enumeration);

enum class SupportShape { MK, K, ML };

// BDI/CI: MK(m, k, mu). PGL/GLGL/CII/DIII: K(k, mu). SL: ML(m, l, mu) with
// l stored in k. decoration is set only on the very even BDI support.
struct SupportLabel {
    SymmetricPair pair;
    SupportShape shape = SupportShape::K;
    int m = 0;
    int k = 0;
    OrbitLabel mu;
    Decoration decoration = Decoration::None;

    // The pair whose SYD^0 contains mu.
    SymmetricPair reduced_pair() const;
    // The orbit label of the support in the ambient pair.
    OrbitLabel orbit() const;

    friend bool operator==(const SupportLabel& a, const SupportLabel& b)
    {
        return a.pair == b.pair && a.shape == b.shape && a.m == b.m && a.k == b.k && a.mu == b.mu && a.decoration == b.decoration;
    }
};

std::string to_text(const SupportLabel& s);

// Supports of character sheaves, ordered by (m, k) ascending then mu in
// enumeration order; the decorated BDI support emits I before II.
std::vector<SupportLabel> support_set(const SymmetricPair& pair);

bool in_support_set(const SupportLabel& s);

enum class BraidFamily { B, D, ExtB, ExtD };

struct BraidFactor {
    BraidFamily family;
    int rank;
    friend bool operator==(const BraidFactor&, const BraidFactor&) = default;
};

struct FundGroupDescriptor {
    std::vector<BraidFactor> braid;
    // Invariant factors of the finite abelian part.
    std::vector<int> abelian;
    friend bool operator==(const FundGroupDescriptor&, const FundGroupDescriptor&) = default;
};

std::string family_name(BraidFamily f);
std::string to_string(const FundGroupDescriptor& f);

// Order of the cyclic factor for an SL support.
int sl_check_d(const SupportLabel& s);

// Throws std::invalid_argument for labels outside the support set.
FundGroupDescriptor fundamental_group_descriptor(const SupportLabel& s);

} // namespace sydlab

#endif
