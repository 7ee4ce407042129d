#ifndef SYDLAB_ATLAS_HPP
#define SYDLAB_ATLAS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <sydlab/diagram.hpp>
#include <sydlab/invariants.hpp>
#include <sydlab/pair.hpp>
#include <sydlab/partition.hpp>
#include <sydlab/rational.hpp>
#include <sydlab/richardson.hpp>

namespace sydlab {

// Local-system families carried by a character-sheaf support.
enum class LocalSystemKind {
    Tau,            // tau in P(k)
    TauPsi2,        // tau in P(k), twisted by the order-2 character
    TauPsiM,        // tau in P(l), character of order m of Z/d
    RhoPsi2m,       // bipartition of l, primitive character of Z/2m
    RhoTau,         // full-support index, tau in P(k)
    RhoTauPhi,      // full-support index, tau in P(k), Pi character
    RhoOmegaTauPhi, // as RhoTauPhi with an I/II choice
    NilpotentE      // odd-order character of Z/d on a nilpotent support
};

std::string kind_name(LocalSystemKind k);

struct CharSheafLabel {
    SupportLabel support;
    LocalSystemKind kind = LocalSystemKind::Tau;
    Partition tau;
    Bipartition rho;
    // Opaque index into the full-support set of the small pair, 0-based.
    int theta = 0;
    Decoration omega = Decoration::None;
    PiCharacter phi;
    // Character psi_e of a cyclic group, stored as (e, order).
    int exponent = 0;
    int order = 1;
};

// Injective text encoding; labels compare through it.
std::string to_text(const CharSheafLabel& l);

// Labels in support order, then family, then local-system data.
std::vector<CharSheafLabel> enumerate_char_labels(const SymmetricPair& pair);
std::int64_t char_count(const SymmetricPair& pair);

// Orbit with a character of its component group. For cyclic groups the
// character is the exponent e of psi_e; for PGL 0/1 is trivial/nontrivial.
struct OrbitalDatum {
    OrbitLabel orbit;
    int character = 0;
};

std::vector<OrbitalDatum> enumerate_orbital_data(const SymmetricPair& pair);

// Defined for AIII_SL, AIII_PGL, GLGL, CII and DIII. Throws
// std::invalid_argument for other pairs, non-labels or characters outside
// the component group.
CharSheafLabel bijection_orbital_to_char(const SymmetricPair& pair, const OrbitLabel& orbit, int character);

struct BijectionReport {
    SymmetricPair pair;
    std::int64_t domain = 0;
    std::int64_t codomain = 0;
    bool injective = false;
    bool surjective = false;
    // SL: each order-m character lands on a label of character order m.
    bool order_preserving = true;
    bool ok() const { return injective && surjective && order_preserving && domain == codomain; }
};

BijectionReport verify_bijection(const SymmetricPair& pair);

struct CountReport {
    SymmetricPair pair;
    // Orbit/character pairs, true rank-0 cardinalities.
    std::int64_t orbital = 0;
    std::int64_t labels = 0;
    bool labels_distinct = false;
    // BDI: the support-side count with the 1/2 rank-0 conventions, compared
    // with the formula-mode orbital count. CI: Theta-weighted sum. Others:
    // per-support family counts.
    Rational formula;
    Rational orbital_formula_mode;
    // CI only: coefficient of the closed generating function.
    std::optional<Rational> series;
    bool ok = false;
};

CountReport verify_counts(const SymmetricPair& pair);

// Support-side count for BDI with 1/2 conventions at rank 0.
Rational bdi_support_count(int p, int q);

// Closed-form coefficient for the orthogonal total count (p >= q).
Rational bdi_total_closed_form(int p, int q);
// Closed-form coefficient for the nilpotent-support count (p >= q, p or q even).
Rational bdi_nilpotent_closed_form(int p, int q);
// Labels with m = k = 0, i.e. supported on Richardson orbits.
std::int64_t bdi_nilpotent_label_count(int p, int q);

} // namespace sydlab

#endif
