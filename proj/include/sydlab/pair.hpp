#ifndef SYDLAB_PAIR_HPP
#define SYDLAB_PAIR_HPP

#include <string>
#include <utility>

namespace sydlab {

enum class PairType { AIII_SL, AIII_PGL, BDI, CI, CII, DIII, GLGL };

// CI and DIII carry a single rank n, stored as p = q = n.
// CII(p,q) is Sp(2p+2q) with signature (2p,2q) on diagrams.
struct SymmetricPair {
    PairType type = PairType::BDI;
    int p = 0;
    int q = 0;

    static SymmetricPair sl(int p, int q) { return {PairType::AIII_SL, p, q}; }
    static SymmetricPair pgl(int p, int q) { return {PairType::AIII_PGL, p, q}; }
    static SymmetricPair gl(int p, int q) { return {PairType::GLGL, p, q}; }
    static SymmetricPair bdi(int p, int q) { return {PairType::BDI, p, q}; }
    static SymmetricPair ci(int n) { return {PairType::CI, n, n}; }
    static SymmetricPair cii(int p, int q) { return {PairType::CII, p, q}; }
    static SymmetricPair diii(int n) { return {PairType::DIII, n, n}; }

    bool single_rank() const { return type == PairType::CI || type == PairType::DIII; }
    int n() const { return single_rank() ? p : p + q; }
    int rank() const;
    // (plus, minus) box counts of every diagram labelling an orbit.
    std::pair<int, int> signature() const;

    friend bool operator==(const SymmetricPair&, const SymmetricPair&) = default;
};

// Throws std::invalid_argument on negative parameters or p != q for CI/DIII.
void validate(const SymmetricPair& pair);

std::string type_name(PairType t);
// "BDI:2,1", "CI:3".
std::string to_string(const SymmetricPair& pair);
// Accepts TYPE:p,q or TYPE:n; TYPE in {SL, AIII_SL, PGL, AIII_PGL, GL, GLGL,
// BDI, CI, CII, DIII}, case-insensitive. Throws std::invalid_argument.
SymmetricPair parse_pair(const std::string& text);

} // namespace sydlab

#endif
