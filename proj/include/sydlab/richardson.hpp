#ifndef SYDLAB_RICHARDSON_HPP
#define SYDLAB_RICHARDSON_HPP

#include <string>
#include <vector>

#include <sydlab/count_mode.hpp>
#include <sydlab/diagram.hpp>
#include <sydlab/pair.hpp>
#include <sydlab/rational.hpp>

namespace sydlab {

// Reading of the orthogonal Richardson parity test. A row of length 2mu+1
// gets eps in {0,1} from its starting sign (+ -> 0 when plus_is_zero).
// For N odd the first row is tested as eps_1 (or eps_1 + mu_1 when
// middle_box, the sign of its middle box) against q (or p).
struct SignConvention {
    bool plus_is_zero = true;
    bool compare_to_q = true;
    bool middle_box = false;

    friend bool operator==(const SignConvention&, const SignConvention&) = default;
};

std::string to_string(const SignConvention& c);

// {+->0, +->1} x {q, p} on eps_1 alone.
std::vector<SignConvention> literal_conventions();
// literal_conventions() followed by the four middle-box readings.
std::vector<SignConvention> extended_conventions();

// BDI Richardson test under an explicit convention; diagram must have
// signature (p,q). False whenever p and q are both odd.
bool is_richardson_bdi(const SignedYoungDiagram& d, int p, int q, const SignConvention& c);

struct CalibrationResult {
    int max_n = 0;
    std::vector<SignConvention> tried;
    std::vector<SignConvention> matching;
    // Matching conventions that define pairwise different predicates on
    // every BDI diagram with N <= max_n.
    int distinct_matching_predicates = 0;
};

// Tests each convention: sum_p b_{p,N-p} against the biorbital generating
// functions for 1 <= N <= max_n.
CalibrationResult calibrate(const std::vector<SignConvention>& family, int max_n = 13);

// First matching convention of the extended family, computed once.
// Throws std::logic_error if none matches.
const SignConvention& calibrated_convention();

// Orbit must be a label of the pair (std::invalid_argument otherwise).
bool is_richardson(const SymmetricPair& pair, const OrbitLabel& orbit);

// SYD^0: Richardson orbit labels in enumeration order.
std::vector<OrbitLabel> richardson_orbits(const SymmetricPair& pair);

struct OmegaData {
    // Indices into the distinct lengths, 1-based, ascending.
    std::vector<int> omega;
    int l = 0;
    std::int64_t pi_cardinality = 1;
};

// Diagram must have only odd lengths, each single-signed.
OmegaData omega_data(const SignedYoungDiagram& mu);

// Bit r-1 (r = 1..s-1) is the value on the r-th generator; 1 only if r+1 is
// in omega. Counting order (last bit fastest).
using PiCharacter = std::vector<int>;
std::vector<PiCharacter> pi_characters(const SignedYoungDiagram& mu);

// CI: |SYD^0|. BDI: sum |Pi| over SYD^0 (0 if p,q both odd; (0,0) gives 1
// or 1/2 by mode). PGL/GLGL/CII/DIII: |SYD^0|. SL: odd-order characters.
Rational nilpotent_support_count(const SymmetricPair& pair, CountMode mode = CountMode::Formula);

struct SlNilpotentLabel {
    OrbitLabel orbit;
    // Character psi_k of Z/d, stored as the exponent k.
    int exponent = 0;
    int order = 1;
};

// (orbit in SYD^0 of SL(p,q), odd-order character of Z/d_lambda).
std::vector<SlNilpotentLabel> sl_nilpotent_labels(int p, int q);

// Odd part of n >= 1; the empty diagram counts as d = 1.
int odd_part(int n);

} // namespace sydlab

#endif
