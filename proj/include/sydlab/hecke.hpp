#ifndef SYDLAB_HECKE_HPP
#define SYDLAB_HECKE_HPP

#include <string>

#include <sydlab/count_mode.hpp>
#include <sydlab/pair.hpp>
#include <sydlab/rational.hpp>

namespace sydlab {

// Hyperoctahedral Hecke algebras H_{W_k, a, b} and the type D algebra
// H_{W'_k, -1}.
enum class HeckeKind { B_1_neg1, B_1_1, B_neg1_neg1, B_neg1_1, D_neg1 };

struct HeckeFamily {
    HeckeKind kind = HeckeKind::B_1_neg1;
    int rank = 0;
};

std::string to_string(HeckeKind k);
// Accepts the enum spelling; throws std::invalid_argument.
HeckeKind parse_hecke_kind(const std::string& s);

// Coefficients of prod (1+x^{2s})(1+x^s) and prod (1+x^{2s-1})(1+x^s).
std::int64_t hecke_d(int k);
std::int64_t hecke_e(int k);

// B_1_neg1: p(k). B_1_1: bipartitions of k. B_neg1_neg1: d(k).
// B_neg1_1: e(k). D_neg1: e(k)/2 for k >= 1 and 1 at k = 0.
Rational hecke_count(const HeckeFamily& family);

// Full-support counts |Theta|. Formula mode returns 1/2 for the split
// orthogonal pair of rank 0; Enumeration returns 1.
Rational full_support_count(const SymmetricPair& pair, CountMode mode = CountMode::Enumeration);

// f_B(q) = sum d(k)d(q-k) and f_D(n) = 1/2 sum e(k)e(n-k) with the rank-0
// value fixed by mode.
Rational f_b(int q);
Rational f_d(int n, CountMode mode);
// sum e(k)e(q-k).
Rational f_d_unequal(int q);
// sum d(k)e(n-k).
Rational theta_ci(int n);

} // namespace sydlab

#endif
