#ifndef SYDLAB_IDENTITIES_HPP
#define SYDLAB_IDENTITIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <sydlab/partition.hpp>
#include <sydlab/rational.hpp>

namespace sydlab {

struct Mismatch {
    // "x^5" or "u^2 v^1"; for composite identities prefixed by the instance.
    std::string where;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string identity;
    int order = 0;
    bool holds = false;
    std::optional<Mismatch> first_mismatch;
};

// Registry names in fixed order.
const std::vector<std::string>& identity_names();
// Throws std::invalid_argument for unknown names.
int default_order(const std::string& name);
// The meaning of order is per identity: total degree for C2_wt_product,
// exponent of t (= 2 x the exponent of q) for C3_diagonal, largest
// partition size for C2b_bn / C2b_cn, rank for hecke_CI_count and
// partition_identity_1, truncation order otherwise.
IdentityReport verify_identity(const std::string& name, std::optional<int> order = std::nullopt);

// Sum over orthogonal diagrams of signature (p,q), very even ones once:
// 2^{r+1} with an odd part, 1 otherwise.
std::int64_t wt_by_enumeration(int p, int q);

// Weight of a partition into odd parts (3 per adjacent pair differing by
// one step of mu, 4 per pair differing by two or more).
std::int64_t wt_odd_partition(const Partition& lambda);

// Sums of wt over partitions of 2n+1 and 2n into odd parts; c_0 = 1/4.
Rational b_n_by_partitions(int n);
Rational c_n_by_partitions(int n);

} // namespace sydlab

#endif
