#ifndef SYDLAB_PARTITION_HPP
#define SYDLAB_PARTITION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sydlab {

// Weakly decreasing positive parts; the empty vector is the partition of 0.
using Partition = std::vector<int>;
using Bipartition = std::pair<Partition, Partition>;

bool is_partition(const Partition& p);
int size(const Partition& p);

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

// Ordered pairs (a,b) with |a|+|b| = n, ordered by |a| descending, then
// reverse-lexicographically in each component.
std::vector<Bipartition> enumerate_bipartitions(int n);

Partition transpose(const Partition& p);

// Number of distinct part sizes.
int distinct_sizes(const Partition& p);

// (part, multiplicity) pairs, parts strictly decreasing.
std::vector<std::pair<int, int>> multiplicities(const Partition& p);

// Builds a partition from (part, multiplicity) pairs in any order.
Partition from_multiplicities(const std::vector<std::pair<int, int>>& mult);

std::int64_t partition_count(int n);
std::int64_t bipartition_count(int n);

// Partitions of l into parts of exactly k different sizes.
std::int64_t p_distinct_sizes(int l, int k);

std::string to_string(const Partition& p);

} // namespace sydlab

#endif
