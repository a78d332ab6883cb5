#pragma once

#include <functional>
#include <vector>

#include "qshuffle/partition.hpp"
#include "qshuffle/permutation.hpp"
#include "qshuffle/rational.hpp"

namespace qshuffle {

/// S_n in Lehmer-rank order (identity first). Guarded by the factorial cap.
std::vector<Permutation> all_permutations(int n);

/// Partitions of n in descending lexicographic order, (n) first. n >= 0.
std::vector<Partition> partitions_of(int n);

/// p(n), computed independently of partitions_of by the Euler recurrence.
Integer partition_count(int n);

/// Compositions of n ordered by their subset bitmask (coarsest first). n >= 1.
std::vector<Composition> compositions_of(int n);

/// Ordered set partitions of {1..n}: blocks in sequence, each block sorted.
/// Count is the ordered Bell number; guarded by the BHR cap.
std::vector<std::vector<std::vector<int>>> ordered_set_partitions(int n);

/// Ordered Bell number via Fub(n) = sum C(n,k) Fub(n-k).
Integer ordered_bell_number(int n);

/// Calls fn on every word in {1..alphabet}^n in odometer order.
/// Guarded by the oracle word budget.
void for_each_word(int alphabet, int n, const std::function<void(const std::vector<int>&)>& fn);

/// Sorted divisors of n >= 1, and the Moebius function (trial division).
std::vector<int> divisors(int n);
int moebius(int n);

} // namespace qshuffle
