#pragma once

#include <string>
#include <vector>

#include "qshuffle/rational.hpp"

namespace qshuffle {

/// A composition of n: an ordered tuple of positive parts.
class Composition {
public:
    explicit Composition(std::vector<int> parts); // validates parts >= 1

    /// Inverse of subset(): parts are the gaps of S inside {1..n}.
    /// S must be a strictly increasing subset of {1..n-1}.
    static Composition from_subset(int n, const std::vector<int>& subset);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return total_; }      // n = sum of parts
    int num_parts() const { return static_cast<int>(parts_.size()); }

    /// S_alpha = {a1, a1+a2, ...} without the final sum n.
    std::vector<int> subset() const;

    /// True when this composition's subset contains `coarser`'s subset,
    /// i.e. this refines `coarser`. Both must be compositions of the same n.
    bool refines(const Composition& coarser) const;

    std::string to_string() const; // "(1,3,1,1)"

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// A partition of n: weakly decreasing positive parts. Empty = partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // validates weakly decreasing >= 1

    /// Sorts a multiset of positive parts into a partition.
    static Partition from_multiset(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return total_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int part(int i) const; // 1-based, 0 beyond the last row

    Partition conjugate() const;
    bool contains(const Partition& mu) const; // mu_i <= lambda_i for all i

    /// Hook lengths of all cells, row by row.
    std::vector<int> hook_lengths() const;

    /// Number of standard Young tableaux of this shape (hook length formula).
    Integer standard_tableaux_count() const;

    /// Centralizer order: prod over part sizes i of i^{m_i} * m_i!.
    Integer centralizer_order() const;

    long long content_sum() const; // sum of j - i over cells (i,j)
    long long b_statistic() const; // sum of (i-1) * lambda_i

    std::string to_string() const; // "(3,2,1)", "()" for empty

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

} // namespace qshuffle
