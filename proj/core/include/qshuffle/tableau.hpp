#pragma once

#include <string>
#include <vector>

#include "qshuffle/partition.hpp"
#include "qshuffle/permutation.hpp"

namespace qshuffle {

/// A filling of a Young diagram with rows of weakly decreasing length.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows); // validates the shape only

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int size() const; // number of cells

    bool is_standard() const; // entries 1..n, rows and columns strictly increase
    bool is_semistandard() const; // rows weakly, columns strictly increase

    /// Descents of a standard tableau: i such that i+1 sits in a lower row.
    std::vector<int> descent_set() const;

    /// Row-insert v, bumping; returns the (row, column) of the new cell, 1-based.
    std::pair<int, int> row_insert(int v);

    /// Place v at the end of row r (1-based), extending the shape by one cell.
    void place(int r, int v);

    std::string to_string() const; // "[[1,3],[2]]"

    bool operator==(const Tableau&) const = default;
    auto operator<=>(const Tableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

struct RSKPair {
    Tableau insertion;  // P
    Tableau recording;  // Q
    Partition shape;
};

/// Row-insertion correspondence w -> (P, Q). For a permutation both
/// tableaux are standard and shape_1 equals the longest increasing
/// subsequence length of w.
RSKPair rsk(const Permutation& w);

/// All standard Young tableaux of the given shape, in generation order.
std::vector<Tableau> standard_tableaux(const Partition& shape);

/// All semistandard tableaux of the given shape with entries in {1..max_entry}.
std::vector<Tableau> semistandard_tableaux(const Partition& shape, int max_entry);

} // namespace qshuffle
