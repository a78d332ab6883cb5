#pragma once

#include <cstdint>
#include <vector>

#include "qshuffle/distribution.hpp"
#include "qshuffle/partition.hpp"
#include "qshuffle/permutation.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/weights.hpp"

namespace qshuffle {

/// Dense n! x n! matrix of exact transition probabilities, indexed by
/// Lehmer rank on both axes. entry(u, v) is the probability of stepping
/// from u to v, which depends only on u^{-1} v.
class TransitionMatrix {
public:
    TransitionMatrix(int n, std::vector<std::vector<Rational>> entries);

    int n() const { return n_; }
    std::uint64_t dim() const { return entries_.size(); }
    const Rational& entry(std::uint64_t u, std::uint64_t v) const { return entries_[u][v]; }
    const std::vector<std::vector<Rational>>& rows() const { return entries_; }

    Rational row_sum(std::uint64_t u) const;
    Rational col_sum(std::uint64_t v) const;

    TransitionMatrix multiply(const TransitionMatrix& other) const;

    bool operator==(const TransitionMatrix&) const = default;

private:
    int n_;
    std::vector<std::vector<Rational>> entries_;
};

/// The random walk whose step moves u to u w with probability prob_of(w, x):
/// entry(u, v) = prob_of(u^{-1} v, x). Guarded by the matrix cap.
TransitionMatrix transition_matrix(int n, const WeightVector& x);

/// Convolution of measures on S_n: out(w) = sum over u v = w of d1(u) d2(v),
/// with u v meaning the map i -> u(v(i)). Matches the matrix product:
/// transition(d1) * transition(d2) is the transition matrix of out.
DistributionOnSn convolve(const DistributionOnSn& d1, const DistributionOnSn& d2);

/// One face move of the hyperplane-arrangement walk. The face is an ordered
/// set partition of {1..n} over coordinate indices; the region is encoded as
/// its word: the permutation listing coordinate indices from the smallest
/// coordinate to the largest. The result lists block 1's coordinates first
/// (keeping their relative order in the input word), then block 2's, and so
/// on. Applying the same face twice equals applying it once.
Permutation bhr_step(const std::vector<std::vector<int>>& blocks, const Permutation& region);

/// Weight of a face: the monomial quasisymmetric function of its block-size
/// composition. Face weights over all ordered set partitions sum to 1.
Rational face_weight(const std::vector<std::vector<int>>& blocks, const WeightVector& x);

/// The face walk assembled by summing face weights over bhr_step moves: a
/// move from region word v to region word u carries total weight
/// prob_of(u^{-1} v, x), so each move is charged to entry (result, start).
/// Equals transition_matrix(n, x) entrywise. Guarded by the BHR cap.
TransitionMatrix bhr_transition_matrix(int n, const WeightVector& x);

struct SpectralEigenvalue {
    Partition lambda;
    Rational value;       // power sum of the weights at lambda
    Integer multiplicity; // n! / centralizer order
};

struct TraceCheck {
    int k;
    Rational lhs; // trace of the k-th matrix power
    Rational rhs; // sum of multiplicity * value^k
    bool equal;
};

struct SpectralReport {
    int n = 0;
    std::vector<SpectralEigenvalue> expected; // partitions in descending lex order
    std::vector<TraceCheck> trace_checks;
    bool traces_ok = false;
    bool numeric_done = false; // floating eigensolve runs for n <= 6
    bool numeric_ok = false;
    double numeric_max_abs_dev = 0.0;
};

/// Exact trace identities for matrix powers 1..max_power (max 4) plus a
/// floating eigenvalue cross-check. Guarded by the matrix cap.
SpectralReport spectral_check(int n, const WeightVector& x, int max_power);

} // namespace qshuffle
