#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qshuffle/partition.hpp"

namespace qshuffle {

/// A permutation of {1..n} in one-line notation: word[i-1] = w(i).
/// Immutable after construction; all operations below are pure.
class Permutation {
public:
    /// Validates that `word` is a bijection on {1..n}, n >= 1.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    /// Accepts the compact form "213" (digits only, n <= 9) or the comma
    /// form "2,1,3" for any n.
    static Permutation parse(std::string_view one_line);

    int n() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; } // 1-based
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;

    /// w0 w w0 with w0(i) = n+1-i; one-line: v_i = n+1 - w_{n+1-i}.
    Permutation conjugate_by_longest() const;

    /// Function composition: (*this after other), i -> this(other(i)).
    Permutation compose(const Permutation& other) const;

    std::string to_string() const; // "213" for n <= 9, "2,1,3" otherwise

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}
    std::vector<int> word_;

    friend Permutation lehmer_unrank(int n, std::uint64_t rank);
    friend Permutation standardize(std::span<const int> seq);
};

/// Everything the enumerative laws need to know about a single permutation.
struct PermStats {
    std::vector<int> descent_set;        // D(w) subset of {1..n-1}
    Composition descent_composition;     // co(w), with S_co(w) = D(w)
    long long maj = 0;
    long long inv = 0;
    int des = 0;
    std::vector<int> cycle_type;         // partition of n, weakly decreasing
    int lis_length = 0;                  // longest strictly increasing subsequence
};

PermStats perm_stats(const Permutation& w);

/// Bundle consumed by the closed-form probabilities: both closed forms are
/// statistics of the inverse, the geometric one through the conjugate
/// w0 w^{-1} w0 and its major index.
struct InverseComplement {
    Permutation w_inverse;
    Permutation w_inverse_bar; // w0 w^{-1} w0
    long long e_of_inverse;    // maj(w_inverse_bar)
};

InverseComplement inverse_and_complement(const Permutation& w);

/// Standardization of a word over a totally ordered alphabet: occurrences of
/// the smallest letter become 1..a_1 left to right, the next letter
/// a_1+1..a_1+a_2, and so on. Preserves maj and inv of the word.
/// Throws std::domain_error on an empty sequence.
Permutation standardize(std::span<const int> seq);

/// maj and inv of an arbitrary word (ties are non-descents/non-inversions).
long long word_maj(std::span<const int> seq);
long long word_inv(std::span<const int> seq);

/// Dense indexing of S_n by Lehmer code, identity -> 0. Requires n <= 20.
std::uint64_t lehmer_rank(const Permutation& w);
Permutation lehmer_unrank(int n, std::uint64_t rank);

/// n! as uint64_t, n <= 20.
std::uint64_t factorial_u64(int n);

} // namespace qshuffle
