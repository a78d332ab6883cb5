#pragma once

#include <vector>

#include "qshuffle/permutation.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/weights.hpp"

namespace qshuffle {

/// A measure on S_n stored densely by Lehmer rank. Factories that take
/// probability weight vectors produce total mass exactly 1; a truncated
/// geometric input yields total (1 - tail)^n instead.
class DistributionOnSn {
public:
    DistributionOnSn(int n, std::vector<Rational> probs_by_rank);

    static DistributionOnSn point_mass(const Permutation& w);

    int n() const { return n_; }
    std::uint64_t support_size() const { return probs_.size(); }
    const Rational& at_rank(std::uint64_t rank) const { return probs_[rank]; }
    const Rational& prob(const Permutation& w) const { return probs_[lehmer_rank(w)]; }

    Rational total() const;

    bool operator==(const DistributionOnSn&) const = default;

private:
    int n_;
    std::vector<Rational> probs_;
};

/// Probability that the standardization of n letters drawn independently
/// from x equals w: the fundamental quasisymmetric function of the descent
/// composition of w's inverse.
Rational prob_of(const Permutation& w, const WeightVector& x);

/// prob_of for every w in S_n. Guarded by the factorial cap.
DistributionOnSn exact_distribution(int n, const WeightVector& x);

/// Independent brute force: iterate all |x|^n words, standardize each, and
/// accumulate the word weights. Guarded by the oracle word budget.
DistributionOnSn oracle_distribution(int n, const WeightVector& x);

/// Closed forms for the two structured weight families:
/// uniform on q letters:  C(q - des(w^-1) + n - 1, n) / q^n
/// geometric parameter t: t^{e(w^-1)} (1-t)^n / prod_{i=1}^{n} (1-t^i)
/// where e(u) is the major index of u conjugated by the longest element.
/// Explicit-list specs are rejected; use prob_of.
Rational closed_form_prob(const Permutation& w, const WeightSpec& spec);

/// (1/2) sum_w |d1(w) - d2(w)|, exact.
Rational total_variation(const DistributionOnSn& d1, const DistributionOnSn& d2);

} // namespace qshuffle
