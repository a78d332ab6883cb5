#include "qshuffle/distribution.hpp"

#include <stdexcept>

#include "qshuffle/enumerate.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/polynomial.hpp"
#include "qshuffle/symfunc.hpp"

namespace qshuffle {

DistributionOnSn::DistributionOnSn(int n, std::vector<Rational> probs_by_rank)
    : n_(n), probs_(std::move(probs_by_rank)) {
    if (n < 1) throw std::invalid_argument("distribution requires n >= 1");
    if (probs_.size() != factorial_u64(n))
        throw std::invalid_argument("distribution must cover all of S_n");
    for (const auto& p : probs_)
        if (p < 0) throw std::invalid_argument("probabilities must be nonnegative");
}

DistributionOnSn DistributionOnSn::point_mass(const Permutation& w) {
    require_factorial_cap(w.n(), "point mass distribution");
    std::vector<Rational> probs(factorial_u64(w.n()));
    probs[lehmer_rank(w)] = 1;
    return DistributionOnSn(w.n(), std::move(probs));
}

Rational DistributionOnSn::total() const {
    Rational t = 0;
    for (const auto& p : probs_) t += p;
    return t;
}

Rational prob_of(const Permutation& w, const WeightVector& x) {
    PermStats inv_stats = perm_stats(w.inverse());
    return quasisym_fundamental_eval(inv_stats.descent_composition, x);
}

DistributionOnSn exact_distribution(int n, const WeightVector& x) {
    require_factorial_cap(n, "exact distribution");
    std::uint64_t total = factorial_u64(n);
    std::vector<Rational> probs(total);
    for (std::uint64_t r = 0; r < total; ++r)
        probs[r] = prob_of(lehmer_unrank(n, r), x);
    return DistributionOnSn(n, std::move(probs));
}

DistributionOnSn oracle_distribution(int n, const WeightVector& x) {
    if (n < 1) throw std::invalid_argument("oracle requires n >= 1");
    require_factorial_cap(n, "oracle distribution");
    std::vector<Rational> probs(factorial_u64(n));
    for_each_word(x.size(), n, [&](const std::vector<int>& word) {
        Rational weight = 1;
        for (int letter : word) weight *= x[letter - 1];
        if (weight == 0) return;
        probs[lehmer_rank(standardize(word))] += weight;
    });
    return DistributionOnSn(n, std::move(probs));
}

Rational closed_form_prob(const Permutation& w, const WeightSpec& spec) {
    const int n = w.n();
    InverseComplement ic = inverse_and_complement(w);
    switch (spec.kind()) {
        case WeightSpec::Kind::uniform_q: {
            const int q = spec.q();
            long long des = perm_stats(ic.w_inverse).des;
            Integer numer = binomial(q - des + n - 1, n);
            return Rational(numer, pow(Integer(q), static_cast<unsigned>(n)));
        }
        case WeightSpec::Kind::geometric: {
            const Rational& t = spec.t();
            Rational numer = pow_rational(t, static_cast<unsigned long>(ic.e_of_inverse)) *
                             pow_rational(Rational(1) - t, static_cast<unsigned long>(n));
            Rational denom = one_minus_t_power_product(n).evaluate(t);
            return numer / denom;
        }
        case WeightSpec::Kind::explicit_list:
            throw std::invalid_argument(
                "closed forms exist only for uniform and geometric weights");
    }
    throw std::logic_error("unreachable weight spec kind");
}

Rational total_variation(const DistributionOnSn& d1, const DistributionOnSn& d2) {
    if (d1.n() != d2.n())
        throw std::domain_error("total variation requires distributions on the same S_n");
    Rational acc = 0;
    for (std::uint64_t r = 0; r < d1.support_size(); ++r) {
        Rational diff = d1.at_rank(r) - d2.at_rank(r);
        acc += diff < 0 ? -diff : diff;
    }
    return acc / 2;
}

} // namespace qshuffle
