#include "qshuffle/walk.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qshuffle/enumerate.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/symfunc.hpp"

namespace qshuffle {

TransitionMatrix::TransitionMatrix(int n, std::vector<std::vector<Rational>> entries)
    : n_(n), entries_(std::move(entries)) {
    const std::uint64_t d = factorial_u64(n);
    if (entries_.size() != d) throw std::invalid_argument("matrix dimension must be n!");
    for (const auto& row : entries_)
        if (row.size() != d) throw std::invalid_argument("matrix must be square");
}

Rational TransitionMatrix::row_sum(std::uint64_t u) const {
    Rational s = 0;
    for (const auto& v : entries_[u]) s += v;
    return s;
}

Rational TransitionMatrix::col_sum(std::uint64_t v) const {
    Rational s = 0;
    for (const auto& row : entries_) s += row[v];
    return s;
}

TransitionMatrix TransitionMatrix::multiply(const TransitionMatrix& other) const {
    if (n_ != other.n_) throw std::domain_error("matrix product requires matching n");
    const std::uint64_t d = dim();
    std::vector<std::vector<Rational>> prod(d, std::vector<Rational>(d));
    for (std::uint64_t i = 0; i < d; ++i)
        for (std::uint64_t k = 0; k < d; ++k) {
            const Rational& a = entries_[i][k];
            if (a == 0) continue;
            for (std::uint64_t j = 0; j < d; ++j) {
                if (other.entries_[k][j] == 0) continue;
                prod[i][j] += a * other.entries_[k][j];
            }
        }
    return TransitionMatrix(n_, std::move(prod));
}

TransitionMatrix transition_matrix(int n, const WeightVector& x) {
    require_matrix_cap(n, "transition matrix");
    DistributionOnSn step = exact_distribution(n, x);
    const std::uint64_t d = factorial_u64(n);
    std::vector<Permutation> perms;
    perms.reserve(d);
    for (std::uint64_t r = 0; r < d; ++r) perms.push_back(lehmer_unrank(n, r));
    std::vector<std::vector<Rational>> entries(d, std::vector<Rational>(d));
    for (std::uint64_t u = 0; u < d; ++u) {
        Permutation u_inv = perms[u].inverse();
        for (std::uint64_t v = 0; v < d; ++v)
            entries[u][v] = step.at_rank(lehmer_rank(u_inv.compose(perms[v])));
    }
    return TransitionMatrix(n, std::move(entries));
}

DistributionOnSn convolve(const DistributionOnSn& d1, const DistributionOnSn& d2) {
    if (d1.n() != d2.n()) throw std::domain_error("convolution requires matching n");
    const int n = d1.n();
    const std::uint64_t d = d1.support_size();
    std::vector<Permutation> perms;
    perms.reserve(d);
    for (std::uint64_t r = 0; r < d; ++r) perms.push_back(lehmer_unrank(n, r));
    std::vector<Rational> probs(d);
    for (std::uint64_t u = 0; u < d; ++u) {
        if (d1.at_rank(u) == 0) continue;
        for (std::uint64_t v = 0; v < d; ++v) {
            if (d2.at_rank(v) == 0) continue;
            probs[lehmer_rank(perms[u].compose(perms[v]))] += d1.at_rank(u) * d2.at_rank(v);
        }
    }
    return DistributionOnSn(n, std::move(probs));
}

Permutation bhr_step(const std::vector<std::vector<int>>& blocks, const Permutation& region) {
    const int n = region.n();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    int covered = 0;
    for (const auto& block : blocks) {
        if (block.empty()) throw std::domain_error("face blocks must be nonempty");
        for (int a : block) {
            if (a < 1 || a > n || seen[a]) throw std::domain_error("face must partition {1..n}");
            seen[a] = 1;
            ++covered;
        }
    }
    if (covered != n) throw std::domain_error("face must partition {1..n}");

    // the region word lists coordinates from smallest to largest; the move
    // emits block 1 first, then block 2, ..., each block kept in the input
    // word's order
    std::vector<int> position(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) position[static_cast<size_t>(region(i))] = i;
    std::vector<int> word;
    word.reserve(static_cast<size_t>(n));
    for (const auto& block : blocks) {
        std::vector<int> ordered = block;
        std::sort(ordered.begin(), ordered.end(), [&](int a, int b) {
            return position[static_cast<size_t>(a)] < position[static_cast<size_t>(b)];
        });
        word.insert(word.end(), ordered.begin(), ordered.end());
    }
    return Permutation(std::move(word));
}

Rational face_weight(const std::vector<std::vector<int>>& blocks, const WeightVector& x) {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& block : blocks) sizes.push_back(static_cast<int>(block.size()));
    return quasisym_monomial_eval(Composition(std::move(sizes)), x);
}

TransitionMatrix bhr_transition_matrix(int n, const WeightVector& x) {
    require_bhr_cap(n, "face walk matrix");
    require_matrix_cap(n, "face walk matrix");
    const std::uint64_t d = factorial_u64(n);
    std::vector<Permutation> perms;
    perms.reserve(d);
    for (std::uint64_t r = 0; r < d; ++r) perms.push_back(lehmer_unrank(n, r));
    std::vector<std::vector<Rational>> entries(d, std::vector<Rational>(d));
    for (const auto& blocks : ordered_set_partitions(n)) {
        Rational wt = face_weight(blocks, x);
        if (wt == 0) continue;
        // a move from region word v to region word u carries weight
        // prob_of(u^{-1} v), so charging entry (result, start) reproduces
        // transition_matrix exactly
        for (std::uint64_t v = 0; v < d; ++v)
            entries[lehmer_rank(bhr_step(blocks, perms[v]))][v] += wt;
    }
    return TransitionMatrix(n, std::move(entries));
}

SpectralReport spectral_check(int n, const WeightVector& x, int max_power) {
    require_matrix_cap(n, "spectral check");
    if (max_power < 1 || max_power > 4)
        throw std::invalid_argument("trace powers supported for 1 <= k <= 4");

    SpectralReport report;
    report.n = n;

    const Integer nfact = factorial(n);
    for (const Partition& lam : partitions_of(n)) {
        SpectralEigenvalue ev{lam, power_sum_eval(lam, x), nfact / lam.centralizer_order()};
        report.expected.push_back(std::move(ev));
    }

    // integer-scaled matrix: M = D * Gamma with D the common denominator of
    // the n! step probabilities, so traces stay in exact integer arithmetic
    DistributionOnSn step = exact_distribution(n, x);
    const std::uint64_t d = factorial_u64(n);
    Integer D = 1;
    for (std::uint64_t r = 0; r < d; ++r) D = lcm(D, denominator(step.at_rank(r)));
    std::vector<Permutation> perms;
    perms.reserve(d);
    for (std::uint64_t r = 0; r < d; ++r) perms.push_back(lehmer_unrank(n, r));
    std::vector<std::vector<Integer>> m(d, std::vector<Integer>(d));
    std::vector<Integer> scaled(d);
    for (std::uint64_t r = 0; r < d; ++r)
        scaled[r] = numerator(step.at_rank(r)) * (D / denominator(step.at_rank(r)));
    for (std::uint64_t u = 0; u < d; ++u) {
        Permutation u_inv = perms[u].inverse();
        for (std::uint64_t v = 0; v < d; ++v)
            m[u][v] = scaled[lehmer_rank(u_inv.compose(perms[v]))];
    }

    std::vector<std::vector<Integer>> m2;
    if (max_power >= 2) {
        m2.assign(d, std::vector<Integer>(d));
        for (std::uint64_t i = 0; i < d; ++i)
            for (std::uint64_t k = 0; k < d; ++k) {
                if (m[i][k] == 0) continue;
                const Integer& a = m[i][k];
                for (std::uint64_t j = 0; j < d; ++j) m2[i][j] += a * m[k][j];
            }
    }

    auto trace_power = [&](int k) -> Rational {
        Integer t = 0;
        switch (k) {
            case 1:
                for (std::uint64_t i = 0; i < d; ++i) t += m[i][i];
                break;
            case 2:
                for (std::uint64_t i = 0; i < d; ++i) t += m2[i][i];
                break;
            case 3:
                for (std::uint64_t i = 0; i < d; ++i)
                    for (std::uint64_t j = 0; j < d; ++j) t += m2[i][j] * m[j][i];
                break;
            case 4:
                for (std::uint64_t i = 0; i < d; ++i)
                    for (std::uint64_t j = 0; j < d; ++j) t += m2[i][j] * m2[j][i];
                break;
            default:
                throw std::logic_error("unsupported trace power");
        }
        return Rational(t, pow(D, static_cast<unsigned>(k)));
    };

    report.traces_ok = true;
    for (int k = 1; k <= max_power; ++k) {
        TraceCheck check;
        check.k = k;
        check.lhs = trace_power(k);
        check.rhs = 0;
        for (const auto& ev : report.expected)
            check.rhs += Rational(ev.multiplicity) *
                         pow_rational(ev.value, static_cast<unsigned long>(k));
        check.equal = check.lhs == check.rhs;
        report.traces_ok = report.traces_ok && check.equal;
        report.trace_checks.push_back(std::move(check));
    }

    if (d <= 720) {
        Eigen::MatrixXd gamma(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (std::uint64_t u = 0; u < d; ++u)
            for (std::uint64_t v = 0; v < d; ++v)
                gamma(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) =
                    to_double(Rational(m[u][v], D));
        Eigen::EigenSolver<Eigen::MatrixXd> solver(gamma, /*computeEigenvectors=*/false);
        std::vector<std::complex<double>> computed(
            solver.eigenvalues().data(), solver.eigenvalues().data() + d);
        std::vector<double> expected_flat;
        for (const auto& ev : report.expected) {
            double value = to_double(ev.value);
            for (Integer i = 0; i < ev.multiplicity; ++i) expected_flat.push_back(value);
        }
        std::sort(expected_flat.begin(), expected_flat.end());
        std::sort(computed.begin(), computed.end(),
                  [](const std::complex<double>& a, const std::complex<double>& b) {
                      return a.real() < b.real();
                  });
        double max_dev = 0.0;
        for (std::uint64_t i = 0; i < d; ++i)
            max_dev = std::max(max_dev, std::abs(computed[i] - expected_flat[i]));
        report.numeric_done = true;
        report.numeric_max_abs_dev = max_dev;
        report.numeric_ok = max_dev < 1e-8;
    }

    return report;
}

} // namespace qshuffle
