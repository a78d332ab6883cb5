#include "qshuffle/symfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qshuffle/enumerate.hpp"

namespace qshuffle {

namespace {

// h_0..h_max or e_0..e_max from the Newton recurrences
//   k h_k = sum_{i=1}^{k} p_i h_{k-i},  k e_k = sum_{i=1}^{k} (-1)^{i-1} p_i e_{k-i}
std::vector<Rational> newton_series(int max, const WeightVector& x, bool elementary) {
    std::vector<Rational> powers(static_cast<size_t>(max) + 1);
    std::vector<Rational> xpow(x.weights().begin(), x.weights().end());
    for (int k = 1; k <= max; ++k) {
        Rational pk = 0;
        for (auto& v : xpow) pk += v;
        powers[static_cast<size_t>(k)] = pk;
        for (size_t i = 0; i < xpow.size(); ++i) xpow[i] *= x[static_cast<int>(i)];
    }
    std::vector<Rational> out(static_cast<size_t>(max) + 1);
    out[0] = 1;
    for (int k = 1; k <= max; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) {
            Rational term = powers[static_cast<size_t>(i)] * out[static_cast<size_t>(k - i)];
            if (elementary && i % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        out[static_cast<size_t>(k)] = acc / k;
    }
    return out;
}

} // namespace

Rational power_sum_eval(int k, const WeightVector& x) {
    if (k < 1) throw std::invalid_argument("power sum index must be >= 1");
    Rational s = 0;
    for (const auto& w : x.weights()) s += pow_rational(w, static_cast<unsigned long>(k));
    return s;
}

Rational power_sum_eval(const Partition& lambda, const WeightVector& x) {
    Rational prod = 1;
    for (int p : lambda.parts()) prod *= power_sum_eval(p, x);
    return prod;
}

Rational complete_hom_eval(int k, const WeightVector& x) {
    if (k < 0) return 0;
    return newton_series(k, x, false)[static_cast<size_t>(k)];
}

Rational elementary_eval(int k, const WeightVector& x) {
    if (k < 0) return 0;
    return newton_series(k, x, true)[static_cast<size_t>(k)];
}

Rational complete_hom_eval(const Partition& lambda, const WeightVector& x) {
    if (lambda.num_parts() == 0) return 1;
    auto h = newton_series(lambda.part(1), x, false);
    Rational prod = 1;
    for (int p : lambda.parts()) prod *= h[static_cast<size_t>(p)];
    return prod;
}

Rational elementary_eval(const Partition& lambda, const WeightVector& x) {
    if (lambda.num_parts() == 0) return 1;
    auto e = newton_series(lambda.part(1), x, true);
    Rational prod = 1;
    for (int p : lambda.parts()) prod *= e[static_cast<size_t>(p)];
    return prod;
}

Rational quasisym_monomial_eval(const Composition& alpha, const WeightVector& x) {
    const auto& parts = alpha.parts();
    const int m = x.size();
    // dp[i] = sum over strictly increasing index tuples ending at variable i
    // of the monomial for the parts consumed so far
    std::vector<Rational> dp(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        dp[static_cast<size_t>(i)] = pow_rational(x[i], static_cast<unsigned long>(parts[0]));
    for (size_t j = 1; j < parts.size(); ++j) {
        std::vector<Rational> next(static_cast<size_t>(m));
        Rational prefix = 0; // sum of dp[i'] for i' < i
        for (int i = 0; i < m; ++i) {
            next[static_cast<size_t>(i)] =
                prefix * pow_rational(x[i], static_cast<unsigned long>(parts[j]));
            prefix += dp[static_cast<size_t>(i)];
        }
        dp = std::move(next);
    }
    Rational total = 0;
    for (const auto& v : dp) total += v;
    return total;
}

Rational quasisym_fundamental_eval(const Composition& alpha, const WeightVector& x) {
    const int n = alpha.size();
    const int m = x.size();
    std::vector<int> subset = alpha.subset();
    std::vector<char> strict(static_cast<size_t>(n) + 1, 0);
    for (int s : subset) strict[static_cast<size_t>(s)] = 1;
    // dp[i] = weight of weakly increasing prefixes ending with letter i+1
    std::vector<Rational> dp(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) dp[static_cast<size_t>(i)] = x[i];
    for (int pos = 2; pos <= n; ++pos) {
        const bool need_strict = strict[static_cast<size_t>(pos - 1)] != 0;
        std::vector<Rational> next(static_cast<size_t>(m));
        Rational run = 0; // sum of dp[i'] over allowed predecessors
        for (int i = 0; i < m; ++i) {
            if (!need_strict) run += dp[static_cast<size_t>(i)];
            next[static_cast<size_t>(i)] = run * x[i];
            if (need_strict) run += dp[static_cast<size_t>(i)];
        }
        dp = std::move(next);
    }
    Rational total = 0;
    for (const auto& v : dp) total += v;
    return total;
}

Rational monomial_sym_eval(const Partition& lambda, const WeightVector& x) {
    if (lambda.num_parts() == 0) return 1;
    std::vector<int> parts = lambda.parts();
    std::sort(parts.begin(), parts.end()); // next_permutation wants ascending start
    Rational total = 0;
    do {
        total += quasisym_monomial_eval(Composition(parts), x);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return total;
}

namespace {

Rational determinant(std::vector<std::vector<Rational>> a) {
    const size_t n = a.size();
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv_pivot = Rational(1) / a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational factor = a[r][col] * inv_pivot;
            for (size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

} // namespace

Rational schur_skew_eval(const Partition& lambda, const Partition& mu, const WeightVector& x) {
    if (!lambda.contains(mu)) throw std::domain_error("skew shape requires mu inside lambda");
    const int rows = lambda.num_parts();
    if (rows == 0) return 1;
    auto h = newton_series(lambda.part(1) + rows, x, false);
    auto h_at = [&](int k) -> Rational {
        if (k < 0) return 0;
        return h[static_cast<size_t>(k)];
    };
    std::vector<std::vector<Rational>> a(static_cast<size_t>(rows),
                                         std::vector<Rational>(static_cast<size_t>(rows)));
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= rows; ++j)
            a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                h_at(lambda.part(i) - mu.part(j) - i + j);
    return determinant(std::move(a));
}

Rational schur_eval(const Partition& lambda, const WeightVector& x) {
    return schur_skew_eval(lambda, Partition{}, x);
}

std::pair<Partition, Partition> ribbon_shape(const Composition& alpha) {
    const auto& a = alpha.parts();
    const int k = alpha.num_parts();
    // leftmost column of row i: the bottom row starts at column 1 and each row
    // above starts where the row below ends
    std::vector<int> start(static_cast<size_t>(k));
    start[static_cast<size_t>(k - 1)] = 1;
    for (int i = k - 2; i >= 0; --i)
        start[static_cast<size_t>(i)] =
            start[static_cast<size_t>(i + 1)] + a[static_cast<size_t>(i + 1)] - 1;
    std::vector<int> lam, mu;
    for (int i = 0; i < k; ++i)
        lam.push_back(start[static_cast<size_t>(i)] + a[static_cast<size_t>(i)] - 1);
    for (int i = 0; i < k; ++i)
        if (start[static_cast<size_t>(i)] > 1) mu.push_back(start[static_cast<size_t>(i)] - 1);
    return {Partition(std::move(lam)), Partition(std::move(mu))};
}

Rational schur_ribbon_eval(const Composition& alpha, const WeightVector& x) {
    auto [lam, mu] = ribbon_shape(alpha);
    return schur_skew_eval(lam, mu, x);
}

Rational lie_char_eval(int n, const WeightVector& x) {
    if (n < 1) throw std::invalid_argument("lie character index must be >= 1");
    Rational acc = 0;
    for (int d : divisors(n)) {
        int mu = moebius(d);
        if (mu == 0) continue;
        acc += Rational(mu) * pow_rational(power_sum_eval(d, x),
                                           static_cast<unsigned long>(n / d));
    }
    return acc / n;
}

Rational plethysm_power_lie_eval(int k, int i, const WeightVector& x) {
    if (k < 1 || i < 1) throw std::invalid_argument("plethysm indices must be >= 1");
    Rational acc = 0;
    for (int d : divisors(i)) {
        int mu = moebius(d);
        if (mu == 0) continue;
        acc += Rational(mu) * pow_rational(power_sum_eval(d * k, x),
                                           static_cast<unsigned long>(i / d));
    }
    return acc / i;
}

Rational plethysm_h_lie_eval(int m, int i, const WeightVector& x) {
    if (m < 0 || i < 1) throw std::invalid_argument("plethysm indices out of range");
    if (m == 0) return 1;
    Rational acc = 0;
    for (const Partition& mu : partitions_of(m)) {
        Rational term = Rational(1) / Rational(mu.centralizer_order());
        for (int part : mu.parts()) term *= plethysm_power_lie_eval(part, i, x);
        acc += term;
    }
    return acc;
}

Rational schur_principal(const Partition& lambda, int q) {
    if (q < 1) throw std::invalid_argument("principal specialization requires q >= 1");
    const int n = lambda.size();
    if (n == 0) return 1;
    Rational prod = lambda.standard_tableaux_count();
    for (int i = 1; i <= lambda.num_parts(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) prod *= Rational(q + j - i);
    return prod / (Rational(factorial(n)) * pow_rational(Rational(q), static_cast<unsigned long>(n)));
}

} // namespace qshuffle
