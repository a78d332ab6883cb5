#include "qshuffle/laws.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qshuffle/distribution.hpp"
#include "qshuffle/enumerate.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/symfunc.hpp"
#include "qshuffle/tableau.hpp"

namespace qshuffle {

namespace {

// multiplicity of each part size 1..n in lambda
std::vector<int> part_multiplicities(const Partition& lambda, int n) {
    std::vector<int> mult(static_cast<size_t>(n) + 1, 0);
    for (int p : lambda.parts()) ++mult[static_cast<size_t>(p)];
    return mult;
}

Polynomial lambda_poly_by_statistic(int n, const WeightVector& x, bool use_inv) {
    DistributionOnSn dist = exact_distribution(n, x);
    Polynomial acc;
    for (std::uint64_t r = 0; r < dist.support_size(); ++r) {
        const Rational& p = dist.at_rank(r);
        if (p == 0) continue;
        PermStats st = perm_stats(lehmer_unrank(n, r));
        long long exponent = use_inv ? st.inv : st.maj;
        acc += Polynomial::monomial(static_cast<int>(exponent), p);
    }
    return acc;
}

Polynomial lambda_poly_by_multiset(int n, const WeightVector& x) {
    Polynomial acc;
    for (const Partition& lam : partitions_of(n)) {
        Rational m = monomial_sym_eval(lam, x);
        if (m == 0) continue;
        acc += q_multinomial(n, lam.parts()) * m;
    }
    return acc;
}

Polynomial lambda_poly_by_schur(int n, const WeightVector& x) {
    Polynomial numerator_product = one_minus_t_power_product(n);
    Polynomial acc;
    for (const Partition& lam : partitions_of(n)) {
        Rational s = schur_eval(lam, x);
        if (s == 0) continue;
        Polynomial hooks = Polynomial::constant(1);
        for (int h : lam.hook_lengths())
            hooks = hooks * (Polynomial::constant(1) - Polynomial::monomial(h));
        // the quotient is the t-analog of the hook-length formula; a nonzero
        // remainder would falsify it, so the division is allowed to throw
        Polynomial quotient = numerator_product.exact_divide(hooks);
        acc += quotient.times_t_power(static_cast<int>(lam.b_statistic())) * s;
    }
    return acc;
}

Polynomial lambda_poly_by_power_sum(int n, const WeightVector& x) {
    // common denominator Q = prod_k (1-t^k)^{floor(n/k) - 1} after cancelling
    // one full (1-t)...(1-t^n) against the numerator product
    std::vector<int> max_mult(static_cast<size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) max_mult[static_cast<size_t>(k)] = n / k;
    Polynomial numer_sum;
    for (const Partition& lam : partitions_of(n)) {
        Rational coeff = power_sum_eval(lam, x) / Rational(lam.centralizer_order());
        if (coeff == 0) continue;
        std::vector<int> mult = part_multiplicities(lam, n);
        Polynomial term = Polynomial::constant(coeff);
        for (int k = 1; k <= n; ++k) {
            Polynomial factor = Polynomial::constant(1) - Polynomial::monomial(k);
            for (int e = 0; e < max_mult[static_cast<size_t>(k)] - mult[static_cast<size_t>(k)];
                 ++e)
                term = term * factor;
        }
        numer_sum += term;
    }
    Polynomial q_reduced = Polynomial::constant(1);
    for (int k = 1; k <= n; ++k) {
        Polynomial factor = Polynomial::constant(1) - Polynomial::monomial(k);
        for (int e = 0; e < max_mult[static_cast<size_t>(k)] - 1; ++e)
            q_reduced = q_reduced * factor;
    }
    // exact by the theorem being checked; fail loudly otherwise
    return numer_sum.exact_divide(q_reduced);
}

} // namespace

MajInvReport maj_inv_report(int n, const WeightVector& x) {
    if (n < 1) throw std::invalid_argument("maj/inv report requires n >= 1");
    MajInvReport report;
    report.n = n;
    report.direct_available = n <= caps().factorial;
    if (report.direct_available) {
        report.by_maj = lambda_poly_by_statistic(n, x, false);
        report.by_inv = lambda_poly_by_statistic(n, x, true);
    }
    report.by_multiset = lambda_poly_by_multiset(n, x);
    report.by_schur = lambda_poly_by_schur(n, x);
    report.by_power_sum = lambda_poly_by_power_sum(n, x);
    report.all_equal = report.by_multiset == report.by_schur &&
                       report.by_multiset == report.by_power_sum;
    if (report.direct_available)
        report.all_equal = report.all_equal && report.by_maj == report.by_multiset &&
                           report.by_inv == report.by_multiset;
    return report;
}

CauchySeriesCheck cauchy_series_check(int n_max, const WeightVector& x) {
    if (n_max < 0) throw std::invalid_argument("series check requires n_max >= 0");
    require_partition_sum_cap(n_max, "series check");
    CauchySeriesCheck out;
    out.n_max = n_max;
    const int t_order = n_max * (n_max - 1) / 2;
    out.t_order = t_order;

    // left side: coefficient of z^n is Lambda_n(t) / prod_{i<=n}(1-t^i)
    std::vector<Polynomial> lhs(static_cast<size_t>(n_max) + 1);
    lhs[0] = Polynomial::constant(1);
    for (int n = 1; n <= n_max; ++n)
        lhs[static_cast<size_t>(n)] =
            (lambda_poly_by_multiset(n, x) * inverse_poch_series(n, t_order))
                .truncated(t_order);

    // right side: product over i of prod_j sum_k (t^{i-1} x_j z)^k; factors
    // with i-1 > t_order are the identity at this truncation order
    std::vector<Polynomial> rhs(static_cast<size_t>(n_max) + 1);
    rhs[0] = Polynomial::constant(1);
    for (int i = 1; i <= t_order + 1; ++i) {
        for (int j = 0; j < x.size(); ++j) {
            if (x[j] == 0) continue;
            std::vector<Polynomial> next(static_cast<size_t>(n_max) + 1);
            for (int m = 0; m <= n_max; ++m) {
                Polynomial acc;
                Rational xp = 1; // x_j^k
                for (int k = 0; k <= m; ++k) {
                    if ((i - 1) * k <= t_order && !rhs[static_cast<size_t>(m - k)].is_zero())
                        acc += rhs[static_cast<size_t>(m - k)].times_t_power((i - 1) * k) * xp;
                    xp *= x[j];
                }
                next[static_cast<size_t>(m)] = acc.truncated(t_order);
            }
            rhs = std::move(next);
        }
    }

    out.equal = true;
    for (int m = 0; m <= n_max && out.equal; ++m) {
        for (int k = 0; k <= t_order; ++k) {
            Rational l = lhs[static_cast<size_t>(m)].at(k);
            Rational r = rhs[static_cast<size_t>(m)].at(k);
            if (l != r) {
                out.equal = false;
                out.mismatch_z = m;
                out.mismatch_t = k;
                out.lhs_coeff = l;
                out.rhs_coeff = r;
                break;
            }
        }
    }
    return out;
}

MomentReport maj_moments(int n, const WeightVector& x) {
    if (n < 1) throw std::invalid_argument("moments require n >= 1");
    MomentReport report;
    report.n = n;
    Polynomial lambda_poly = n <= caps().factorial ? lambda_poly_by_statistic(n, x, false)
                                                   : lambda_poly_by_multiset(n, x);
    Polynomial d1 = lambda_poly.derivative();
    report.e_maj = d1.evaluate(1);
    report.e_maj_factorial2 = d1.derivative().evaluate(1);

    Rational p2 = power_sum_eval(2, x);
    Rational p3 = power_sum_eval(3, x);
    report.e_u_maj = Rational(binomial(n, 2)) / 2;
    report.e_u_maj_factorial2 =
        Rational(Integer(n) * (n - 1) * (n - 2) * (9 * Integer(n) + 13), 144);
    report.formula_e_maj = report.e_u_maj - Rational(binomial(n, 2)) / 2 * p2;
    report.formula_e_maj_factorial2 = report.e_u_maj_factorial2 -
                                      Rational(3) * Rational(binomial(n + 1, 4)) * p2 +
                                      Rational(4, 3) * Rational(binomial(n, 3)) * p3 +
                                      Rational(3, 2) * Rational(binomial(n, 4)) * p2 * p2;
    report.equal = report.e_maj == report.formula_e_maj &&
                   report.e_maj_factorial2 == report.formula_e_maj_factorial2;
    return report;
}

std::vector<std::pair<Partition, Rational>> cycle_type_distribution(int n,
                                                                    const WeightVector& x) {
    if (n < 1) throw std::invalid_argument("cycle law requires n >= 1");
    std::vector<std::pair<Partition, Rational>> out;
    for (const Partition& lam : partitions_of(n)) {
        std::vector<int> mult = part_multiplicities(lam, n);
        Rational prob = 1;
        for (int i = 1; i <= n; ++i)
            if (mult[static_cast<size_t>(i)] > 0)
                prob *= plethysm_h_lie_eval(mult[static_cast<size_t>(i)], i, x);
        out.emplace_back(lam, std::move(prob));
    }
    return out;
}

RSKReport rsk_laws(int n, const WeightVector& x) {
    if (n < 1) throw std::invalid_argument("insertion laws require n >= 1");
    RSKReport report;
    std::map<Partition, Rational> schur_cache;
    for (const Partition& lam : partitions_of(n)) {
        Rational s = schur_eval(lam, x);
        schur_cache[lam] = s;
        report.shape_probs.emplace_back(lam, Rational(lam.standard_tableaux_count()) * s);
    }
    if (n <= caps().factorial) {
        std::map<Tableau, Rational> fiber;
        DistributionOnSn dist = exact_distribution(n, x);
        for (std::uint64_t r = 0; r < dist.support_size(); ++r)
            fiber[rsk(lehmer_unrank(n, r)).recording] += dist.at_rank(r);
        report.per_tableau_checked = true;
        report.per_tableau_ok = true;
        for (const Partition& lam : partitions_of(n)) {
            for (const Tableau& t : standard_tableaux(lam)) {
                auto it = fiber.find(t);
                Rational got = it == fiber.end() ? Rational(0) : it->second;
                if (got != schur_cache[lam]) report.per_tableau_ok = false;
            }
        }
    }
    return report;
}

std::vector<std::pair<Composition, Rational>> descent_set_distribution(int n,
                                                                       const WeightVector& x) {
    if (n < 1) throw std::invalid_argument("descent law requires n >= 1");
    std::vector<std::pair<Composition, Rational>> out;
    for (const Composition& alpha : compositions_of(n))
        out.emplace_back(alpha, schur_ribbon_eval(alpha, x));
    return out;
}

Rational expected_lis(int n, const WeightSpec& spec) {
    if (n < 1) throw std::invalid_argument("expected LIS requires n >= 1");
    require_partition_sum_cap(n, "expected LIS");
    Rational acc = 0;
    if (spec.kind() == WeightSpec::Kind::uniform_q) {
        for (const Partition& lam : partitions_of(n))
            acc += Rational(lam.part(1)) * Rational(lam.standard_tableaux_count()) *
                   schur_principal(lam, spec.q());
        return acc;
    }
    WeightVector x = spec.materialize();
    for (const Partition& lam : partitions_of(n))
        acc += Rational(lam.part(1)) * Rational(lam.standard_tableaux_count()) *
               schur_eval(lam, x);
    return acc;
}

Rational expected_lis_uniform_limit(int n) {
    if (n < 1) throw std::invalid_argument("expected LIS requires n >= 1");
    require_partition_sum_cap(n, "expected LIS");
    Rational acc = 0;
    for (const Partition& lam : partitions_of(n)) {
        Integer f = lam.standard_tableaux_count();
        acc += Rational(lam.part(1)) * Rational(f) * Rational(f);
    }
    return acc / Rational(factorial(n));
}

Rational f1_value(int n, bool reverse_order) {
    if (n < 1) throw std::invalid_argument("f1 requires n >= 1");
    require_partition_sum_cap(n, "f1 coefficient");
    std::vector<Partition> shapes = partitions_of(n);
    if (reverse_order) std::reverse(shapes.begin(), shapes.end());
    Rational acc = 0;
    for (const Partition& lam : shapes) {
        long long csum = lam.content_sum();
        if (csum == 0) continue;
        Integer f = lam.standard_tableaux_count();
        acc += Rational(lam.part(1)) * Rational(f) * Rational(f) * Rational(csum);
    }
    return acc / Rational(factorial(n));
}

std::vector<F1Row> f1_table(int n_max) {
    if (n_max < 1) throw std::invalid_argument("f1 table requires n_max >= 1");
    require_partition_sum_cap(n_max, "f1 table");
    std::vector<F1Row> rows;
    rows.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        F1Row row;
        row.n = n;
        row.f1 = f1_value(n);
        row.f1_over_n = row.f1 / n;
        row.f1_over_n_decimal = decimal_string(row.f1_over_n, 6);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace qshuffle
