#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qshuffle/partition.hpp"
#include "qshuffle/polynomial.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/weights.hpp"

namespace qshuffle {

/// Five independent computations of the generating polynomial of the major
/// index (equivalently inversion count) under the letter-weight law:
///   1. sum over S_n of prob * t^maj         (needs the factorial cap)
///   2. same with t^inv                      (needs the factorial cap)
///   3. sum over partitions of the t-multinomial times m_lambda(x)
///   4. hook-quotient polynomials times s_lambda(x)
///   5. power-sum expansion, denominators cleared by one exact division
struct MajInvReport {
    int n = 0;
    bool direct_available = false;
    Polynomial by_maj;
    Polynomial by_inv;
    Polynomial by_multiset;
    Polynomial by_schur;
    Polynomial by_power_sum;
    bool all_equal = false; // over the routes that ran
};

MajInvReport maj_inv_report(int n, const WeightVector& x);

/// Both sides of the bivariate identity
///   sum_n Lambda_n(t) z^n / prod_{i<=n}(1-t^i)
///     = prod_{i>=1} prod_j (1 - t^{i-1} x_j z)^{-1}
/// expanded to z-order n_max and t-order C(n_max, 2), exact coefficients.
struct CauchySeriesCheck {
    int n_max = 0;
    int t_order = 0;
    bool equal = false;
    int mismatch_z = -1; // first differing coefficient when not equal
    int mismatch_t = -1;
    Rational lhs_coeff;
    Rational rhs_coeff;
};

CauchySeriesCheck cauchy_series_check(int n_max, const WeightVector& x);

/// First two factorial moments of maj: generating-polynomial derivatives at
/// t=1 against the closed forms, plus the uniform-law baselines.
struct MomentReport {
    int n = 0;
    Rational e_maj;                   // Lambda'(1)
    Rational e_maj_factorial2;        // Lambda''(1)
    Rational formula_e_maj;           // baseline - C(n,2) p_2 / 2
    Rational formula_e_maj_factorial2;
    Rational e_u_maj;                 // C(n,2) / 2
    Rational e_u_maj_factorial2;      // n(n-1)(n-2)(9n+13) / 144
    bool equal = false;
};

MomentReport maj_moments(int n, const WeightVector& x);

/// Law of the cycle type: lambda with part multiplicities m_i maps to
/// prod_i h_{m_i}[l_i](x). Partitions in descending lex order.
std::vector<std::pair<Partition, Rational>> cycle_type_distribution(int n,
                                                                    const WeightVector& x);

/// Insertion-correspondence laws: shape lambda has probability
/// f^lambda s_lambda(x); each standard tableau fiber refines its shape's
/// mass to s_lambda(x). The fiber used is the tableau recording insertion
/// order, whose descent set matches the permutation's own.
struct RSKReport {
    std::vector<std::pair<Partition, Rational>> shape_probs;
    bool per_tableau_checked = false; // fiber sums ran (needs the factorial cap)
    bool per_tableau_ok = false;
};

RSKReport rsk_laws(int n, const WeightVector& x);

/// Descent-set law: the probability of descent composition alpha is the
/// ribbon Schur function of alpha. Compositions ordered coarsest-first by
/// descent-subset bitmask.
std::vector<std::pair<Composition, Rational>> descent_set_distribution(int n,
                                                                       const WeightVector& x);

/// Expected longest-increasing-subsequence length: sum over shapes of
/// lambda_1 f^lambda s_lambda. Uniform specs evaluate the Schur factor by
/// the hook-content product, other specs by the determinant route.
Rational expected_lis(int n, const WeightSpec& spec);

/// Uniform-permutation limit: (1/n!) sum lambda_1 (f^lambda)^2.
Rational expected_lis_uniform_limit(int n);

/// First-order coefficient of the uniform-q expected LIS in 1/q:
/// F1(n) = (1/n!) sum over shapes of lambda_1 (f^lambda)^2 content_sum.
struct F1Row {
    int n = 0;
    Rational f1;
    Rational f1_over_n;
    std::string f1_over_n_decimal; // 6 places
};

std::vector<F1Row> f1_table(int n_max);

/// F1(n) alone, with a choice of partition enumeration order (the reversed
/// order revalidates that exact addition is order-independent).
Rational f1_value(int n, bool reverse_order = false);

} // namespace qshuffle
