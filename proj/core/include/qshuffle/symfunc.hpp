#pragma once

#include <utility>

#include "qshuffle/partition.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/weights.hpp"

namespace qshuffle {

/// p_k(x) = sum of k-th powers; k >= 1.
Rational power_sum_eval(int k, const WeightVector& x);

/// p_lambda(x) = product over parts.
Rational power_sum_eval(const Partition& lambda, const WeightVector& x);

/// h_k(x) and e_k(x) from power sums by the Newton recurrences; k >= 0.
Rational complete_hom_eval(int k, const WeightVector& x);
Rational elementary_eval(int k, const WeightVector& x);

/// Products over parts.
Rational complete_hom_eval(const Partition& lambda, const WeightVector& x);
Rational elementary_eval(const Partition& lambda, const WeightVector& x);

/// Monomial symmetric m_lambda(x): sum of distinct monomials with exponent
/// multiset lambda.
Rational monomial_sym_eval(const Partition& lambda, const WeightVector& x);

/// Fundamental quasisymmetric L_alpha(x): weakly increasing index words of
/// length n with strict rises across the boundaries in S_alpha.
Rational quasisym_fundamental_eval(const Composition& alpha, const WeightVector& x);

/// Monomial quasisymmetric M_alpha(x): strictly increasing index tuples.
Rational quasisym_monomial_eval(const Composition& alpha, const WeightVector& x);

/// Straight and skew Schur evaluation by the h-determinant
/// det(h_{lambda_i - mu_j - i + j}). Requires mu contained in lambda.
Rational schur_eval(const Partition& lambda, const WeightVector& x);
Rational schur_skew_eval(const Partition& lambda, const Partition& mu, const WeightVector& x);

/// The connected skew shape with alpha_i cells in row i (top row first),
/// adjacent rows overlapping in exactly one column. Returned as (lambda, mu).
std::pair<Partition, Partition> ribbon_shape(const Composition& alpha);

/// Schur function of the ribbon of alpha.
Rational schur_ribbon_eval(const Composition& alpha, const WeightVector& x);

/// l_n(x) = (1/n) sum_{d|n} moebius(d) p_d(x)^{n/d}; n >= 1.
Rational lie_char_eval(int n, const WeightVector& x);

/// Plethystic evaluations p_k[l_i](x) and h_m[l_i](x).
Rational plethysm_power_lie_eval(int k, int i, const WeightVector& x);
Rational plethysm_h_lie_eval(int m, int i, const WeightVector& x);

/// s_lambda at q equal letters of weight 1/q:
/// f^lambda * prod_{cells} (q + content) / (n! q^n). Zero when rows exceed q.
Rational schur_principal(const Partition& lambda, int q);

} // namespace qshuffle
