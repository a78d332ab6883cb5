#pragma once

#include <string>
#include <vector>

#include "qshuffle/rational.hpp"

namespace qshuffle {

/// Dense univariate polynomial in t over the rationals.
/// Coefficient vectors carry no trailing zeros; the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(int degree, const Rational& c = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational at(int k) const; // coefficient of t^k, 0 beyond degree

    Polynomial operator+(const Polynomial&) const;
    Polynomial operator-(const Polynomial&) const;
    Polynomial operator*(const Polynomial&) const;
    Polynomial operator*(const Rational&) const;
    Polynomial& operator+=(const Polynomial&);
    Polynomial& operator-=(const Polynomial&);

    /// Quotient of an exact division; throws std::domain_error when the
    /// divisor does not divide this polynomial.
    Polynomial exact_divide(const Polynomial& divisor) const;

    Polynomial truncated(int max_degree) const; // drop terms above max_degree
    Polynomial times_t_power(int k) const;      // multiply by t^k

    Rational evaluate(const Rational& t) const;
    Polynomial derivative() const;

    std::string to_string() const; // "3/4 + 1/4*t^2"

    bool operator==(const Polynomial&) const = default;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Power series of 1 / prod_{i=1..n} (1 - t^i) truncated at t_order, inclusive.
Polynomial inverse_poch_series(int n, int t_order);

/// Gaussian binomial coefficient [m choose k]_t via the q-Pascal recurrence.
Polynomial gaussian_binomial(int m, int k);

/// [n choose a_1, ..., a_r]_t where the a_i sum to n; generating function of
/// maj over rearrangements of a fixed multiset with part multiplicities a_i.
Polynomial q_multinomial(int n, const std::vector<int>& parts);

/// prod_{i=1}^{n} (1 + t + ... + t^{i-1}), the S_n generating function of maj.
Polynomial t_factorial(int n);

/// prod_{i=1}^{n} (1 - t^i).
Polynomial one_minus_t_power_product(int n);

} // namespace qshuffle
