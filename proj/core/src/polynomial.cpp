#include "qshuffle/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace qshuffle {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::at(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return Polynomial(std::move(prod));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (is_zero()) return {};
    if (degree() < divisor.degree())
        throw std::domain_error("polynomial division left a remainder");
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot(static_cast<size_t>(degree() - divisor.degree()) + 1);
    const Rational& lead = divisor.coeffs_.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + divisor.degree())] / lead;
        quot[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (size_t j = 0; j < divisor.coeffs_.size(); ++j)
            rem[static_cast<size_t>(k) + j] -= q * divisor.coeffs_[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("polynomial division left a remainder");
    return Polynomial(std::move(quot));
}

Polynomial Polynomial::truncated(int max_degree) const {
    if (max_degree < 0) return {};
    if (degree() <= max_degree) return *this;
    std::vector<Rational> v(coeffs_.begin(),
                            coeffs_.begin() + static_cast<std::ptrdiff_t>(max_degree) + 1);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::times_t_power(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> v(static_cast<size_t>(k));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
}

Rational Polynomial::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(i);
    return Polynomial(std::move(d));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += qshuffle::to_string(coeffs_[i]);
        if (i == 1) out += "*t";
        if (i > 1) out += "*t^" + std::to_string(i);
    }
    return out;
}

Polynomial gaussian_binomial(int m, int k) {
    if (k < 0 || k > m) return {};
    // row-by-row q-Pascal: [r choose c] = [r-1 choose c-1] + t^c [r-1 choose c]
    std::vector<Polynomial> row(static_cast<size_t>(k) + 1);
    row[0] = Polynomial::constant(1);
    for (int r = 1; r <= m; ++r) {
        for (int c = std::min(r, k); c >= 1; --c)
            row[static_cast<size_t>(c)] =
                row[static_cast<size_t>(c - 1)] +
                row[static_cast<size_t>(c)].times_t_power(c);
    }
    return row[static_cast<size_t>(k)];
}

Polynomial q_multinomial(int n, const std::vector<int>& parts) {
    int sum = std::accumulate(parts.begin(), parts.end(), 0);
    if (sum != n) throw std::invalid_argument("multinomial parts must sum to n");
    Polynomial out = Polynomial::constant(1);
    int partial = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial parts must be nonnegative");
        partial += p;
        out = out * gaussian_binomial(partial, p);
    }
    return out;
}

Polynomial t_factorial(int n) {
    Polynomial out = Polynomial::constant(1);
    for (int i = 1; i <= n; ++i) {
        std::vector<Rational> ones(static_cast<size_t>(i), Rational(1));
        out = out * Polynomial(std::move(ones));
    }
    return out;
}

Polynomial one_minus_t_power_product(int n) {
    Polynomial out = Polynomial::constant(1);
    for (int i = 1; i <= n; ++i) {
        Polynomial factor = Polynomial::constant(1) - Polynomial::monomial(i);
        out = out * factor;
    }
    return out;
}

Polynomial inverse_poch_series(int n, int t_order) {
    if (t_order < 0) return Polynomial();
    std::vector<Rational> unit(static_cast<size_t>(t_order) + 1);
    unit[0] = 1;
    Polynomial series(std::move(unit));
    for (int i = 1; i <= n; ++i) {
        std::vector<Rational> geo(static_cast<size_t>(t_order) + 1);
        for (int k = 0; k * i <= t_order; ++k) geo[static_cast<size_t>(k * i)] = 1;
        series = (series * Polynomial(std::move(geo))).truncated(t_order);
    }
    return series;
}

} // namespace qshuffle
