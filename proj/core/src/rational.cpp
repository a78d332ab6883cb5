#include "qshuffle/rational.hpp"

#include <stdexcept>

namespace qshuffle {

Integer factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative argument");
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Integer b = 1;
    for (long long i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1; // exact at every step
    }
    return b;
}

Rational pow_rational(const Rational& r, unsigned long k) {
    Rational acc = 1;
    Rational base = r;
    while (k > 0) {
        if (k & 1) acc *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return acc;
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        Integer num(std::string(text.substr(0, slash)));
        Integer den(std::string(text.substr(slash + 1)));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
}

std::string to_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string decimal_string(const Rational& r, int places) {
    if (places < 0) throw std::domain_error("negative digit count");
    Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    const bool negative = num < 0;
    if (negative) num = -num;

    Integer scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    Integer q = (num * scale) / den;
    const Integer rem = (num * scale) % den;
    // round half to even at the last digit
    const Integer twice = rem * 2;
    if (twice > den || (twice == den && (q % 2) != 0)) ++q;

    const Integer whole = q / scale;
    const Integer frac = q % scale;
    std::string out = whole.str();
    if (places > 0) {
        std::string f = frac.str();
        out += "." + std::string(places - f.size(), '0') + f;
    }
    if (negative && q != 0) out.insert(out.begin(), '-');
    return out;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

} // namespace qshuffle
