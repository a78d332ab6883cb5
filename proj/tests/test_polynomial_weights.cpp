#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "qshuffle/permutation.hpp"
#include "qshuffle/polynomial.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/weights.hpp"

using namespace qshuffle;

TEST_CASE("rational parsing and printing round trip") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("0") == 0);
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    CHECK(to_string(Rational(8, 4)) == "2");
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("binomial handles edges and big arguments") {
    CHECK(binomial(5, 2) == Integer(10));
    CHECK(binomial(5, 0) == Integer(1));
    CHECK(binomial(5, 5) == Integer(1));
    CHECK(binomial(5, 6) == Integer(0));
    CHECK(binomial(5, -1) == Integer(0));
    CHECK(binomial(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("rational powers and decimal rendering") {
    CHECK(pow_rational(Rational(1, 2), 3) == Rational(1, 8));
    CHECK(pow_rational(Rational(2, 3), 0) == 1);
    CHECK(decimal_string(Rational(1, 3), 6) == "0.333333");
    CHECK(decimal_string(Rational(2, 3), 6) == "0.666667");
    CHECK(decimal_string(Rational(-1, 3), 3) == "-0.333");
    CHECK(decimal_string(Rational(5), 2) == "5.00");
    // ties round to even in the last kept digit
    CHECK(decimal_string(Rational(1, 8), 2) == "0.12");
    CHECK(decimal_string(Rational(3, 8), 2) == "0.38");
    CHECK(to_double(Rational(1, 2)) == doctest::Approx(0.5));
}

TEST_CASE("polynomial normalization and accessors") {
    Polynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(Polynomial({Rational(1), Rational(0)}).degree() == 0);
    Polynomial p({Rational(3, 4), Rational(0), Rational(1, 4)});
    CHECK(p.degree() == 2);
    CHECK(p.at(0) == Rational(3, 4));
    CHECK(p.at(1) == 0);
    CHECK(p.at(2) == Rational(1, 4));
    CHECK(p.at(7) == 0);
    CHECK(p.to_string() == "3/4 + 1/4*t^2");
    CHECK(Polynomial::constant(2).degree() == 0);
    CHECK(Polynomial::monomial(3).at(3) == 1);
}

TEST_CASE("polynomial ring operations") {
    Polynomial one_plus_t({1, 1});
    Polynomial sq = one_plus_t * one_plus_t;
    CHECK(sq == Polynomial({1, 2, 1}));
    CHECK(sq - one_plus_t == Polynomial({0, 1, 1}));
    CHECK(one_plus_t * Rational(1, 2) == Polynomial({Rational(1, 2), Rational(1, 2)}));
    CHECK((one_plus_t + (one_plus_t * Rational(-1))).is_zero());
    CHECK(one_plus_t.times_t_power(2) == Polynomial({0, 0, 1, 1}));
    CHECK(Polynomial({1, 2, 3, 4}).truncated(1) == Polynomial({1, 2}));
    CHECK(Polynomial({1, 1, 1}).evaluate(Rational(1, 2)) == Rational(7, 4));
    CHECK(Polynomial({1, 2, 3}).derivative() == Polynomial({2, 6}));
    CHECK(Polynomial().derivative().is_zero());
}

TEST_CASE("exact division succeeds exactly when the remainder vanishes") {
    Polynomial num({1, 0, -1}); // 1 - t^2
    Polynomial den({1, -1});    // 1 - t
    CHECK(num.exact_divide(den) == Polynomial({1, 1}));
    CHECK_THROWS_AS(Polynomial({1, 1, 1}).exact_divide(den), std::domain_error);
    CHECK_THROWS_AS(num.exact_divide(Polynomial()), std::domain_error);
    for (int n = 1; n <= 6; ++n) {
        Polynomial prod = one_minus_t_power_product(n);
        CHECK(prod.exact_divide(Polynomial({1, -1})).at(0) == 1);
    }
}

TEST_CASE("gaussian binomials are symmetric nonnegative and count correctly") {
    CHECK(gaussian_binomial(2, 1) == Polynomial({1, 1}));
    CHECK(gaussian_binomial(4, 2) == Polynomial({1, 1, 2, 1, 1}));
    CHECK(gaussian_binomial(5, 0) == Polynomial::constant(1));
    for (int m = 0; m <= 8; ++m) {
        for (int k = 0; k <= m; ++k) {
            Polynomial g = gaussian_binomial(m, k);
            CHECK(g == gaussian_binomial(m, m - k));
            CHECK(g.evaluate(1) == Rational(binomial(m, k)));
            for (const Rational& c : g.coeffs()) CHECK(c >= 0);
        }
    }
}

TEST_CASE("t-factorial matches the all-ones multinomial") {
    CHECK(t_factorial(3) == Polynomial({1, 2, 2, 1}));
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        CHECK(q_multinomial(n, ones) == t_factorial(n));
        CHECK(t_factorial(n).evaluate(1) == Rational(factorial(n)));
    }
}

namespace {

// reference generating polynomials over rearrangements of a fixed multiset
std::pair<Polynomial, Polynomial> multiset_maj_inv(const std::vector<int>& multiplicities) {
    std::vector<int> word;
    for (size_t letter = 0; letter < multiplicities.size(); ++letter)
        word.insert(word.end(), static_cast<size_t>(multiplicities[letter]),
                    static_cast<int>(letter) + 1);
    std::sort(word.begin(), word.end());
    std::vector<Rational> maj_coeffs, inv_coeffs;
    auto bump = [](std::vector<Rational>& coeffs, int k) {
        if (coeffs.size() <= static_cast<size_t>(k)) coeffs.resize(static_cast<size_t>(k) + 1);
        coeffs[static_cast<size_t>(k)] += 1;
    };
    do {
        bump(maj_coeffs, word_maj(word));
        bump(inv_coeffs, word_inv(word));
    } while (std::next_permutation(word.begin(), word.end()));
    return {Polynomial(std::move(maj_coeffs)), Polynomial(std::move(inv_coeffs))};
}

} // namespace

TEST_CASE("multinomial polynomial counts both maj and inv over multisets") {
    CHECK(q_multinomial(2, {1, 1}) == Polynomial({1, 1}));
    CHECK(q_multinomial(3, {2, 1}) == Polynomial({1, 1, 1}));
    const std::vector<std::vector<int>> shapes{
        {2, 2}, {3, 2}, {2, 2, 2}, {3, 2, 1}, {4, 3}, {1, 1, 1, 1, 1}};
    for (const auto& parts : shapes) {
        int n = 0;
        for (int p : parts) n += p;
        Polynomial q = q_multinomial(n, parts);
        auto [by_maj, by_inv] = multiset_maj_inv(parts);
        CHECK(q == by_maj);
        CHECK(q == by_inv);
    }
    CHECK_THROWS_AS(q_multinomial(4, {2, 1}), std::invalid_argument);
}

TEST_CASE("truncated reciprocal series inverts the product") {
    for (int n = 1; n <= 5; ++n) {
        int order = 12;
        Polynomial series = inverse_poch_series(n, order);
        Polynomial check = (series * one_minus_t_power_product(n)).truncated(order);
        CHECK(check == Polynomial::constant(1));
    }
}

TEST_CASE("probability weight vectors validate") {
    WeightVector x = WeightVector::probabilities({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
    CHECK(x.size() == 3);
    CHECK(x[0] == Rational(1, 2));
    CHECK(x.tail() == 0);
    CHECK_FALSE(x.is_truncated());
    CHECK(x.to_string() == "1/2,1/3,1/6");
    CHECK_THROWS_AS(WeightVector::probabilities({Rational(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(WeightVector::probabilities({Rational(3, 2), Rational(-1, 2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeightVector::probabilities({}), std::invalid_argument);
}

TEST_CASE("uniform weights") {
    WeightVector u = WeightVector::uniform(4);
    CHECK(u.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(u[i] == Rational(1, 4));
    CHECK_THROWS_AS(WeightVector::uniform(0), std::invalid_argument);
}

TEST_CASE("geometric truncation keeps the exact tail") {
    WeightVector g = WeightVector::truncated_geometric(Rational(1, 2), Rational(1, 100));
    CHECK(g.size() == 7); // smallest K with 2^-K <= 1/100
    CHECK(g.tail() == Rational(1, 128));
    Rational sum = 0;
    for (int i = 0; i < g.size(); ++i) {
        CHECK(g[i] == Rational(1, 2) * pow_rational(Rational(1, 2), static_cast<unsigned>(i)));
        sum += g[i];
    }
    CHECK(sum + g.tail() == 1);
    CHECK(g.is_truncated());
    CHECK_THROWS_AS(WeightVector::truncated_geometric(Rational(3, 2), Rational(1, 100)),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeightVector::truncated_geometric(Rational(1, 2), Rational(2)),
                    std::invalid_argument);
}

TEST_CASE("pairwise products list x-major and compound tails") {
    WeightVector x = WeightVector::probabilities({Rational(1, 2), Rational(1, 2)});
    WeightVector y = WeightVector::probabilities({Rational(1, 3), Rational(2, 3)});
    WeightVector xy = weight_product(x, y);
    REQUIRE(xy.size() == 4);
    CHECK(xy[0] == Rational(1, 6));
    CHECK(xy[1] == Rational(2, 6));
    CHECK(xy[2] == Rational(1, 6));
    CHECK(xy[3] == Rational(2, 6));
    CHECK(xy.tail() == 0);

    WeightVector g = WeightVector::truncated_geometric(Rational(1, 2), Rational(1, 4));
    WeightVector gx = weight_product(g, x);
    Rational total = gx.tail();
    for (int i = 0; i < gx.size(); ++i) total += gx[i];
    CHECK(total == 1);
    CHECK(gx.is_truncated());
}

TEST_CASE("weight specs parse the three families") {
    WeightSpec explicit_spec = WeightSpec::parse("x=1/2,1/3,1/6");
    CHECK(explicit_spec.kind() == WeightSpec::Kind::explicit_list);
    CHECK(explicit_spec.weights() ==
          std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 6)});
    CHECK(explicit_spec.to_string() == "x=1/2,1/3,1/6");
    CHECK(explicit_spec.is_finite());

    WeightSpec uniform_spec = WeightSpec::parse("q=4");
    CHECK(uniform_spec.kind() == WeightSpec::Kind::uniform_q);
    CHECK(uniform_spec.q() == 4);
    CHECK(uniform_spec.to_string() == "q=4");

    WeightSpec geo_spec = WeightSpec::parse("geom:t=3/10");
    CHECK(geo_spec.kind() == WeightSpec::Kind::geometric);
    CHECK(geo_spec.t() == Rational(3, 10));
    CHECK(geo_spec.to_string() == "geom:t=3/10");
    CHECK_FALSE(geo_spec.is_finite());

    CHECK_THROWS_AS(WeightSpec::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("y=1/2"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("q=0"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("q=2.5"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("geom:t=1"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::parse("x=1/2,1/3"), std::invalid_argument);
}

TEST_CASE("materialization respects the tail bound") {
    CHECK(WeightSpec::uniform_q(3).materialize() == WeightVector::uniform(3));
    CHECK(WeightSpec::explicit_list({Rational(1, 2), Rational(1, 2)}).materialize() ==
          WeightVector::probabilities({Rational(1, 2), Rational(1, 2)}));

    WeightSpec geo = WeightSpec::geometric(Rational(1, 2));
    WeightVector loose = geo.materialize(Rational(1, 100));
    CHECK(loose.size() == 7);
    WeightVector tight = geo.materialize();
    CHECK(pow_rational(Rational(1, 2), static_cast<unsigned>(tight.size())) <=
          default_tail_bound());
    CHECK(default_tail_bound() == Rational(Integer(1), pow(Integer(10), 15)));
}
