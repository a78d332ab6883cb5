#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qshuffle/enumerate.hpp"
#include "qshuffle/partition.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/symfunc.hpp"
#include "qshuffle/tableau.hpp"
#include "qshuffle/weights.hpp"

using namespace qshuffle;

namespace {

WeightVector half_half() {
    return WeightVector::probabilities({Rational(1, 2), Rational(1, 2)});
}

WeightVector three_letters() {
    return WeightVector::probabilities({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
}

// all monomials of total degree k, summed directly from the definition
Rational brute_complete(int k, const WeightVector& x) {
    if (k == 0) return 1;
    Rational total = 0;
    std::vector<int> idx(static_cast<size_t>(k), 0);
    for (;;) {
        bool increasing = true;
        for (size_t i = 1; i < idx.size(); ++i)
            if (idx[i] < idx[i - 1]) increasing = false;
        if (increasing) {
            Rational term = 1;
            for (int i : idx) term *= x[i];
            total += term;
        }
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == x.size() - 1) {
            idx[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
    }
    return total;
}

Rational brute_elementary(int k, const WeightVector& x) {
    if (k == 0) return 1;
    if (k > x.size()) return 0;
    Rational total = 0;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        Rational term = 1;
        for (int i : idx) term *= x[i];
        total += term;
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == x.size() - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int j = pos + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return total;
}

Rational ssyt_weight_sum(const Partition& lambda, const WeightVector& x) {
    Rational total = 0;
    for (const Tableau& t : semistandard_tableaux(lambda, x.size())) {
        Rational term = 1;
        for (const auto& row : t.rows())
            for (int entry : row) term *= x[entry - 1];
        total += term;
    }
    return total;
}

} // namespace

TEST_CASE("power sums at fixed points") {
    CHECK(power_sum_eval(1, half_half()) == 1);
    CHECK(power_sum_eval(2, half_half()) == Rational(1, 2));
    CHECK(power_sum_eval(3, half_half()) == Rational(1, 4));
    CHECK(power_sum_eval(2, three_letters()) == Rational(7, 18));
    CHECK(power_sum_eval(Partition({2, 2}), half_half()) == Rational(1, 4));
    CHECK(power_sum_eval(Partition(), half_half()) == 1);
    CHECK_THROWS_AS(power_sum_eval(0, half_half()), std::invalid_argument);
}

TEST_CASE("complete homogeneous and elementary match brute-force sums") {
    CHECK(complete_hom_eval(2, half_half()) == Rational(3, 4));
    CHECK(elementary_eval(2, half_half()) == Rational(1, 4));
    for (const WeightVector& x : {half_half(), three_letters()}) {
        for (int k = 0; k <= 5; ++k) {
            CHECK(complete_hom_eval(k, x) == brute_complete(k, x));
            CHECK(elementary_eval(k, x) == brute_elementary(k, x));
        }
    }
    CHECK(elementary_eval(3, half_half()) == 0);
    CHECK(complete_hom_eval(Partition({2, 1}), three_letters()) ==
          complete_hom_eval(2, three_letters()) * complete_hom_eval(1, three_letters()));
}

TEST_CASE("monomial symmetric sums distinct monomials only") {
    CHECK(monomial_sym_eval(Partition({1, 1}), half_half()) == Rational(1, 4));
    CHECK(monomial_sym_eval(Partition({2, 1}), three_letters()) == Rational(2, 9));
    CHECK(monomial_sym_eval(Partition({3, 3, 3}), half_half()) == 0);
    CHECK(monomial_sym_eval(Partition(), half_half()) == 1);
    // monomial expansion of h and e
    for (const WeightVector& x : {half_half(), three_letters()}) {
        for (int n = 1; n <= 5; ++n) {
            Rational h_total = 0;
            for (const Partition& lambda : partitions_of(n))
                h_total += monomial_sym_eval(lambda, x);
            CHECK(h_total == complete_hom_eval(n, x));
            std::vector<int> column(static_cast<size_t>(n), 1);
            CHECK(monomial_sym_eval(Partition(column), x) == elementary_eval(n, x));
        }
    }
}

TEST_CASE("fundamental quasisymmetric specializes to h and e") {
    CHECK(quasisym_fundamental_eval(Composition({1, 2}), half_half()) == Rational(1, 8));
    for (const WeightVector& x : {half_half(), three_letters()}) {
        for (int n = 1; n <= 5; ++n) {
            CHECK(quasisym_fundamental_eval(Composition({n}), x) == complete_hom_eval(n, x));
            std::vector<int> ones(static_cast<size_t>(n), 1);
            CHECK(quasisym_fundamental_eval(Composition(ones), x) == elementary_eval(n, x));
        }
    }
}

TEST_CASE("fundamental expands as monomial quasisymmetric over refinements") {
    for (const WeightVector& x : {half_half(), three_letters()}) {
        for (int n = 1; n <= 6; ++n) {
            for (const Composition& alpha : compositions_of(n)) {
                Rational total = 0;
                for (const Composition& beta : compositions_of(n))
                    if (beta.refines(alpha)) total += quasisym_monomial_eval(beta, x);
                CHECK(total == quasisym_fundamental_eval(alpha, x));
            }
        }
    }
}

TEST_CASE("monomial quasisymmetric sums to the complete homogeneous") {
    for (const WeightVector& x : {half_half(), three_letters()}) {
        for (int n = 1; n <= 6; ++n) {
            Rational total = 0;
            for (const Composition& alpha : compositions_of(n))
                total += quasisym_monomial_eval(alpha, x);
            CHECK(total == complete_hom_eval(n, x));
        }
    }
    CHECK(quasisym_monomial_eval(Composition({2}), three_letters()) == Rational(7, 18));
    CHECK(quasisym_monomial_eval(Composition({1, 1, 1, 1}), three_letters()) == 0);
}

TEST_CASE("determinant route equals tableau sums for straight shapes") {
    CHECK(schur_eval(Partition({2, 1}), half_half()) == Rational(1, 4));
    for (const WeightVector& x : {half_half(), three_letters()}) {
        for (int n = 1; n <= 5; ++n)
            for (const Partition& lambda : partitions_of(n))
                CHECK(schur_eval(lambda, x) == ssyt_weight_sum(lambda, x));
    }
    CHECK(schur_eval(Partition({1, 1, 1}), half_half()) == 0);
    CHECK(schur_eval(Partition(), three_letters()) == 1);
}

TEST_CASE("skew determinant reduces to straight shapes and splits corners") {
    for (const WeightVector& x : {half_half(), three_letters()}) {
        for (int n = 1; n <= 4; ++n)
            for (const Partition& lambda : partitions_of(n))
                CHECK(schur_skew_eval(lambda, Partition(), x) == schur_eval(lambda, x));
        // a disconnected skew shape factors into its components
        CHECK(schur_skew_eval(Partition({2, 1}), Partition({1}), x) ==
              schur_eval(Partition({1}), x) * schur_eval(Partition({1}), x));
        // removing the unique corner leaves a straight shape
        CHECK(schur_skew_eval(Partition({2, 2}), Partition({1}), x) ==
              schur_eval(Partition({2, 1}), x));
    }
    CHECK_THROWS_AS(schur_skew_eval(Partition({1}), Partition({2}), half_half()),
                    std::domain_error);
}

TEST_CASE("ribbon shapes overlap adjacent rows in one column") {
    auto [lambda, mu] = ribbon_shape(Composition({2, 3, 1}));
    CHECK(lambda.parts() == std::vector<int>{4, 3, 1});
    CHECK(mu.parts() == std::vector<int>{2});
    auto [row_l, row_m] = ribbon_shape(Composition({4}));
    CHECK(row_l.parts() == std::vector<int>{4});
    CHECK(row_m.parts().empty());
}

TEST_CASE("ribbon functions alternate over coarsenings of complete products") {
    for (const WeightVector& x : {half_half(), three_letters()}) {
        CHECK(schur_ribbon_eval(Composition({3}), x) == complete_hom_eval(3, x));
        CHECK(schur_ribbon_eval(Composition({1, 1, 1}), x) == elementary_eval(3, x));
        for (int n = 1; n <= 6; ++n) {
            for (const Composition& alpha : compositions_of(n)) {
                Rational total = 0;
                for (const Composition& beta : compositions_of(n)) {
                    if (!alpha.refines(beta)) continue;
                    Rational term = beta.num_parts() % 2 == alpha.num_parts() % 2 ? 1 : -1;
                    for (int part : beta.parts()) term *= complete_hom_eval(part, x);
                    total += term;
                }
                CHECK(schur_ribbon_eval(alpha, x) == total);
            }
        }
    }
}

TEST_CASE("lie characters and their plethysms at fixed points") {
    for (const WeightVector& x : {half_half(), three_letters()}) {
        CHECK(lie_char_eval(1, x) == power_sum_eval(1, x));
        CHECK(lie_char_eval(2, x) ==
              (power_sum_eval(Partition({1, 1}), x) - power_sum_eval(2, x)) / 2);
        Rational p1 = power_sum_eval(1, x);
        Rational p3 = power_sum_eval(3, x);
        CHECK(lie_char_eval(3, x) == (p1 * p1 * p1 - p3) / 3);
        // substituting into the trivial inner index is the identity
        for (int m = 0; m <= 4; ++m)
            CHECK(plethysm_h_lie_eval(m, 1, x) == complete_hom_eval(m, x));
        for (int k = 1; k <= 4; ++k)
            CHECK(plethysm_power_lie_eval(1, k, x) == lie_char_eval(k, x));
        CHECK(plethysm_h_lie_eval(0, 3, x) == 1);
        CHECK(plethysm_h_lie_eval(1, 2, x) == lie_char_eval(2, x));
    }
    CHECK(plethysm_h_lie_eval(2, 2, half_half()) == Rational(1, 16));
}

TEST_CASE("plethysm of a power sum raises inner variables") {
    // p_k[l_i] evaluated at x equals l_i evaluated at the k-th powers of x,
    // checked against an unnormalized direct computation
    WeightVector x = three_letters();
    for (int k = 1; k <= 3; ++k) {
        for (int i = 1; i <= 3; ++i) {
            Rational direct = 0;
            for (int d : divisors(i)) {
                Rational pd = 0;
                for (int j = 0; j < x.size(); ++j)
                    pd += pow_rational(x[j], static_cast<unsigned>(k * d));
                direct += Rational(moebius(d)) * pow_rational(pd, static_cast<unsigned>(i / d));
            }
            direct /= i;
            CHECK(plethysm_power_lie_eval(k, i, x) == direct);
        }
    }
}

TEST_CASE("principal specialization agrees with uniform evaluation") {
    for (int q = 1; q <= 4; ++q) {
        WeightVector u = WeightVector::uniform(q);
        for (int n = 1; n <= 6; ++n)
            for (const Partition& lambda : partitions_of(n))
                CHECK(schur_principal(lambda, q) == schur_eval(lambda, u));
    }
    CHECK(schur_principal(Partition({1, 1, 1}), 2) == 0);
    CHECK_THROWS_AS(schur_principal(Partition({1}), 0), std::invalid_argument);
}
