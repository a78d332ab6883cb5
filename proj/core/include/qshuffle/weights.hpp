#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qshuffle/rational.hpp"

namespace qshuffle {

/// A finite vector of nonnegative rational letter weights.
/// Probability form sums to exactly 1. A truncated geometric vector carries
/// its exact tail mass instead, so weights + tail always total 1.
class WeightVector {
public:
    /// Validates weights >= 0 and sum == 1.
    static WeightVector probabilities(std::vector<Rational> weights);

    /// q copies of 1/q.
    static WeightVector uniform(int q);

    /// Weights (1-t) t^{i-1} for i = 1..K, where K is minimal with
    /// t^K <= tail_bound. The dropped mass t^K is recorded exactly.
    static WeightVector truncated_geometric(const Rational& t, const Rational& tail_bound);

    const std::vector<Rational>& weights() const { return weights_; }
    int size() const { return static_cast<int>(weights_.size()); }
    const Rational& operator[](int i) const { return weights_[static_cast<size_t>(i)]; } // 0-based

    const Rational& tail() const { return tail_; } // exact 1 - sum(weights)
    bool is_truncated() const { return tail_ != 0; }

    std::string to_string() const; // "1/2,1/3,1/6"

    bool operator==(const WeightVector&) const = default;

private:
    WeightVector(std::vector<Rational> weights, Rational tail)
        : weights_(std::move(weights)), tail_(std::move(tail)) {}
    friend WeightVector weight_product(const WeightVector& x, const WeightVector& y);
    std::vector<Rational> weights_;
    Rational tail_ = 0;
};

/// Entries x_i y_j in lexicographic (i, j) order. Tails compound exactly.
WeightVector weight_product(const WeightVector& x, const WeightVector& y);

/// A parsed weight specification: explicit list, uniform on q letters, or
/// geometric with parameter t. Grammar: "x=1/2,1/3,1/6" | "q=4" | "geom:t=3/10".
class WeightSpec {
public:
    enum class Kind { explicit_list, uniform_q, geometric };

    static WeightSpec explicit_list(std::vector<Rational> weights);
    static WeightSpec uniform_q(int q);
    static WeightSpec geometric(Rational t);
    static WeightSpec parse(std::string_view text); // throws std::invalid_argument

    Kind kind() const { return kind_; }
    const std::vector<Rational>& weights() const { return weights_; } // explicit form
    int q() const { return q_; }                                     // uniform form
    const Rational& t() const { return t_; }                         // geometric form

    /// Finite weight vector for exact evaluators. Geometric specs truncate at
    /// the given tail bound (default 10^-15); others ignore the bound.
    WeightVector materialize(const std::optional<Rational>& tail_bound = std::nullopt) const;

    /// True when materialize() involves no truncation.
    bool is_finite() const { return kind_ != Kind::geometric || t_ == 0; }

    std::string to_string() const; // canonical grammar form

    bool operator==(const WeightSpec&) const = default;

private:
    Kind kind_ = Kind::explicit_list;
    std::vector<Rational> weights_;
    int q_ = 0;
    Rational t_ = 0;
};

/// Default truncation tail bound, 1/10^15.
const Rational& default_tail_bound();

} // namespace qshuffle
