#include "qshuffle/weights.hpp"

#include <stdexcept>

namespace qshuffle {

WeightVector WeightVector::probabilities(std::vector<Rational> weights) {
    if (weights.empty()) throw std::invalid_argument("weight vector must be nonempty");
    Rational sum = 0;
    for (const auto& w : weights) {
        if (w < 0) throw std::invalid_argument("weights must be nonnegative");
        sum += w;
    }
    if (sum != 1) throw std::invalid_argument("weights must sum to exactly 1");
    return WeightVector(std::move(weights), Rational(0));
}

WeightVector WeightVector::uniform(int q) {
    if (q < 1) throw std::invalid_argument("uniform weights require q >= 1");
    return WeightVector(std::vector<Rational>(static_cast<size_t>(q), Rational(1, q)),
                        Rational(0));
}

WeightVector WeightVector::truncated_geometric(const Rational& t, const Rational& tail_bound) {
    if (t < 0 || t >= 1) throw std::invalid_argument("geometric parameter needs 0 <= t < 1");
    if (tail_bound <= 0 || tail_bound >= 1)
        throw std::invalid_argument("tail bound must lie in (0,1)");
    if (t == 0) return probabilities({Rational(1)});
    std::vector<Rational> weights;
    Rational one_minus_t = Rational(1) - t;
    Rational t_power = 1; // t^{i-1}
    Rational tail = 1;    // t^{i-1} = mass not yet emitted
    while (tail > tail_bound) {
        weights.push_back(one_minus_t * t_power);
        t_power *= t;
        tail = t_power;
    }
    return WeightVector(std::move(weights), tail);
}

std::string WeightVector::to_string() const {
    std::string out;
    for (size_t i = 0; i < weights_.size(); ++i) {
        if (i > 0) out += ',';
        out += qshuffle::to_string(weights_[i]);
    }
    return out;
}

WeightVector weight_product(const WeightVector& x, const WeightVector& y) {
    std::vector<Rational> prod;
    prod.reserve(static_cast<size_t>(x.size()) * static_cast<size_t>(y.size()));
    Rational sum = 0;
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < y.size(); ++j) {
            prod.push_back(x[i] * y[j]);
            sum += prod.back();
        }
    return x.is_truncated() || y.is_truncated()
               ? WeightVector(std::move(prod), Rational(1) - sum)
               : WeightVector::probabilities(std::move(prod));
}

WeightSpec WeightSpec::explicit_list(std::vector<Rational> weights) {
    WeightVector::probabilities(weights); // validate
    WeightSpec s;
    s.kind_ = Kind::explicit_list;
    s.weights_ = std::move(weights);
    return s;
}

WeightSpec WeightSpec::uniform_q(int q) {
    if (q < 1) throw std::invalid_argument("uniform weights require q >= 1");
    WeightSpec s;
    s.kind_ = Kind::uniform_q;
    s.q_ = q;
    return s;
}

WeightSpec WeightSpec::geometric(Rational t) {
    if (t < 0 || t >= 1) throw std::invalid_argument("geometric parameter needs 0 <= t < 1");
    WeightSpec s;
    s.kind_ = Kind::geometric;
    s.t_ = std::move(t);
    return s;
}

WeightSpec WeightSpec::parse(std::string_view text) {
    auto split_rationals = [](std::string_view list) {
        std::vector<Rational> out;
        size_t pos = 0;
        while (pos <= list.size()) {
            size_t next = list.find(',', pos);
            std::string_view tok = list.substr(
                pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
            out.push_back(parse_rational(tok));
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
        return out;
    };
    if (text.starts_with("x=")) return explicit_list(split_rationals(text.substr(2)));
    if (text.starts_with("q=")) {
        Rational q = parse_rational(text.substr(2));
        if (denominator(q) != 1 || q < 1 || q > 1'000'000)
            throw std::invalid_argument("uniform spec requires an integer 1 <= q <= 10^6");
        return uniform_q(static_cast<int>(numerator(q)));
    }
    if (text.starts_with("geom:t=")) return geometric(parse_rational(text.substr(7)));
    throw std::invalid_argument("weight spec must be x=..., q=..., or geom:t=...");
}

WeightVector WeightSpec::materialize(const std::optional<Rational>& tail_bound) const {
    switch (kind_) {
        case Kind::explicit_list: {
            auto w = weights_;
            return WeightVector::probabilities(std::move(w));
        }
        case Kind::uniform_q:
            return WeightVector::uniform(q_);
        case Kind::geometric:
            return WeightVector::truncated_geometric(
                t_, tail_bound.value_or(default_tail_bound()));
    }
    throw std::logic_error("unreachable weight spec kind");
}

std::string WeightSpec::to_string() const {
    switch (kind_) {
        case Kind::explicit_list: {
            std::string out = "x=";
            for (size_t i = 0; i < weights_.size(); ++i) {
                if (i > 0) out += ',';
                out += qshuffle::to_string(weights_[i]);
            }
            return out;
        }
        case Kind::uniform_q:
            return "q=" + std::to_string(q_);
        case Kind::geometric:
            return "geom:t=" + qshuffle::to_string(t_);
    }
    throw std::logic_error("unreachable weight spec kind");
}

const Rational& default_tail_bound() {
    static const Rational bound(Integer(1), pow(Integer(10), 15));
    return bound;
}

} // namespace qshuffle
