#include "qshuffle/sampler.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qshuffle {

Sampler::Sampler(WeightSpec spec, std::uint64_t seed) : spec_(std::move(spec)), gen_(seed) {
    if (spec_.kind() == WeightSpec::Kind::geometric) {
        geo_num_ = numerator(spec_.t());
        geo_den_ = denominator(spec_.t());
        return;
    }
    WeightVector x = spec_.materialize();
    Integer common = 1;
    for (const auto& w : x.weights()) common = lcm(common, denominator(w));
    Integer acc = 0;
    for (const auto& w : x.weights()) {
        acc += numerator(w) * (common / denominator(w));
        cumulative_.push_back(acc);
    }
    denominator_ = common; // equals acc: weights sum to 1
}

std::uint64_t Sampler::uniform_below_u64(std::uint64_t bound) {
    // accept only draws above 2^64 mod bound so the residues are balanced
    const std::uint64_t min = (0 - bound) % bound;
    for (;;) {
        std::uint64_t v = next_u64();
        if (v >= min) return v % bound;
    }
}

Integer Sampler::uniform_below(const Integer& bound) {
    if (bound <= 0) throw std::logic_error("uniform draw requires a positive bound");
    if (bound <= std::numeric_limits<std::uint64_t>::max())
        return Integer(uniform_below_u64(bound.convert_to<std::uint64_t>()));
    const unsigned bits = boost::multiprecision::msb(bound) + 1;
    const unsigned words = (bits + 63) / 64;
    for (;;) {
        Integer v = 0;
        for (unsigned i = 0; i < words; ++i) {
            v <<= 64;
            v |= Integer(next_u64());
        }
        v >>= (words * 64 - bits);
        if (v < bound) return v;
    }
}

bool Sampler::bernoulli() {
    return uniform_below(geo_den_) < geo_num_;
}

int Sampler::draw_letter() {
    if (spec_.kind() == WeightSpec::Kind::geometric) {
        if (geo_num_ == 0) return 1;
        int k = 1;
        while (bernoulli()) ++k;
        return k;
    }
    Integer r = uniform_below(denominator_);
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
    return static_cast<int>(it - cumulative_.begin()) + 1;
}

std::vector<int> Sampler::draw_word(int n) {
    if (n < 1) throw std::invalid_argument("word length must be >= 1");
    std::vector<int> word(static_cast<size_t>(n));
    for (auto& letter : word) letter = draw_letter();
    return word;
}

Permutation Sampler::draw(int n) {
    return standardize(draw_word(n));
}

Permutation sample(int n, const WeightSpec& spec, std::uint64_t seed) {
    Sampler s(spec, seed);
    return s.draw(n);
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace qshuffle
