#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qshuffle/permutation.hpp"
#include "qshuffle/rational.hpp"
#include "qshuffle/weights.hpp"

namespace qshuffle {

/// Reproducible letter/permutation sampler.
///
/// All drawing is integer arithmetic on top of a standard-specified 64-bit
/// generator, so identical (spec, seed) yields identical samples on every
/// platform:
///  - finite specs draw a uniform integer below the common denominator by
///    rejection and pick the letter by exact inverse CDF;
///  - geometric specs count exact Bernoulli(t) successes, so no truncation
///    enters the sampling path.
class Sampler {
public:
    Sampler(WeightSpec spec, std::uint64_t seed);

    int draw_letter();              // 1-based index into the weight sequence
    std::vector<int> draw_word(int n);
    Permutation draw(int n);        // standardization of draw_word(n)

private:
    std::uint64_t next_u64() { return gen_(); }
    std::uint64_t uniform_below_u64(std::uint64_t bound);
    Integer uniform_below(const Integer& bound);
    bool bernoulli(); // success with probability t for geometric specs

    WeightSpec spec_;
    std::mt19937_64 gen_;
    std::vector<Integer> cumulative_; // finite specs: cumulative numerators
    Integer denominator_ = 0;         // finite specs: common denominator
    Integer geo_num_ = 0, geo_den_ = 0;
};

/// One draw; equivalent to Sampler(spec, seed).draw(n).
Permutation sample(int n, const WeightSpec& spec, std::uint64_t seed);

/// Disjoint seed streams for concurrent sampling: stream i uses
/// splitmix64(seed + (i+1) * 0x9E3779B97F4A7C15).
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace qshuffle
