#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qshuffle/rational.hpp"
#include "qshuffle/weights.hpp"

namespace qshuffle {

/// One named check comparing two independently computed sides.
struct VerificationResult {
    std::string name;
    bool pass = false;
    std::string lhs;    // computed side
    std::string rhs;    // reference side
    std::string detail; // scope of the comparison, or the first mismatch
    double elapsed_ms = 0.0;
};

/// Empirical-versus-exact comparison of the seeded sampler. The sampler runs
/// twice with the same seed; reproducible means both runs produced identical
/// counts. Requires at least 10^4 samples.
struct MonteCarloReport {
    int n = 0;
    long long samples = 0;
    std::uint64_t seed = 0;
    Rational tv_distance;   // (1/2) sum over w of |empirical - exact|
    Rational max_deviation; // largest single-permutation gap
    Rational threshold;
    bool reproducible = false;
    bool pass = false; // tv_distance < threshold and reproducible
};

MonteCarloReport mc_compare(int n, const WeightSpec& spec, long long samples,
                            std::uint64_t seed,
                            const Rational& threshold = Rational(1, 100));

/// Restrictions on a verification sweep. Without them each suite covers its
/// full default grid of sizes and weight specs; with them a suite runs only
/// the given n or weight spec where applicable, and a suite whose subject
/// needs a different weight family reports one passing "not applicable"
/// line instead. Pinned spot values always run.
struct VerifyOptions {
    std::optional<int> n;
    std::optional<WeightSpec> weights;
    long long samples = 1'000'000; // sampler suite
    std::uint64_t seed = 1;        // sampler suite
};

/// The fourteen suite names, in report order.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one suite by name; throws std::invalid_argument for an unknown name.
std::vector<VerificationResult> run_suite(const std::string& name,
                                          const VerifyOptions& opts = {});

/// All suites, concatenated in report order.
std::vector<VerificationResult> run_all(const VerifyOptions& opts = {});

bool all_passed(const std::vector<VerificationResult>& results);

} // namespace qshuffle
