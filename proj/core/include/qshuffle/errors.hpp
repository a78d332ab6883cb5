#pragma once

#include <stdexcept>
#include <string>

namespace qshuffle {

/// Thrown when a request would exceed a configured work cap. Callers that
/// surface exit codes map this to the refusal status rather than failure.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, long long cap_value)
        : std::runtime_error(what), cap(cap_value) {}
    long long cap;
};

/// Work caps for operations whose cost grows like n!, |x|^n, (n!)^2, ordered
/// Bell numbers, or p(n). Configuration values, not constants: the CLI and
/// the acceptance suites may raise them deliberately.
struct Caps {
    int factorial = 8;                    // n!-sized streams and dense distributions
    long long oracle_words = 10'000'000;  // |x|^n words in the brute-force oracle
    int matrix = 7;                       // (n!)^2 transition matrices
    int bhr = 5;                          // ordered set partition enumerations
    int partition_sum = 60;               // p(n)-sized partition sums
};

Caps& caps();

void require_factorial_cap(int n, const char* what);
void require_matrix_cap(int n, const char* what);
void require_bhr_cap(int n, const char* what);
void require_partition_sum_cap(int n, const char* what);
void require_word_budget(int alphabet, int n, const char* what);

} // namespace qshuffle
