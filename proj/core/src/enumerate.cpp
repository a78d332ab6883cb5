#include "qshuffle/enumerate.hpp"

#include <stdexcept>
#include <string>

#include "qshuffle/errors.hpp"

namespace qshuffle {

Caps& caps() {
    static Caps instance;
    return instance;
}

namespace {

[[noreturn]] void refuse(const char* what, const char* cap_name, long long requested,
                         long long cap_value) {
    throw CapExceeded(std::string(what) + ": requested size " + std::to_string(requested) +
                          " exceeds " + cap_name + " cap " + std::to_string(cap_value),
                      cap_value);
}

} // namespace

void require_factorial_cap(int n, const char* what) {
    if (n > caps().factorial) refuse(what, "factorial", n, caps().factorial);
}

void require_matrix_cap(int n, const char* what) {
    if (n > caps().matrix) refuse(what, "matrix", n, caps().matrix);
}

void require_bhr_cap(int n, const char* what) {
    if (n > caps().bhr) refuse(what, "bhr", n, caps().bhr);
}

void require_partition_sum_cap(int n, const char* what) {
    if (n > caps().partition_sum) refuse(what, "partition-sum", n, caps().partition_sum);
}

void require_word_budget(int alphabet, int n, const char* what) {
    long long budget = caps().oracle_words;
    long long words = 1;
    for (int i = 0; i < n; ++i) {
        if (words > budget / alphabet + 1) {
            refuse(what, "oracle-words", -1, budget);
        }
        words *= alphabet;
    }
    if (words > budget) refuse(what, "oracle-words", words, budget);
}

std::vector<Permutation> all_permutations(int n) {
    require_factorial_cap(n, "permutation enumeration");
    std::uint64_t total = factorial_u64(n);
    std::vector<Permutation> out;
    out.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) out.push_back(lehmer_unrank(n, r));
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    require_partition_sum_cap(n, "partition enumeration");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a{n};
    for (;;) {
        out.push_back(Partition(a));
        // descending-lex successor: shrink the rightmost part exceeding 1,
        // then refill greedily with parts no larger than it
        int k = static_cast<int>(a.size()) - 1;
        while (k >= 0 && a[static_cast<size_t>(k)] == 1) --k;
        if (k < 0) break;
        int rem = static_cast<int>(a.size()) - k; // trailing ones plus the unit shaved off a[k]
        a.resize(static_cast<size_t>(k) + 1);
        a[static_cast<size_t>(k)] -= 1;
        int v = a[static_cast<size_t>(k)];
        while (rem > 0) {
            int part = rem < v ? rem : v;
            a.push_back(part);
            rem -= part;
        }
    }
    return out;
}

Integer partition_count(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    // p(m) for m <= n by the bounded-part DP: dp[m] after processing part k
    // counts partitions of m into parts <= k
    std::vector<Integer> dp(static_cast<size_t>(n) + 1);
    dp[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m) dp[static_cast<size_t>(m)] += dp[static_cast<size_t>(m - k)];
    return dp[static_cast<size_t>(n)];
}

std::vector<Composition> compositions_of(int n) {
    if (n < 1) throw std::invalid_argument("compositions require n >= 1");
    if (n > 24) throw std::invalid_argument("composition enumeration limited to n <= 24");
    std::vector<Composition> out;
    out.reserve(1ull << (n - 1));
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> subset;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1))) subset.push_back(i);
        out.push_back(Composition::from_subset(n, subset));
    }
    return out;
}

namespace {

void extend_osp(std::uint32_t remaining, int n,
                std::vector<std::vector<int>>& blocks,
                std::vector<std::vector<std::vector<int>>>& out) {
    if (remaining == 0) {
        out.push_back(blocks);
        return;
    }
    // nonempty submasks of `remaining` as the next block
    for (std::uint32_t sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
        std::vector<int> block;
        for (int i = 1; i <= n; ++i)
            if (sub & (1u << (i - 1))) block.push_back(i);
        blocks.push_back(std::move(block));
        extend_osp(remaining & ~sub, n, blocks, out);
        blocks.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::vector<int>>> ordered_set_partitions(int n) {
    require_bhr_cap(n, "ordered set partition enumeration");
    if (n < 1) throw std::invalid_argument("ordered set partitions require n >= 1");
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> blocks;
    extend_osp((1u << n) - 1, n, blocks, out);
    return out;
}

Integer ordered_bell_number(int n) {
    std::vector<Integer> fub(static_cast<size_t>(n) + 1);
    fub[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= m; ++k)
            fub[static_cast<size_t>(m)] += binomial(m, k) * fub[static_cast<size_t>(m - k)];
    return fub[static_cast<size_t>(n)];
}

void for_each_word(int alphabet, int n,
                   const std::function<void(const std::vector<int>&)>& fn) {
    if (alphabet < 1 || n < 0) throw std::invalid_argument("bad word space");
    require_word_budget(alphabet, n, "word enumeration");
    std::vector<int> word(static_cast<size_t>(n), 1);
    if (n == 0) {
        fn(word);
        return;
    }
    for (;;) {
        fn(word);
        int i = n - 1;
        while (i >= 0 && word[static_cast<size_t>(i)] == alphabet) {
            word[static_cast<size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++word[static_cast<size_t>(i)];
    }
}

std::vector<int> divisors(int n) {
    if (n < 1) throw std::invalid_argument("divisors of a nonpositive integer");
    std::vector<int> small, large;
    for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int moebius(int n) {
    if (n < 1) throw std::invalid_argument("moebius of a nonpositive integer");
    int sign = 1;
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

} // namespace qshuffle
