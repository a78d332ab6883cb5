#include "qshuffle/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "qshuffle/partition.hpp"

namespace qshuffle {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Coordinate-compressed Fenwick tree count of pairs i < j with s_i > s_j.
long long inversion_count(std::span<const int> seq) {
    std::vector<int> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const int m = static_cast<int>(sorted.size());
    std::vector<int> tree(m + 1, 0);
    auto add = [&](int i) {
        for (; i <= m; i += i & -i) ++tree[i];
    };
    auto count_le = [&](int i) {
        long long s = 0;
        for (; i > 0; i -= i & -i) s += tree[i];
        return s;
    };
    long long inv = 0;
    long long seen = 0;
    for (int v : seq) {
        int r = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                 sorted.begin()) + 1;
        inv += seen - count_le(r); // earlier elements strictly greater than v
        add(r);
        ++seen;
    }
    return inv;
}

} // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    require(n >= 1, "permutation must be nonempty");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : word_) {
        require(v >= 1 && v <= n, "permutation entry out of range");
        require(!seen[v], "permutation entry repeated");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    require(n >= 1, "permutation must be nonempty");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w), Unchecked{});
}

Permutation Permutation::parse(std::string_view s) {
    require(!s.empty(), "empty permutation literal");
    std::vector<int> w;
    if (s.find(',') == std::string_view::npos) {
        for (char c : s) {
            require(c >= '1' && c <= '9', "compact permutation literal must be digits 1-9");
            w.push_back(c - '0');
        }
    } else {
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t next = s.find(',', pos);
            std::string_view tok = s.substr(pos, next == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : next - pos);
            int v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            require(ec == std::errc{} && p == tok.data() + tok.size(),
                    "bad entry in permutation literal");
            w.push_back(v);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= n(); ++i) inv[word_[i - 1] - 1] = i;
    return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::conjugate_by_longest() const {
    const int m = n();
    std::vector<int> v(word_.size());
    for (int i = 1; i <= m; ++i) v[i - 1] = m + 1 - word_[m - i];
    return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::compose(const Permutation& other) const {
    require(n() == other.n(), "composing permutations of different sizes");
    std::vector<int> w(word_.size());
    for (int i = 1; i <= n(); ++i) w[i - 1] = word_[other.word_[i - 1] - 1];
    return Permutation(std::move(w), Unchecked{});
}

std::string Permutation::to_string() const {
    std::string out;
    const bool compact = n() <= 9;
    for (int i = 0; i < n(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

PermStats perm_stats(const Permutation& w) {
    const int n = w.n();
    PermStats st{.descent_set = {},
                 .descent_composition = Composition({n}),
                 .maj = 0,
                 .inv = 0,
                 .des = 0,
                 .cycle_type = {},
                 .lis_length = 0};
    for (int i = 1; i < n; ++i) {
        if (w(i) > w(i + 1)) {
            st.descent_set.push_back(i);
            st.maj += i;
        }
    }
    st.des = static_cast<int>(st.descent_set.size());
    st.descent_composition = Composition::from_subset(n, st.descent_set);
    st.inv = inversion_count(w.word());

    std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        if (visited[i]) continue;
        int len = 0;
        for (int j = i; !visited[j]; j = w(j)) {
            visited[j] = 1;
            ++len;
        }
        st.cycle_type.push_back(len);
    }
    std::sort(st.cycle_type.rbegin(), st.cycle_type.rend());

    std::vector<int> tails; // tails[k] = least possible tail of an increasing run of length k+1
    for (int v : w.word()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    st.lis_length = static_cast<int>(tails.size());
    return st;
}

InverseComplement inverse_and_complement(const Permutation& w) {
    Permutation inv = w.inverse();
    Permutation bar = inv.conjugate_by_longest();
    long long e = word_maj(bar.word());
    return {std::move(inv), std::move(bar), e};
}

Permutation standardize(std::span<const int> seq) {
    if (seq.empty()) throw std::domain_error("cannot standardize an empty word");
    const int n = static_cast<int>(seq.size());
    std::vector<int> order(seq.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return seq[a] < seq[b]; });
    std::vector<int> w(seq.size());
    for (int r = 0; r < n; ++r) w[order[r]] = r + 1;
    return Permutation(std::move(w), Permutation::Unchecked{});
}

long long word_maj(std::span<const int> seq) {
    long long maj = 0;
    for (size_t i = 1; i < seq.size(); ++i)
        if (seq[i - 1] > seq[i]) maj += static_cast<long long>(i);
    return maj;
}

long long word_inv(std::span<const int> seq) {
    return inversion_count(seq);
}

std::uint64_t factorial_u64(int n) {
    if (n < 0 || n > 20) throw std::domain_error("factorial_u64 requires 0 <= n <= 20");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t lehmer_rank(const Permutation& w) {
    const int n = w.n();
    if (n > 20) throw std::domain_error("lehmer_rank requires n <= 20");
    std::uint64_t rank = 0;
    for (int i = 1; i <= n; ++i) {
        std::uint64_t smaller_later = 0;
        for (int j = i + 1; j <= n; ++j)
            if (w(j) < w(i)) ++smaller_later;
        rank += smaller_later * factorial_u64(n - i);
    }
    return rank;
}

Permutation lehmer_unrank(int n, std::uint64_t rank) {
    if (n < 1 || n > 20) throw std::domain_error("lehmer_unrank requires 1 <= n <= 20");
    if (rank >= factorial_u64(n)) throw std::domain_error("lehmer rank out of range");
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> w;
    w.reserve(pool.size());
    for (int i = n - 1; i >= 0; --i) {
        std::uint64_t f = factorial_u64(i);
        auto idx = static_cast<size_t>(rank / f);
        rank %= f;
        w.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(w), Permutation::Unchecked{});
}

} // namespace qshuffle
