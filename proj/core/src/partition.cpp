#include "qshuffle/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qshuffle {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        total_ += p;
    }
}

Composition Composition::from_subset(int n, const std::vector<int>& subset) {
    if (n < 1) throw std::invalid_argument("composition of n requires n >= 1");
    std::vector<int> parts;
    int prev = 0;
    for (int s : subset) {
        if (s <= prev || s >= n)
            throw std::invalid_argument("subset must increase strictly within {1..n-1}");
        parts.push_back(s - prev);
        prev = s;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::vector<int> Composition::subset() const {
    std::vector<int> s;
    int acc = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        s.push_back(acc);
    }
    return s;
}

bool Composition::refines(const Composition& coarser) const {
    if (total_ != coarser.total_)
        throw std::invalid_argument("refinement compares compositions of the same n");
    std::vector<int> fine = subset();
    std::vector<int> coarse = coarser.subset();
    return std::includes(fine.begin(), fine.end(), coarse.begin(), coarse.end());
}

std::string Composition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        total_ += parts_[i];
    }
}

Partition Partition::from_multiset(std::vector<int> parts) {
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("partition rows are 1-based");
    return i <= num_parts() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> conj(static_cast<size_t>(parts_[0]));
    for (int j = 1; j <= parts_[0]; ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        conj[j - 1] = count;
    }
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.num_parts() > num_parts()) return false;
    for (int i = 0; i < mu.num_parts(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

std::vector<int> Partition::hook_lengths() const {
    Partition conj = conjugate();
    std::vector<int> hooks;
    hooks.reserve(static_cast<size_t>(total_));
    for (int i = 1; i <= num_parts(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j)
            hooks.push_back(parts_[i - 1] - j + conj.parts_[j - 1] - i + 1);
    return hooks;
}

Integer Partition::standard_tableaux_count() const {
    Integer f = factorial(total_);
    for (int h : hook_lengths()) f /= h;
    return f;
}

Integer Partition::centralizer_order() const {
    Integer z = 1;
    size_t i = 0;
    while (i < parts_.size()) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        auto mult = static_cast<int>(j - i);
        for (int k = 0; k < mult; ++k) z *= parts_[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

long long Partition::content_sum() const {
    long long s = 0;
    for (int i = 1; i <= num_parts(); ++i) {
        long long p = parts_[i - 1];
        s += p * (p + 1) / 2 - static_cast<long long>(i) * p;
    }
    return s;
}

long long Partition::b_statistic() const {
    long long b = 0;
    for (int i = 1; i <= num_parts(); ++i)
        b += static_cast<long long>(i - 1) * parts_[i - 1];
    return b;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

} // namespace qshuffle
