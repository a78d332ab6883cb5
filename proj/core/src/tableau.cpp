#include "qshuffle/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace qshuffle {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) throw std::invalid_argument("tableau rows must be nonempty");
        if (i > 0 && rows_[i].size() > rows_[i - 1].size())
            throw std::invalid_argument("tableau rows must weakly shorten downward");
    }
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int Tableau::size() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

bool Tableau::is_semistandard() const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j > 0 && rows_[i][j] < rows_[i][j - 1]) return false;
            if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (const auto& r : rows_)
        for (int v : r) {
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = 1;
        }
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j > 0 && rows_[i][j] <= rows_[i][j - 1]) return false;
            if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
        }
    return true;
}

std::vector<int> Tableau::descent_set() const {
    const int n = size();
    std::vector<int> row_of(static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i < rows_.size(); ++i)
        for (int v : rows_[i]) row_of[v] = static_cast<int>(i);
    std::vector<int> d;
    for (int i = 1; i < n; ++i)
        if (row_of[i + 1] > row_of[i]) d.push_back(i);
    return d;
}

std::pair<int, int> Tableau::row_insert(int v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
        auto& row = rows_[r];
        auto it = std::upper_bound(row.begin(), row.end(), v);
        if (it == row.end()) {
            row.push_back(v);
            return {static_cast<int>(r) + 1, static_cast<int>(row.size())};
        }
        std::swap(*it, v); // bump the displaced entry to the next row
    }
    rows_.push_back({v});
    return {static_cast<int>(rows_.size()), 1};
}

void Tableau::place(int r, int v) {
    if (r < 1 || r > static_cast<int>(rows_.size()) + 1)
        throw std::invalid_argument("placement row out of range");
    if (r == static_cast<int>(rows_.size()) + 1) rows_.push_back({});
    auto& row = rows_[static_cast<size_t>(r - 1)];
    if (r > 1 && row.size() >= rows_[static_cast<size_t>(r - 2)].size())
        throw std::invalid_argument("placement would break the shape");
    row.push_back(v);
}

std::string Tableau::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i > 0) out += ',';
        out += '[';
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j > 0) out += ',';
            out += std::to_string(rows_[i][j]);
        }
        out += ']';
    }
    out += ']';
    return out;
}

RSKPair rsk(const Permutation& w) {
    Tableau p, q;
    for (int i = 1; i <= w.n(); ++i) {
        auto [row, col] = p.row_insert(w(i));
        (void)col;
        q.place(row, i);
    }
    Partition shape = p.shape();
    return {std::move(p), std::move(q), std::move(shape)};
}

namespace {

void extend_standard(const std::vector<int>& shape, std::vector<int>& fill, int next,
                     int n, std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
    if (next > n) {
        out.emplace_back(rows);
        return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
        if (fill[r] >= shape[r]) continue;
        if (r > 0 && fill[r - 1] <= fill[r]) continue; // column would not increase
        rows[r][static_cast<size_t>(fill[r])] = next;
        ++fill[r];
        extend_standard(shape, fill, next + 1, n, rows, out);
        --fill[r];
    }
}

void extend_semistandard(const Partition& shape, std::vector<std::vector<int>>& rows,
                         size_t r, size_t c, int max_entry, std::vector<Tableau>& out) {
    if (r == rows.size()) {
        out.emplace_back(rows);
        return;
    }
    size_t nr = r, nc = c + 1;
    if (nc == rows[r].size()) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= max_entry; ++v) {
        rows[r][c] = v;
        extend_semistandard(shape, rows, nr, nc, max_entry, out);
    }
    rows[r][c] = 0;
}

} // namespace

std::vector<Tableau> standard_tableaux(const Partition& shape) {
    std::vector<Tableau> out;
    if (shape.size() == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> fill(shape.parts().size(), 0);
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) rows.emplace_back(static_cast<size_t>(p), 0);
    extend_standard(shape.parts(), fill, 1, shape.size(), rows, out);
    return out;
}

std::vector<Tableau> semistandard_tableaux(const Partition& shape, int max_entry) {
    std::vector<Tableau> out;
    if (shape.size() == 0) {
        out.emplace_back();
        return out;
    }
    if (max_entry < shape.num_parts()) return out; // columns cannot strictly increase
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) rows.emplace_back(static_cast<size_t>(p), 0);
    extend_semistandard(shape, rows, 0, 0, max_entry, out);
    return out;
}

} // namespace qshuffle
