#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "deltaqt/error.hpp"

namespace dqt {

/// A cell of a Ferrers diagram: row i counted from the bottom, column j from the left, both 0-based.
struct Cell {
    int row;
    int col;
    auto operator<=>(const Cell&) const = default;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw ValidationError("partition parts must be positive");
            if (i && parts_[i] > parts_[i - 1]) throw ValidationError("partition parts must be weakly decreasing");
        }
    }

    /// Sorts and drops zero parts.
    static Partition from_unsorted(std::vector<int> parts) {
        parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
        for (int p : parts)
            if (p < 0) throw ValidationError("negative part");
        std::sort(parts.rbegin(), parts.rend());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 0; !parts_.empty() && j < parts_[0]; ++j) {
            int h = 0;
            for (int p : parts_)
                if (p > j) ++h;
            c.push_back(h);
        }
        return Partition(std::move(c));
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int i = 0; i < length(); ++i)
            for (int j = 0; j < parts_[i]; ++j) out.push_back({i, j});
        return out;
    }

    bool contains(Cell c) const { return c.row >= 0 && c.col >= 0 && c.row < length() && c.col < parts_[c.row]; }

    int arm(Cell c) const { return parts_[c.row] - c.col - 1; }
    int leg(Cell c) const {
        int h = 0;
        for (int p : parts_)
            if (p > c.col) ++h;
        return h - c.row - 1;
    }
    int coarm(Cell c) const { return c.col; }
    int coleg(Cell c) const { return c.row; }

    /// n(mu) = sum (i-1) mu_i.
    int n_statistic() const {
        int s = 0;
        for (int i = 0; i < length(); ++i) s += i * parts_[i];
        return s;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

namespace detail {
inline void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) return {};
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

/// All compositions of n (ordered tuples of positive parts), lexicographic with larger first parts last.
inline std::vector<std::vector<int>> compositions_of(int n) {
    if (n < 0) return {};
    if (n == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int f = 1; f <= n; ++f)
        for (auto& rest : compositions_of(n - f)) {
            std::vector<int> c{f};
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    return out;
}

}  // namespace dqt
