#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "deltaqt/error.hpp"

namespace dqt {

/// Positive parts summing to a declared weight.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 1) throw ValidationError("composition parts must be positive");
    }
    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    bool operator==(const Composition&) const = default;
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
    auto operator<=>(const Composition&) const = default;
};

/// A Dyck path stored as its area word, with optional row labels and a set of decorated rises.
/// Row indices are 1-based throughout; the empty path (size 0) is allowed.
class DecoratedLabelledPath {
public:
    DecoratedLabelledPath() = default;
    explicit DecoratedLabelledPath(std::vector<int> area_word, std::optional<std::vector<int>> labels = std::nullopt,
                                   std::set<int> decorated_rises = {}, bool ghost_row = false)
        : area_(std::move(area_word)), labels_(std::move(labels)), decorated_(std::move(decorated_rises)),
          ghost_(ghost_row) {
        check();
    }

    const std::vector<int>& area_word() const { return area_; }
    const std::optional<std::vector<int>>& labels() const { return labels_; }
    const std::set<int>& decorated_rises() const { return decorated_; }
    bool ghost_row() const { return ghost_; }
    bool labelled() const { return labels_.has_value(); }
    int size() const { return static_cast<int>(area_.size()); }
    bool empty() const { return area_.empty(); }

    int a(int i) const { return area_.at(static_cast<std::size_t>(i - 1)); }
    int label(int i) const {
        if (!labels_) throw DomainError("path is unlabelled");
        return labels_->at(static_cast<std::size_t>(i - 1));
    }
    bool is_rise(int i) const { return i >= 2 && i <= size() && a(i) > a(i - 1); }
    bool is_decorated(int i) const { return decorated_.count(i) > 0; }

    auto operator<=>(const DecoratedLabelledPath&) const = default;

private:
    void check() const {
        if (!area_.empty() && area_[0] != 0) throw ValidationError("area word must start with 0");
        for (std::size_t i = 0; i < area_.size(); ++i) {
            if (area_[i] < 0) throw ValidationError("area word letters must be non-negative");
            if (i && area_[i] > area_[i - 1] + 1)
                throw ValidationError("area word condition violated at row " + std::to_string(i + 1));
        }
        if (labels_) {
            if (labels_->size() != area_.size()) throw ValidationError("label sequence length differs from area word");
            for (std::size_t i = 0; i < area_.size(); ++i) {
                if ((*labels_)[i] < 0) throw ValidationError("labels must be non-negative");
                if (i && area_[i] == area_[i - 1] + 1 && (*labels_)[i] <= (*labels_)[i - 1])
                    throw ValidationError("column strictness violated at row " + std::to_string(i + 1));
            }
        }
        for (int d : decorated_)
            if (d < 2 || d > size() || area_[d - 1] <= area_[d - 2])
                throw ValidationError("decorated index " + std::to_string(d) + " is not a rise");
        if (ghost_ && (area_.empty() || area_[0] != 0)) throw ValidationError("ghost row requires a nonempty path");
    }

    std::vector<int> area_;
    std::optional<std::vector<int>> labels_;
    std::set<int> decorated_;
    bool ghost_ = false;
};

using Path = DecoratedLabelledPath;

inline std::vector<int> rises(const Path& p) {
    std::vector<int> r;
    for (int i = 2; i <= p.size(); ++i)
        if (p.is_rise(i)) r.push_back(i);
    return r;
}

/// Sum of the area letters outside the decorated rises.
inline int area(const Path& p) {
    int s = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (!p.is_decorated(i)) s += p.a(i);
    return s;
}

struct DinvPairs {
    std::vector<std::pair<int, int>> primary;
    std::vector<std::pair<int, int>> secondary;
    int total() const { return static_cast<int>(primary.size() + secondary.size()); }
};

/// Diagonal inversions (i,j), i<j, 1-based. Decorations are ignored; unlabelled paths count every candidate pair.
inline DinvPairs dinv_pairs(const Path& p) {
    DinvPairs out;
    const int n = p.size();
    const bool lab = p.labelled();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (p.a(i) == p.a(j) && (!lab || p.label(i) < p.label(j))) out.primary.emplace_back(i, j);
            else if (p.a(i) == p.a(j) + 1 && (!lab || p.label(i) > p.label(j))) out.secondary.emplace_back(i, j);
        }
    return out;
}

inline int dinv(const Path& p) {
    const int n = p.size();
    const bool lab = p.labelled();
    int d = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (p.a(i) == p.a(j)) d += (!lab || p.label(i) < p.label(j));
            else if (p.a(i) == p.a(j) + 1) d += (!lab || p.label(i) > p.label(j));
        }
    return d;
}

/// 0-based row indices sorted by diagonal, then bottom to top.
inline std::vector<int> reading_order(const std::vector<int>& area_word) {
    std::vector<int> idx(area_word.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return area_word[x] < area_word[y]; });
    return idx;
}

/// Positive labels read diagonal by diagonal, bottom to top.
inline std::vector<int> dinv_reading_word(const Path& p) {
    if (!p.labelled()) throw DomainError("reading word requires a labelled path");
    std::vector<int> w;
    for (int i : reading_order(p.area_word()))
        if ((*p.labels())[i] > 0) w.push_back((*p.labels())[i]);
    return w;
}

namespace detail {
inline Composition anchored_composition(const Path& p, int label_value, const char* what) {
    if (!p.labelled()) throw DomainError(std::string(what) + " requires a labelled path");
    if (p.empty() || p.label(1) != label_value)
        throw DomainError(std::string(what) + ": bottom-left row does not carry the anchor label");
    std::vector<int> parts;
    for (int i = 1; i <= p.size(); ++i) {
        if (p.label(i) != label_value) continue;
        if (p.a(i) == 0) parts.push_back(0);
        ++parts.back();
    }
    return Composition(std::move(parts));
}
}  // namespace detail

/// Zero labels grouped by the zeros lying on the main diagonal.
inline Composition zero_composition(const Path& p) { return detail::anchored_composition(p, 0, "zero composition"); }

/// Big cars (label 2) grouped by the big cars lying on the main diagonal.
inline Composition big_car_composition(const Path& p) {
    if (p.labelled())
        for (int l : *p.labels())
            if (l != 1 && l != 2) throw DomainError("big car composition requires labels in {1,2}");
    return detail::anchored_composition(p, 2, "big car composition");
}

/// Multiplicity vector of the positive labels: entry i counts label i+1 (trailing zeros trimmed).
inline std::vector<int> label_content(const Path& p, bool skip_ghost = true) {
    std::vector<int> c;
    if (!p.labelled()) return c;
    for (int i = (skip_ghost && p.ghost_row()) ? 2 : 1; i <= p.size(); ++i) {
        int l = p.label(i);
        if (l <= 0) continue;
        if (static_cast<int>(c.size()) < l) c.resize(static_cast<std::size_t>(l), 0);
        ++c[static_cast<std::size_t>(l - 1)];
    }
    return c;
}

/// Prepend or strip the ghost car [2,0] of a two car parking function.
inline Path with_ghost(const Path& p) {
    if (p.ghost_row()) return p;
    if (!p.labelled()) throw DomainError("ghost car requires a labelled path");
    std::vector<int> a{0}, l{2};
    a.insert(a.end(), p.area_word().begin(), p.area_word().end());
    l.insert(l.end(), p.labels()->begin(), p.labels()->end());
    std::set<int> d;
    for (int x : p.decorated_rises()) d.insert(x + 1);
    return Path(a, l, d, true);
}

inline Path without_ghost(const Path& p) {
    if (!p.ghost_row()) return p;
    std::vector<int> a(p.area_word().begin() + 1, p.area_word().end());
    std::optional<std::vector<int>> l;
    if (p.labelled()) l = std::vector<int>(p.labels()->begin() + 1, p.labels()->end());
    std::set<int> d;
    for (int x : p.decorated_rises())
        if (x - 1 >= 2) d.insert(x - 1);
    if (!a.empty() && a[0] != 0) throw DomainError("removing the ghost row leaves a non-Dyck area word");
    return Path(a, l, d, false);
}

}  // namespace dqt
