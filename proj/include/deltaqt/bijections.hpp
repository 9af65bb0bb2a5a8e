#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "deltaqt/error.hpp"
#include "deltaqt/family.hpp"
#include "deltaqt/lattice.hpp"
#include "deltaqt/polyomino.hpp"

namespace dqt {

// ---------------------------------------------------------------- dominoes

struct Domino {
    int label;
    int area;
    auto operator<=>(const Domino&) const = default;
};

using DominoSequence = std::vector<Domino>;

inline bool is_two_car(const Path& p) {
    if (!p.labelled()) return false;
    for (int l : *p.labels())
        if (l != 1 && l != 2) return false;
    return true;
}

/// Domino view of a two car parking function; the ghost car is prepended when the path has none.
inline DominoSequence to_dominoes(const Path& p) {
    if (!is_two_car(p)) throw DomainError("domino view requires labels in {1,2}");
    Path g = p.ghost_row() ? p : with_ghost(p);
    DominoSequence d;
    for (int i = 1; i <= g.size(); ++i) d.push_back({g.label(i), g.a(i)});
    return d;
}

/// Inverse of to_dominoes (decorations are not carried by dominoes).
inline Path from_dominoes(const DominoSequence& d) {
    if (d.empty()) return {};
    std::vector<int> a, l;
    for (auto& x : d) {
        a.push_back(x.area);
        l.push_back(x.label);
    }
    if (d.front() != Domino{2, 0}) throw DomainError("domino sequence must start with [2,0]");
    return Path(a, l, {}, true);
}

/// Two shuffle parking function read as a two car one: labels <= n become 1, the others 2; ghost prepended.
inline Path two_shuffle_to_two_car(const Path& p, int n) {
    if (!p.labelled()) throw DomainError("two shuffle parking functions are labelled");
    std::vector<int> l;
    for (int x : *p.labels()) l.push_back(x <= n ? 1 : 2);
    return with_ghost(Path(p.area_word(), l, p.decorated_rises(), false));
}

/// One application of the block map: the block runs from the leading [2,0] to the next [2,0].
inline DominoSequence phi(const DominoSequence& d) {
    if (d.empty() || d.front() != Domino{2, 0}) throw DomainError("phi expects a sequence starting with [2,0]");
    std::size_t j = 1;
    while (j < d.size() && d[j] != Domino{2, 0}) ++j;
    DominoSequence rest(d.begin() + static_cast<long>(j), d.end());
    if (j == 1) return rest;
    if (d[1] != Domino{1, 0})
        throw InvariantViolation("phi: domino after the leading [2,0] is not [1,0]");
    DominoSequence block{d[0]};
    for (std::size_t i = 2; i < j; ++i) {
        Domino x = d[i];
        if (x.label == 2) --x.area;
        block.push_back(x);
    }
    DominoSequence out = rest;
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i + 1 < block.size() && block[i].label == 2 && block[i + 1].label == 1 &&
            block[i + 1].area == block[i].area + 1) {
            out.push_back({1, block[i].area});
            out.push_back({2, block[i + 1].area});
            ++i;
            continue;
        }
        out.push_back(block[i]);
    }
    return out;
}

/// Iterated block map. Each non-singleton step contributes (number of [2,0]) - 1; deleting a singleton block
/// contributes nothing.
inline int ndinv(DominoSequence d) {
    int total = 0;
    while (!d.empty()) {
        bool singleton = d.size() == 1 || d[1] == Domino{2, 0};
        if (!singleton) {
            int k = static_cast<int>(std::count(d.begin(), d.end(), Domino{2, 0}));
            total += k - 1;
        }
        d = phi(d);
    }
    return total;
}

inline int ndinv(const Path& two_car) { return ndinv(to_dominoes(two_car)); }

// ---------------------------------------------------------------- eta, psi

inline FamilySpec catalan_spec_for(const Path& d) {
    if (!d.labelled()) throw DomainError("Catalan-PLD paths are labelled");
    int zeros = 0;
    for (int l : *d.labels()) zeros += (l == 0);
    FamilySpec s;
    s.family = Family::CatalanPLD;
    s.m = zeros - 1;
    s.n = d.size() - zeros;
    s.k = s.n;
    return s;
}

inline void require_catalan(const Path& d) {
    auto spec = catalan_spec_for(d);
    if (spec.m < 0) throw DomainError("not a Catalan-PLD: no zero labels");
    auto v = validate_family(d, spec);
    if (!v) throw DomainError("not a Catalan-PLD: " + v.diagnostic);
}

/// Catalan-PLD(m,n) -> RP(m,n): zero valleys become horizontal red steps, other rows vertical red steps; each green
/// horizontal step sits below its red step at the depth of the matching row.
inline PolyominoWord eta_inverse(const Path& d) {
    require_catalan(d);
    std::string red, green;
    int ry = 0, gy = 0;
    bool first = true;  // row 1 gives the ghost steps
    for (int i = 1; i <= d.size(); ++i) {
        if (d.label(i) != 0) {
            red += 'N';
            ++ry;
            continue;
        }
        int y = ry - d.a(i);
        if (y < gy) throw DomainError("eta_inverse: columns are not weakly increasing");
        if (!first) {
            red += 'E';
            green.append(static_cast<std::size_t>(y - gy), 'N');
            green += 'E';
        } else if (y != 0) {
            throw DomainError("eta_inverse: bottom-left row is not on the diagonal");
        }
        gy = y;
        first = false;
    }
    green.append(static_cast<std::size_t>(ry - gy), 'N');
    try {
        return polyomino_word_from_paths({red, green, {}});
    } catch (const GeometryError& e) {
        throw DomainError(std::string("eta_inverse: ") + e.what());
    }
}

/// RP(m,n) -> Catalan-PLD(m,n).
inline Path eta(const PolyominoWord& w) {
    if (!w.decorated_rises().empty()) throw DomainError("eta acts on undecorated polyominoes");
    PathPair pp = polyomino_paths_from_word(w);
    std::string red = "E" + pp.red, green = "E" + pp.green;
    std::vector<int> red_tops, green_tops;
    int y = 0;
    for (char c : red) c == 'E' ? red_tops.push_back(y) : void(++y);
    y = 0;
    for (char c : green) c == 'E' ? green_tops.push_back(y) : void(++y);
    std::vector<int> a, l;
    std::set<int> dec;
    std::size_t col = 0;
    for (char c : red) {
        if (c == 'E') {
            a.push_back(red_tops[col] - green_tops[col]);
            ++col;
            l.push_back(0);
        } else {
            a.push_back(a.back() + 1);
            l.push_back(-1);
            dec.insert(static_cast<int>(a.size()));
        }
    }
    int next = 1;
    for (int i : reading_order(a))
        if (l[static_cast<std::size_t>(i)] == -1) l[static_cast<std::size_t>(i)] = next++;
    return Path(a, l, dec, false);
}

/// RP(m,n)^{*k} -> PF^2(m,n)^{*k} with ghost car: 1 on barred letters, 2 on unbarred ones.
inline Path psi(const PolyominoWord& w) {
    std::vector<int> a, l;
    for (auto& x : w.letters()) {
        a.push_back(x.value);
        l.push_back(x.barred ? 1 : 2);
    }
    std::set<int> dec;
    for (int i : w.decorated_rises()) dec.insert(i + 1);
    return Path(a, l, dec, true);
}

inline PolyominoWord psi_inverse(const Path& p) {
    if (!is_two_car(p)) throw DomainError("psi_inverse expects a two car parking function");
    Path g = p.ghost_row() ? p : with_ghost(p);
    std::vector<Letter> ls;
    for (int i = 1; i <= g.size(); ++i) ls.push_back({g.a(i), g.label(i) == 1});
    std::set<int> dec;
    for (int i : g.decorated_rises()) dec.insert(i - 1);
    return PolyominoWord(ls, dec);
}

// ---------------------------------------------------------------- recursive step on Catalan-PLD

namespace detail {
inline Path canonical_catalan(const std::vector<int>& a, std::vector<int> l) {
    std::set<int> dec;
    int next = 1;
    for (int i : reading_order(a))
        if (l[static_cast<std::size_t>(i)] != 0) {
            l[static_cast<std::size_t>(i)] = next++;
            dec.insert(i + 1);
        }
    return Path(a, l, dec, false);
}
}  // namespace detail

/// Path-level form of eta . psi^{-1} . Phi . psi . eta^{-1}.
inline Path pld_recursive_step(const Path& d) {
    require_catalan(d);
    const int n = d.size();
    if (n == 1) return {};
    std::vector<int> a, l;
    if (d.a(2) == 0) {
        for (int i = 2; i <= n; ++i) {
            a.push_back(d.a(i));
            l.push_back(d.label(i));
        }
    } else {
        int j = 3;
        while (j <= n && d.a(j) != 0) ++j;
        for (int i = j; i <= n; ++i) {
            a.push_back(d.a(i));
            l.push_back(d.label(i));
        }
        a.push_back(d.a(1));
        l.push_back(d.label(1));
        for (int i = 3; i < j; ++i) {
            a.push_back(d.a(i) - 1);
            l.push_back(d.label(i));
        }
    }
    return detail::canonical_catalan(a, l);
}

/// Number of rows on the main diagonal.
inline int diagonal_touches(const Path& d) {
    int c = 0;
    for (int x : d.area_word()) c += (x == 0);
    return c;
}

// ---------------------------------------------------------------- ehh bijection

struct ShuffleParams {
    int k;
    int n;
    int m;
    int size() const { return m + n - k; }
};

inline void require_shuffle(const Path& d, ShuffleParams sp) {
    FamilySpec s;
    s.family = Family::ShuffleKNM;
    s.k = sp.k;
    s.n = sp.n;
    s.m = sp.m;
    try {
        s.check();
    } catch (const SpecError& e) {
        throw DomainError(e.what());
    }
    auto v = validate_family(d, s);
    if (!v) throw DomainError("not a (k,n,m)-shuffle path: " + v.diagnostic);
}

/// (k,n,m)-shuffle path -> PF^2(m,n)^{*k} with ghost car.
inline Path ehh_forward(const Path& d, ShuffleParams sp) {
    require_shuffle(d, sp);
    struct Tagged {
        int value;  // small label, or 1/2 when bold
        bool bold;
    };
    std::vector<int> a = d.area_word();
    std::vector<Tagged> lab;
    std::vector<bool> dec(a.size(), false);
    for (int x : *d.labels()) {
        if (x <= sp.k) lab.push_back({x, false});
        else lab.push_back({x <= sp.n ? 1 : 2, true});
    }
    for (int i = sp.k; i >= 1; --i) {
        std::size_t pos = 0;
        while (lab[pos].bold || lab[pos].value != i) ++pos;
        a.insert(a.begin() + static_cast<long>(pos + 1), a[pos] + 1);
        lab.insert(lab.begin() + static_cast<long>(pos + 1), Tagged{2, true});
        dec.insert(dec.begin() + static_cast<long>(pos + 1), true);
        lab[pos] = {1, true};
    }
    std::vector<int> aa{0}, ll{2};
    std::set<int> dd;
    for (std::size_t i = 0; i < a.size(); ++i) {
        aa.push_back(a[i]);
        ll.push_back(lab[i].value);
        if (dec[i]) dd.insert(static_cast<int>(i) + 2);
    }
    return Path(aa, ll, dd, true);
}

/// PF^2(m,n)^{*k} (ghost car optional) -> (k,n,m)-shuffle path.
inline Path ehh_inverse(const Path& p, ShuffleParams sp) {
    Path g = p.ghost_row() ? p : with_ghost(p);
    FamilySpec s;
    s.family = Family::TwoCar;
    s.m = sp.m;
    s.n = sp.n;
    s.k = sp.k;
    s.ghost = true;
    auto v = validate_family(g, s);
    if (!v) throw DomainError("ehh_inverse: " + v.diagnostic);
    // 0-based indices into the path without ghost
    std::vector<int> a(g.area_word().begin() + 1, g.area_word().end());
    std::vector<int> l(g.labels()->begin() + 1, g.labels()->end());
    std::set<int> decorated, before;
    for (int i : g.decorated_rises()) {
        int z = i - 2;
        if (z + 1 < static_cast<int>(a.size()) && a[static_cast<std::size_t>(z + 1)] > a[static_cast<std::size_t>(z)])
            throw DomainError("ehh_inverse: more than two consecutive vertical steps");
        decorated.insert(z);
        before.insert(z - 1);
    }
    auto order = reading_order(a);
    std::vector<int> nl(a.size(), 0);
    int c = sp.n;
    for (int i : order)
        if (l[static_cast<std::size_t>(i)] == 1 && !before.count(i)) nl[static_cast<std::size_t>(i)] = c--;
    c = sp.m + sp.n - sp.k;
    for (int i : order)
        if (l[static_cast<std::size_t>(i)] == 2 && !decorated.count(i)) nl[static_cast<std::size_t>(i)] = c--;
    std::vector<int> a2, l2, small_rows;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (decorated.count(i)) continue;
        if (before.count(i)) small_rows.push_back(static_cast<int>(a2.size()));
        a2.push_back(a[static_cast<std::size_t>(i)]);
        l2.push_back(nl[static_cast<std::size_t>(i)]);
    }
    std::set<int> small(small_rows.begin(), small_rows.end());
    c = 1;
    for (int j : reading_order(a2))
        if (small.count(j)) l2[static_cast<std::size_t>(j)] = c++;
    return Path(a2, l2, {}, false);
}

// ---------------------------------------------------------------- shuffle recursion step

struct ShuffleStepResult {
    Path path;
    ShuffleParams params;     // parameters of the image
    int s = 0;                // small + medium cars on the diagonal
    int h = 0;                // small cars on the diagonal
    int u = 0;                // h + big cars at height 1
    int r = 0;                // big cars on the diagonal + 1
    int big_diagonal = 0;
    int big_height_one = 0;
    bool removed_first = false;  // a big car at position 1 was deleted
    int area_loss = 0;
};

/// One step of the recursion on (k,n,m)-shuffle paths.
inline ShuffleStepResult shuffle_recursion_step(const Path& d, ShuffleParams sp) {
    require_shuffle(d, sp);
    enum Kind { Small = 0, Medium = 1, Big = 2 };
    auto kind = [&](int x) { return x <= sp.k ? Small : (x <= sp.n ? Medium : Big); };
    ShuffleStepResult res;
    std::vector<int> a;
    std::vector<int> kinds;
    for (int i = 1; i <= d.size(); ++i) {
        Kind t = kind(d.label(i));
        if (d.a(i) == 0) {
            if (t == Small) {
                ++res.h;
                a.push_back(0);
                kinds.push_back(Big);
            } else if (t == Medium) {
                ++res.s;
            } else {
                ++res.big_diagonal;
            }
        } else {
            if (d.a(i) == 1 && t == Big) ++res.big_height_one;
            a.push_back(d.a(i) - 1);
            kinds.push_back(t);
            ++res.area_loss;
        }
    }
    res.s += res.h;
    res.u = res.h + res.big_height_one;
    res.r = res.big_diagonal + 1;
    if (!a.empty()) {
        if (kinds.front() != Big) throw InvariantViolation("shuffle step: position 1 is not a big car");
        a.erase(a.begin());
        kinds.erase(kinds.begin());
        res.removed_first = true;
    }
    int n_small = 0, n_medium = 0, n_big = 0;
    for (int t : kinds) (t == Small ? n_small : (t == Medium ? n_medium : n_big))++;
    res.params = {n_small, n_small + n_medium, n_big + n_small};
    std::vector<int> l(a.size());
    int next_small = 1, next_medium = n_small + n_medium, next_big = static_cast<int>(a.size());
    for (int i : reading_order(a)) {
        int t = kinds[static_cast<std::size_t>(i)];
        l[static_cast<std::size_t>(i)] = t == Small ? next_small++ : (t == Medium ? next_medium-- : next_big--);
    }
    res.path = Path(a, l, {}, false);
    return res;
}

}  // namespace dqt
