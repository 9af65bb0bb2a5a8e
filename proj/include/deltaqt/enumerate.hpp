#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "deltaqt/error.hpp"
#include "deltaqt/family.hpp"
#include "deltaqt/lattice.hpp"
#include "deltaqt/polyomino.hpp"
#include "deltaqt/qt_polynomial.hpp"

namespace dqt {

inline constexpr std::uint64_t kDefaultMemberCap = 10'000'000;

/// Calls visit(area_word) for every area word of length n in lexicographic order.
template <class Visit>
void for_each_area_word(int n, Visit&& visit) {
    if (n < 0) return;
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    std::function<void()> rec = [&] {
        if (static_cast<int>(w.size()) == n) {
            visit(static_cast<const std::vector<int>&>(w));
            return;
        }
        int hi = w.empty() ? 0 : w.back() + 1;
        for (int v = 0; v <= hi; ++v) {
            w.push_back(v);
            rec();
            w.pop_back();
        }
    };
    rec();
}

/// k-subsets of items in lexicographic order.
template <class Visit>
void for_each_subset(const std::vector<int>& items, int k, Visit&& visit) {
    if (k < 0 || k > static_cast<int>(items.size())) return;
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            visit(std::set<int>(cur.begin(), cur.end()));
            return;
        }
        for (std::size_t i = start; i < items.size(); ++i) {
            cur.push_back(items[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

inline std::vector<int> rises_of_word(const std::vector<int>& a) {
    std::vector<int> r;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] > a[i - 1]) r.push_back(static_cast<int>(i + 1));
    return r;
}

/// Column-strict labellings of an area word drawn from a finite multiset (counts[v] copies of value v),
/// lexicographic in the label sequence. rise_ok(prev, next) decides admissibility across a rise.
template <class RiseOk, class Visit>
void for_each_labelling(const std::vector<int>& a, std::vector<int> counts, RiseOk&& rise_ok, Visit&& visit,
                        bool first_nonzero = false) {
    std::vector<int> lab(a.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == a.size()) {
            visit(static_cast<const std::vector<int>&>(lab));
            return;
        }
        for (std::size_t v = 0; v < counts.size(); ++v) {
            if (!counts[v]) continue;
            if (i == 0 && first_nonzero && v == 0) continue;
            if (i && a[i] == a[i - 1] + 1 && !rise_ok(lab[i - 1], static_cast<int>(v))) continue;
            --counts[v];
            lab[i] = static_cast<int>(v);
            rec(i + 1);
            ++counts[v];
        }
    };
    rec(0);
}

namespace detail {

struct Emitter {
    std::uint64_t cap;
    std::uint64_t emitted = 0;
    void tick() {
        if (++emitted > cap) throw CapacityError("member cap of " + std::to_string(cap) + " exceeded");
    }
};

/// Converts a type assignment into labels: each type gets a block of labels assigned along the reading order,
/// ascending or descending.
struct TypeBlock {
    int low;
    int high;
    bool ascending;
};

inline std::vector<int> labels_from_types(const std::vector<int>& a, const std::vector<int>& types,
                                          const std::vector<TypeBlock>& blocks) {
    std::vector<int> next(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) next[b] = blocks[b].ascending ? blocks[b].low : blocks[b].high;
    std::vector<int> lab(a.size());
    for (int i : reading_order(a)) {
        auto& blk = blocks[static_cast<std::size_t>(types[static_cast<std::size_t>(i)])];
        int& nx = next[static_cast<std::size_t>(types[static_cast<std::size_t>(i)])];
        lab[static_cast<std::size_t>(i)] = nx;
        nx += blk.ascending ? 1 : -1;
    }
    return lab;
}

inline bool column_strict(const std::vector<int>& a, const std::vector<int>& l) {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] == a[i - 1] + 1 && l[i] <= l[i - 1]) return false;
    return true;
}

}  // namespace detail

/// Every member of the family, once, in canonical order: area word, then labels, then decoration set.
template <class Visit>
void generate(const FamilySpec& spec, Visit&& visit, std::uint64_t cap = kDefaultMemberCap) {
    spec.check();
    if (spec.family == Family::ReducedPolyomino) throw SpecError("use generate_polyominoes for RP families");
    detail::Emitter em{cap};
    auto emit_with_decorations = [&](const std::vector<int>& a, const std::optional<std::vector<int>>& l, int k,
                                     bool ghost) {
        for_each_subset(rises_of_word(a), k, [&](const std::set<int>& dec) {
            em.tick();
            visit(Path(a, l, dec, ghost));
        });
    };
    auto strict_less = [](int p, int v) { return v > p; };
    const int size = spec.path_size();

    switch (spec.family) {
        case Family::Dyck:
            for_each_area_word(size, [&](const std::vector<int>& a) { emit_with_decorations(a, std::nullopt, spec.k, false); });
            return;
        case Family::LabelledDyck:
        case Family::PartiallyLabelled: {
            std::vector<int> counts{spec.family == Family::PartiallyLabelled ? spec.m : 0};
            counts.insert(counts.end(), spec.content->begin(), spec.content->end());
            bool first_nonzero = spec.family == Family::PartiallyLabelled;
            for_each_area_word(size, [&](const std::vector<int>& a) {
                for_each_labelling(
                    a, counts, strict_less,
                    [&](const std::vector<int>& l) { emit_with_decorations(a, l, spec.k, false); }, first_nonzero);
            });
            return;
        }
        case Family::CatalanPLD:
            for_each_area_word(size, [&](const std::vector<int>& a) {
                auto rs = rises_of_word(a);
                if (static_cast<int>(rs.size()) != spec.n) return;
                std::vector<int> l(a.size(), 0);
                std::set<int> dec(rs.begin(), rs.end());
                int c = 1;
                for (int i : reading_order(a))
                    if (dec.count(i + 1)) l[static_cast<std::size_t>(i)] = c++;
                em.tick();
                visit(Path(a, l, dec, false));
            });
            return;
        case Family::TwoCar: {
            int body = spec.m + spec.n;
            std::vector<int> counts{0, spec.n, spec.m};
            for_each_area_word(body, [&](const std::vector<int>& a) {
                if (static_cast<int>(rises_of_word(a).size()) < spec.k) return;
                for_each_labelling(a, counts, strict_less, [&](const std::vector<int>& l) {
                    std::vector<int> aa = a, ll = l;
                    if (spec.ghost) {
                        aa.insert(aa.begin(), 0);
                        ll.insert(ll.begin(), 2);
                    }
                    for_each_subset(rises_of_word(aa), spec.k, [&](const std::set<int>& dec) {
                        Path p(aa, ll, dec, spec.ghost);
                        if (spec.r && r_value(p, spec.r_semantics) != *spec.r) return;
                        em.tick();
                        visit(p);
                    });
                });
            });
            return;
        }
        case Family::TwoShuffle:
        case Family::ShuffleKNM: {
            bool knm = spec.family == Family::ShuffleKNM;
            int k = knm ? spec.k : 0;
            // types: 0 small (1..k ascending), 1 medium (k+1..n descending), 2 big (n+1..size descending)
            std::vector<detail::TypeBlock> blocks{{1, k, true}, {k + 1, spec.n, false}, {spec.n + 1, size, false}};
            std::vector<int> counts{k, spec.n - k, size - spec.n};
            auto type_ok = [](int p, int v) { return v > p || (v == 0 && p == 0); };
            int ndec = knm ? 0 : spec.k;
            for_each_area_word(size, [&](const std::vector<int>& a) {
                std::vector<std::vector<int>> labellings;
                for_each_labelling(a, counts, type_ok, [&](const std::vector<int>& types) {
                    auto l = detail::labels_from_types(a, types, blocks);
                    if (detail::column_strict(a, l)) labellings.push_back(std::move(l));
                });
                std::sort(labellings.begin(), labellings.end());
                for (auto& l : labellings) emit_with_decorations(a, l, ndec, false);
            });
            return;
        }
        case Family::ReducedPolyomino: return;
    }
}

/// Every word of RP(m,n)^{*k}: letter ranks in lexicographic order, then decoration set.
template <class Visit>
void generate_polyominoes(int m, int n, int k, Visit&& visit, std::uint64_t cap = kDefaultMemberCap) {
    if (m < 0 || n < 0 || k < 0) throw SpecError("polyomino parameters must be non-negative");
    detail::Emitter em{cap};
    const int len = m + n + 1;
    std::vector<int> ranks{0};
    std::function<void(int)> rec = [&](int barred) {
        int unbarred = static_cast<int>(ranks.size()) - barred;
        if (static_cast<int>(ranks.size()) == len) {
            std::vector<Letter> ls;
            for (int r : ranks) ls.push_back(Letter::from_rank(r));
            PolyominoWord base(ls);
            for_each_subset(rises(base), k, [&](const std::set<int>& dec) {
                em.tick();
                visit(PolyominoWord(ls, dec));
            });
            return;
        }
        for (int r = 0; r <= ranks.back() + 1; ++r) {
            bool b = r % 2;
            if (b && barred == n) continue;
            if (!b && unbarred == m + 1) continue;
            ranks.push_back(r);
            rec(barred + (b ? 1 : 0));
            ranks.pop_back();
        }
    };
    rec(0);
}

inline std::vector<Path> generate_all(const FamilySpec& spec, std::uint64_t cap = kDefaultMemberCap) {
    std::vector<Path> out;
    generate(spec, [&](const Path& p) { out.push_back(p); }, cap);
    return out;
}

inline std::vector<PolyominoWord> generate_all_polyominoes(int m, int n, int k, std::uint64_t cap = kDefaultMemberCap) {
    std::vector<PolyominoWord> out;
    generate_polyominoes(m, n, k, [&](const PolyominoWord& w) { out.push_back(w); }, cap);
    return out;
}

inline std::uint64_t count_members(const FamilySpec& spec, std::uint64_t cap = kDefaultMemberCap) {
    std::uint64_t c = 0;
    if (spec.family == Family::ReducedPolyomino)
        generate_polyominoes(spec.m, spec.n, spec.k, [&](const PolyominoWord&) { ++c; }, cap);
    else
        generate(spec, [&](const Path&) { ++c; }, cap);
    return c;
}

/// Sum of q^dinv t^area over the family.
inline QtPolynomial qt_enumerator(const FamilySpec& spec, std::uint64_t cap = kDefaultMemberCap) {
    std::map<std::pair<int, int>, long long> acc;
    if (spec.family == Family::ReducedPolyomino) {
        generate_polyominoes(spec.m, spec.n, spec.k, [&](const PolyominoWord& w) {
            auto s = polyomino_stats(w);
            ++acc[{s.dinv, s.area}];
        }, cap);
    } else {
        generate(spec, [&](const Path& p) { ++acc[{dinv(p), area(p)}]; }, cap);
    }
    QtPolynomial out;
    for (auto& [e, c] : acc) out.add_term(e.first, e.second, Integer(static_cast<long>(c)));
    return out;
}

/// Sum of q^dinv t^area over PLD(m,n)^{*k} with positive labels in 1..n, grouped by label content.
inline std::map<std::vector<int>, QtPolynomial> qt_enumerator_by_content(int m, int n, int k,
                                                                         std::uint64_t cap = kDefaultMemberCap) {
    if (m < 0 || n < 0 || k < 0) throw SpecError("parameters must be non-negative");
    std::map<std::vector<int>, std::map<std::pair<int, int>, long long>> acc;
    detail::Emitter em{cap};
    const int size = m + n;
    for_each_area_word(size, [&](const std::vector<int>& a) {
        // labels 1..n with unbounded multiplicity, exactly m zeros, first label nonzero
        std::vector<int> lab(a.size());
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int zeros_left) {
            if (i == a.size()) {
                if (zeros_left) return;
                for_each_subset(rises_of_word(a), k, [&](const std::set<int>& dec) {
                    em.tick();
                    Path p(a, lab, dec, false);
                    ++acc[label_content(p)][{dinv(p), area(p)}];
                });
                return;
            }
            int remaining = static_cast<int>(a.size() - i);
            if (zeros_left > remaining) return;
            for (int v = 0; v <= n; ++v) {
                if (v == 0 && (i == 0 || zeros_left == 0)) continue;
                if (v > 0 && zeros_left == remaining) continue;
                if (i && a[i] == a[i - 1] + 1 && v <= lab[i - 1]) continue;
                lab[i] = v;
                rec(i + 1, zeros_left - (v == 0));
            }
        };
        rec(0, m);
    });
    std::map<std::vector<int>, QtPolynomial> out;
    for (auto& [content, terms] : acc) {
        QtPolynomial p;
        for (auto& [e, c] : terms) p.add_term(e.first, e.second, Integer(static_cast<long>(c)));
        out[content] = p;
    }
    return out;
}

}  // namespace dqt
