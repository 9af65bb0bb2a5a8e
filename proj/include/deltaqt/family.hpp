#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "deltaqt/error.hpp"
#include "deltaqt/lattice.hpp"
#include "deltaqt/polyomino.hpp"

namespace dqt {

enum class Family {
    Dyck,               // D(n)^{*k}
    LabelledDyck,       // LD(n)^{*k} with a label content
    PartiallyLabelled,  // PLD(m,n)^{*k}
    CatalanPLD,         // m+1 zero valleys, positive rows are exactly the decorated rises
    TwoCar,             // PF^2(m,n)^{*k}
    TwoShuffle,         // reading word in (n..1) sh (m+n..n+1)
    ShuffleKNM,         // reading word in (1..k) sh (n..k+1) sh (m+n-k..n+1)
    ReducedPolyomino,   // RP(m,n)^{*k}
};

/// How the number r of big cars on the main diagonal of a two car parking function is counted.
enum class RSemantics {
    DiagonalBigCars,         // non-ghost big cars on the diagonal
    DiagonalBigCarsPlusOne,  // that count plus one
    GhostInclusive,          // big cars on the diagonal, ghost car included
};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Dyck: return "d";
        case Family::LabelledDyck: return "ld";
        case Family::PartiallyLabelled: return "pld";
        case Family::CatalanPLD: return "catalan-pld";
        case Family::TwoCar: return "pf2";
        case Family::TwoShuffle: return "two-shuffle";
        case Family::ShuffleKNM: return "shuffle-knm";
        case Family::ReducedPolyomino: return "rp";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    for (Family f : {Family::Dyck, Family::LabelledDyck, Family::PartiallyLabelled, Family::CatalanPLD, Family::TwoCar,
                     Family::TwoShuffle, Family::ShuffleKNM, Family::ReducedPolyomino})
        if (family_name(f) == s) return f;
    throw SpecError("unknown family '" + s + "'");
}

inline std::string r_semantics_name(RSemantics s) {
    switch (s) {
        case RSemantics::DiagonalBigCars: return "diagonal";
        case RSemantics::DiagonalBigCarsPlusOne: return "diagonal+1";
        case RSemantics::GhostInclusive: return "ghost-inclusive";
    }
    return "?";
}

inline RSemantics parse_r_semantics(const std::string& s) {
    for (RSemantics r : {RSemantics::DiagonalBigCars, RSemantics::DiagonalBigCarsPlusOne, RSemantics::GhostInclusive})
        if (r_semantics_name(r) == s) return r;
    throw SpecError("unknown r-semantics '" + s + "'");
}

/// A finite family request. For Dyck and LabelledDyck the size is n; for ShuffleKNM it is m+n-k.
struct FamilySpec {
    Family family = Family::Dyck;
    int m = 0;
    int n = 0;
    int k = 0;
    std::optional<int> r;
    std::optional<std::vector<int>> content;  // multiplicity of label i+1 at position i
    bool ghost = false;
    RSemantics r_semantics = RSemantics::GhostInclusive;

    int path_size() const {
        switch (family) {
            case Family::Dyck:
            case Family::LabelledDyck: return n;
            case Family::CatalanPLD: return m + n + 1;
            case Family::TwoCar: return m + n + (ghost ? 1 : 0);
            case Family::ShuffleKNM: return m + n - k;
            default: return m + n;
        }
    }

    /// Throws SpecError when the parameters are inconsistent or the family is infinite.
    void check() const {
        if (m < 0 || n < 0 || k < 0) throw SpecError("family parameters must be non-negative");
        if (content) {
            if (family != Family::LabelledDyck && family != Family::PartiallyLabelled)
                throw SpecError("a content applies to LD and PLD families only");
            int s = 0;
            for (int c : *content) {
                if (c < 0) throw SpecError("content multiplicities must be non-negative");
                s += c;
            }
            if (s != n) throw SpecError("content weight does not match the number of positive labels");
        }
        switch (family) {
            case Family::LabelledDyck:
                if (!content) throw SpecError("LD enumeration requires a content");
                break;
            case Family::PartiallyLabelled:
                if (!content) throw SpecError("PLD enumeration requires a content");
                if (!(n > k)) throw SpecError("PLD(m,n)^{*k} requires n > k");
                break;
            case Family::ShuffleKNM:
                if (k > n || k > m) throw SpecError("(k,n,m)-shuffle paths require k <= n and k <= m");
                break;
            default: break;
        }
        if (r && family != Family::TwoCar) throw SpecError("r-buckets apply to two car parking functions only");
    }

    std::string to_string() const {
        std::string s = family_name(family) + "(m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                        ",k=" + std::to_string(k);
        if (r) s += ",r=" + std::to_string(*r);
        if (ghost) s += ",ghost";
        return s + ")";
    }
};

struct Membership {
    bool member = true;
    std::string diagnostic;
    explicit operator bool() const { return member; }
};

inline Membership reject(std::string why) { return {false, std::move(why)}; }

/// Number of diagonal big cars under the given convention.
inline int r_value(const Path& p, RSemantics sem) {
    if (!p.labelled()) throw DomainError("r requires a two car parking function");
    int diag = 0;
    int first = p.ghost_row() ? 2 : 1;
    for (int i = first; i <= p.size(); ++i)
        if (p.a(i) == 0 && p.label(i) == 2) ++diag;
    switch (sem) {
        case RSemantics::DiagonalBigCars: return diag;
        case RSemantics::DiagonalBigCarsPlusOne:
        case RSemantics::GhostInclusive: return diag + 1;
    }
    return diag;
}

/// (w restricted to values <= k increasing), (k < v <= n decreasing), (v > n decreasing).
inline bool in_three_shuffle(const std::vector<int>& w, int k, int n) {
    int last_small = 0, last_med = n + 1, last_big = 1 << 30;
    for (int v : w) {
        if (v <= k) {
            if (v < last_small) return false;
            last_small = v;
        } else if (v <= n) {
            if (v > last_med) return false;
            last_med = v;
        } else {
            if (v > last_big) return false;
            last_big = v;
        }
    }
    return true;
}

inline bool labels_are_permutation(const Path& p, int size) {
    if (!p.labelled()) return false;
    std::vector<int> l = *p.labels();
    std::sort(l.begin(), l.end());
    for (int i = 0; i < size; ++i)
        if (l[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

inline bool content_matches(const Path& p, const std::vector<int>& content) {
    auto c = label_content(p);
    auto want = content;
    while (!want.empty() && want.back() == 0) want.pop_back();
    return c == want;
}

/// Membership of a path in the named family.
inline Membership validate_family(const Path& p, const FamilySpec& spec) {
    const int size = spec.path_size();
    if (spec.family == Family::ReducedPolyomino) return reject("polyomino families take a PolyominoWord");
    if (p.size() != size)
        return reject("size " + std::to_string(p.size()) + " differs from the family size " + std::to_string(size));
    bool ghost_expected = spec.family == Family::TwoCar && spec.ghost;
    if (p.ghost_row() != ghost_expected) return reject(ghost_expected ? "missing ghost row" : "unexpected ghost row");
    const int ndec = static_cast<int>(p.decorated_rises().size());

    switch (spec.family) {
        case Family::Dyck:
            if (p.labelled()) return reject("Dyck paths carry no labels");
            if (ndec != spec.k) return reject("wrong number of decorated rises");
            return {};
        case Family::LabelledDyck:
            if (!p.labelled()) return reject("labels required");
            for (int l : *p.labels())
                if (l <= 0) return reject("LD labels must be positive");
            if (ndec != spec.k) return reject("wrong number of decorated rises");
            if (spec.content && !content_matches(p, *spec.content)) return reject("label content mismatch");
            return {};
        case Family::PartiallyLabelled: {
            if (!p.labelled()) return reject("labels required");
            if (size > 0 && p.label(1) == 0) return reject("bottom-left label must be nonzero");
            int zeros = 0;
            for (int l : *p.labels()) zeros += (l == 0);
            if (zeros != spec.m) return reject("wrong number of zero labels");
            if (ndec != spec.k) return reject("wrong number of decorated rises");
            if (spec.content && !content_matches(p, *spec.content)) return reject("label content mismatch");
            return {};
        }
        case Family::CatalanPLD: {
            if (!p.labelled()) return reject("labels required");
            int zeros = 0;
            for (int i = 1; i <= size; ++i) {
                if (p.label(i) == 0) {
                    ++zeros;
                    if (p.is_rise(i)) return reject("zero label at row " + std::to_string(i) + " is not a valley");
                } else {
                    if (!p.is_rise(i) || !p.is_decorated(i))
                        return reject("positive label at row " + std::to_string(i) + " is not a decorated rise");
                }
            }
            if (zeros != spec.m + 1) return reject("expected m+1 zero valleys");
            if (ndec != spec.n) return reject("expected n decorated rises");
            auto w = dinv_reading_word(p);
            for (int i = 0; i < static_cast<int>(w.size()); ++i)
                if (w[static_cast<std::size_t>(i)] != i + 1)
                    return reject("positive labels are not 1..n in reading order");
            return {};
        }
        case Family::TwoCar: {
            if (!p.labelled()) return reject("labels required");
            int ones = 0, twos = 0;
            for (int i = 1; i <= size; ++i) {
                int l = p.label(i);
                if (l != 1 && l != 2) return reject("two car labels must be 1 or 2");
                if (spec.ghost && i == 1) {
                    if (l != 2) return reject("ghost car must be a big car");
                    continue;
                }
                (l == 1 ? ones : twos)++;
            }
            if (ones != spec.n || twos != spec.m) return reject("wrong numbers of small/big cars");
            if (ndec != spec.k) return reject("wrong number of decorated rises");
            if (spec.r && r_value(p, spec.r_semantics) != *spec.r) return reject("outside the requested r bucket");
            return {};
        }
        case Family::TwoShuffle: {
            if (!labels_are_permutation(p, size)) return reject("labels must be a permutation of 1..m+n");
            if (!in_three_shuffle(dinv_reading_word(p), 0, spec.n)) return reject("reading word is not in the shuffle");
            if (ndec != spec.k) return reject("wrong number of decorated rises");
            return {};
        }
        case Family::ShuffleKNM: {
            if (!labels_are_permutation(p, size)) return reject("labels must be a permutation of 1..m+n-k");
            if (!in_three_shuffle(dinv_reading_word(p), spec.k, spec.n))
                return reject("reading word is not in the shuffle");
            if (ndec != 0) return reject("shuffle paths carry no decorations");
            return {};
        }
        case Family::ReducedPolyomino: break;
    }
    return reject("unsupported family");
}

/// Membership of a polyomino word in RP(m,n)^{*k}.
inline Membership validate_family(const PolyominoWord& w, const FamilySpec& spec) {
    if (spec.family != Family::ReducedPolyomino) return reject("not a polyomino family");
    if (w.m() != spec.m || w.n() != spec.n) return reject("wrong polyomino dimensions");
    if (static_cast<int>(w.decorated_rises().size()) != spec.k) return reject("wrong number of decorated rises");
    return {};
}

}  // namespace dqt
