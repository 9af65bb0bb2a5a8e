#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "deltaqt/error.hpp"

namespace dqt {

/// A letter of the alphabet 0 < 0̄ < 1 < 1̄ < 2 < ...
struct Letter {
    int value = 0;
    bool barred = false;

    int rank() const { return 2 * value + (barred ? 1 : 0); }
    static Letter from_rank(int r) { return {r / 2, (r % 2) != 0}; }
    Letter successor() const { return from_rank(rank() + 1); }

    std::string to_string() const { return std::to_string(value) + (barred ? "'" : ""); }
    auto operator<=>(const Letter&) const = default;
};

/// Area word of a reduced polyomino; letter 0 is the ghost letter, decorated indices refer to letter positions.
class PolyominoWord {
public:
    PolyominoWord() : letters_{{0, false}} {}
    explicit PolyominoWord(std::vector<Letter> letters, std::set<int> decorated_rises = {})
        : letters_(std::move(letters)), decorated_(std::move(decorated_rises)) {
        check();
    }

    const std::vector<Letter>& letters() const { return letters_; }
    const std::set<int>& decorated_rises() const { return decorated_; }
    int length() const { return static_cast<int>(letters_.size()); }
    const Letter& operator[](std::size_t i) const { return letters_.at(i); }

    int m() const {
        int u = 0;
        for (auto& l : letters_) u += !l.barred;
        return u - 1;
    }
    int n() const { return length() - 1 - m(); }

    bool is_rise(int i) const { return i >= 1 && i < length() && letters_[i].value > letters_[i - 1].value; }

    /// Compact text form: "0 0' 1 1' ..." with ' marking a bar.
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) s += ' ';
            s += letters_[i].to_string();
            if (decorated_.count(static_cast<int>(i))) s += '*';
        }
        return s;
    }

    /// Parse the compact text form.
    static PolyominoWord parse(const std::string& text) {
        std::vector<Letter> ls;
        std::set<int> dec;
        std::size_t i = 0;
        while (i < text.size()) {
            if (text[i] == ' ') {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
            if (j == i) throw ValidationError("bad polyomino letter in '" + text + "'");
            Letter l{std::stoi(text.substr(i, j - i)), false};
            if (j < text.size() && text[j] == '\'') {
                l.barred = true;
                ++j;
            }
            if (j < text.size() && text[j] == '*') {
                dec.insert(static_cast<int>(ls.size()));
                ++j;
            }
            ls.push_back(l);
            i = j;
        }
        return PolyominoWord(std::move(ls), std::move(dec));
    }

    auto operator<=>(const PolyominoWord&) const = default;

private:
    void check() const {
        if (letters_.empty() || letters_[0] != Letter{0, false})
            throw ValidationError("polyomino word must start with the unbarred ghost letter 0");
        for (std::size_t i = 1; i < letters_.size(); ++i) {
            if (letters_[i].value < 0) throw ValidationError("negative polyomino letter");
            if (letters_[i].rank() > letters_[i - 1].rank() + 1)
                throw ValidationError("successor rule violated at letter " + std::to_string(i));
        }
        for (int d : decorated_)
            if (!is_rise(d)) throw ValidationError("decorated letter " + std::to_string(d) + " is not a rise");
    }

    std::vector<Letter> letters_;
    std::set<int> decorated_;
};

inline std::vector<int> rises(const PolyominoWord& w) {
    std::vector<int> r;
    for (int i = 1; i < w.length(); ++i)
        if (w.is_rise(i)) r.push_back(i);
    return r;
}

struct PolyominoStats {
    int area = 0;
    int dinv = 0;
    std::vector<int> rises;
};

inline PolyominoStats polyomino_stats(const PolyominoWord& w) {
    PolyominoStats s;
    const auto& ls = w.letters();
    for (int i = 0; i < w.length(); ++i)
        if (!w.decorated_rises().count(i)) s.area += ls[i].value;
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j)
            if (ls[i].rank() == ls[j].rank() + 1) ++s.dinv;
    s.rises = rises(w);
    return s;
}

/// Red (upper) and green (lower) north/east paths from (0,0) to (m,n), written over {'N','E'}, ghost steps omitted.
/// Decorations ride along as letter indices of the associated word.
struct PathPair {
    std::string red;
    std::string green;
    std::set<int> decorated_rises;

    int m() const {
        int c = 0;
        for (char ch : red) c += (ch == 'E');
        return c;
    }
    int n() const { return static_cast<int>(red.size()) - m(); }
    auto operator<=>(const PathPair&) const = default;
};

/// Word from paths: walk the slope -1 diagonals; on each, a vertical red step contributes its barred row count
/// (read first) and a horizontal green step its diagonal length.
inline PolyominoWord polyomino_word_from_paths(const PathPair& pp) {
    if (pp.red.size() != pp.green.size()) throw GeometryError("red and green paths have different lengths");
    for (std::size_t i = 0; i < pp.red.size(); ++i)
        for (char ch : {pp.red[i], pp.green[i]})
            if (ch != 'N' && ch != 'E') throw GeometryError("paths must use only N and E steps");
    int w = 0;  // green x minus red x on the current diagonal
    int re = 0, ge = 0;
    std::vector<Letter> word{{0, false}};  // ghost steps
    for (std::size_t i = 0; i < pp.red.size(); ++i) {
        char r = pp.red[i], g = pp.green[i];
        if (r == 'N') word.push_back({w, true});
        w += (g == 'E') - (r == 'E');
        re += (r == 'E');
        ge += (g == 'E');
        if (w < 0) throw GeometryError("red path passes below the green path at step " + std::to_string(i + 1));
        if (g == 'E') word.push_back({w, false});
    }
    if (re != ge) throw GeometryError("red and green paths end at different points");
    return PolyominoWord(std::move(word), pp.decorated_rises);
}

/// Paths from word: the inverse diagonal walk.
inline PathPair polyomino_paths_from_word(const PolyominoWord& word) {
    const auto& ls = word.letters();
    PathPair pp;
    pp.decorated_rises = word.decorated_rises();
    int w = 0;
    std::size_t i = 1;
    auto step = [&](char r, char g) {
        pp.red += r;
        pp.green += g;
    };
    while (i < ls.size()) {
        const Letter& l = ls[i];
        if (l.value > w) throw GeometryError("letter " + std::to_string(i) + " exceeds the diagonal width");
        if (!l.barred) {
            if (l.value == w) {
                step('E', 'E');
                ++i;
            } else {
                step('E', 'N');
                --w;
            }
        } else if (l.value < w) {
            step('E', 'N');
            --w;
        } else if (i + 1 < ls.size() && ls[i + 1] == Letter{w + 1, false}) {
            step('N', 'E');
            ++w;
            i += 2;
        } else {
            step('N', 'N');
            ++i;
        }
    }
    while (w > 0) {
        step('E', 'N');
        --w;
    }
    return pp;
}

}  // namespace dqt
