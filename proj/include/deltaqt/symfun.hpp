#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "deltaqt/error.hpp"
#include "deltaqt/partition.hpp"
#include "deltaqt/qt_polynomial.hpp"
#include "deltaqt/qt_rational.hpp"

namespace dqt {

// ---------------------------------------------------------------- alphabets

/// Signed multiset of monomials sign * q^a t^b.
class MonomialAlphabet {
public:
    struct Term {
        int sign;
        int q;
        int t;
        auto operator<=>(const Term&) const = default;
    };

    MonomialAlphabet() = default;
    explicit MonomialAlphabet(std::vector<Term> terms) : terms_(std::move(terms)) {
        for (auto& x : terms_)
            if (x.sign != 1 && x.sign != -1) throw ValidationError("alphabet signs must be +1 or -1");
    }

    static MonomialAlphabet one() { return MonomialAlphabet({{1, 0, 0}}); }
    /// M = (1-q)(1-t).
    static MonomialAlphabet M() { return MonomialAlphabet({{1, 0, 0}, {-1, 1, 0}, {-1, 0, 1}, {1, 1, 1}}); }
    /// [r]_q = 1 + q + ... + q^{r-1}.
    static MonomialAlphabet q_integer(int r) {
        std::vector<Term> ts;
        for (int i = 0; i < r; ++i) ts.push_back({1, i, 0});
        return MonomialAlphabet(ts);
    }

    const std::vector<Term>& terms() const { return terms_; }

    friend MonomialAlphabet operator+(const MonomialAlphabet& a, const MonomialAlphabet& b) {
        auto ts = a.terms_;
        ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
        return MonomialAlphabet(ts);
    }
    friend MonomialAlphabet operator-(const MonomialAlphabet& a, const MonomialAlphabet& b) {
        auto ts = a.terms_;
        for (auto x : b.terms_) ts.push_back({-x.sign, x.q, x.t});
        return MonomialAlphabet(ts);
    }
    friend MonomialAlphabet operator*(const MonomialAlphabet& a, const MonomialAlphabet& b) {
        std::vector<Term> ts;
        for (auto& x : a.terms_)
            for (auto& y : b.terms_) ts.push_back({x.sign * y.sign, x.q + y.q, x.t + y.t});
        return MonomialAlphabet(ts);
    }

    /// p_j[A] = sum sign * (q0^j)^a (t0^j)^b.
    Rational power_sum(int j, const Rational& q0, const Rational& t0) const {
        Rational s = 0;
        for (auto& x : terms_)
            s += x.sign * rational_pow(q0, static_cast<unsigned>(j * x.q)) *
                 rational_pow(t0, static_cast<unsigned>(j * x.t));
        return s;
    }

    /// The alphabet as a polynomial (its first power sum, symbolically).
    QtPolynomial as_polynomial() const {
        QtPolynomial p;
        for (auto& x : terms_) p.add_term(x.q, x.t, x.sign);
        return p;
    }

private:
    std::vector<Term> terms_;
};

/// e_r[A] or h_r[A] at (q0,t0) by Newton's identities on the power sums; 1 for r = 0, 0 for r < 0.
inline Rational pleth_eh(char kind, int r, const MonomialAlphabet& A, const Rational& q0, const Rational& t0) {
    if (kind != 'e' && kind != 'h') throw DomainError("pleth_eh: kind must be 'e' or 'h'");
    if (r < 0) return 0;
    if (r == 0) return 1;
    std::vector<Rational> p(static_cast<std::size_t>(r) + 1);
    for (int j = 1; j <= r; ++j) p[static_cast<std::size_t>(j)] = A.power_sum(j, q0, t0);
    std::vector<Rational> v{Rational(1)};
    for (int n = 1; n <= r; ++n) {
        Rational s = 0;
        for (int i = 1; i <= n; ++i) {
            Rational term = p[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(n - i)];
            if (kind == 'e' && (i % 2 == 0)) s -= term;
            else s += term;
        }
        v.push_back(s / n);
    }
    return v[static_cast<std::size_t>(r)];
}

inline Rational pleth_eh(char kind, int r, const MonomialAlphabet& A, const EvalPoint& at) {
    return pleth_eh(kind, r, A, at.q, at.t);
}

// ---------------------------------------------------------------- bases

enum class Basis { Monomial, Complete, Elementary, PowerSum };

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix invert(RationalMatrix a) {
    const std::size_t n = a.size();
    RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw DomainError("singular transition matrix");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        Rational d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

namespace detail {

/// Number of ways to distribute the (distinguishable) parts of rho into slots with sums lambda.
inline long count_part_assignments(const std::vector<int>& rho, std::vector<int> slots, std::size_t i = 0) {
    if (i == rho.size()) {
        for (int s : slots)
            if (s) return 0;
        return 1;
    }
    long c = 0;
    for (auto& s : slots)
        if (s >= rho[i]) {
            s -= rho[i];
            c += count_part_assignments(rho, slots, i + 1);
            s += rho[i];
        }
    return c;
}

/// Number of matrices with row sums nu and column sums lambda, entries in [0, cap].
inline long count_matrices(const std::vector<int>& nu, std::vector<int> cols, int cap, std::size_t row = 0) {
    if (row == nu.size()) {
        for (int c : cols)
            if (c) return 0;
        return 1;
    }
    long total = 0;
    std::function<void(std::size_t, int)> fill = [&](std::size_t j, int left) {
        if (j == cols.size()) {
            if (left == 0) total += count_matrices(nu, cols, cap, row + 1);
            return;
        }
        for (int x = 0; x <= std::min({left, cols[j], cap}); ++x) {
            cols[j] -= x;
            fill(j + 1, left - x);
            cols[j] += x;
        }
    };
    fill(0, nu[row]);
    return total;
}

}  // namespace detail

/// Transition data of degree d: row nu of to_m[basis] expands that basis element in the monomial basis.
struct DegreeTables {
    std::vector<Partition> partitions;
    std::map<std::vector<int>, std::size_t> index;
    std::map<Basis, RationalMatrix> to_m;
    std::map<Basis, RationalMatrix> from_m;
};

inline const DegreeTables& degree_tables(int d) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<DegreeTables>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[d];
    if (slot) return *slot;
    if (d < 0) throw DomainError("negative degree");
    auto tb = std::make_unique<DegreeTables>();
    tb->partitions = partitions_of(d);
    const std::size_t n = tb->partitions.size();
    for (std::size_t i = 0; i < n; ++i) tb->index[tb->partitions[i].parts()] = i;
    RationalMatrix id(n, std::vector<Rational>(n, Rational(0))), h(id), e(id), p(id);
    for (std::size_t i = 0; i < n; ++i) {
        id[i][i] = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& nu = tb->partitions[i].parts();
            const auto& lam = tb->partitions[j].parts();
            h[i][j] = detail::count_matrices(nu, lam, d);
            e[i][j] = detail::count_matrices(nu, lam, 1);
            p[i][j] = detail::count_part_assignments(nu, lam);
        }
    }
    tb->to_m[Basis::Monomial] = id;
    tb->to_m[Basis::Complete] = h;
    tb->to_m[Basis::Elementary] = e;
    tb->to_m[Basis::PowerSum] = p;
    for (auto& [b, mat] : tb->to_m) tb->from_m[b] = invert(mat);
    slot = std::move(tb);
    return *slot;
}

/// Homogeneous symmetric function of degree d with rational coefficients, stored in the monomial basis.
class SymFun {
public:
    explicit SymFun(int degree = 0) : degree_(degree), m_(degree_tables(degree).partitions.size(), Rational(0)) {}

    static SymFun from_basis(Basis b, int degree, const std::vector<Rational>& coeffs) {
        SymFun f(degree);
        const auto& tb = degree_tables(degree);
        if (coeffs.size() != tb.partitions.size()) throw DomainError("coefficient vector has the wrong length");
        const auto& T = tb.to_m.at(b);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            for (std::size_t j = 0; j < coeffs.size(); ++j) f.m_[j] += coeffs[i] * T[i][j];
        }
        return f;
    }

    /// A single basis element b_lambda.
    static SymFun basis_element(Basis b, const Partition& lambda) {
        int d = lambda.size();
        const auto& tb = degree_tables(d);
        std::vector<Rational> c(tb.partitions.size(), Rational(0));
        c[tb.index.at(lambda.parts())] = 1;
        return from_basis(b, d, c);
    }

    int degree() const { return degree_; }
    const std::vector<Partition>& partitions() const { return degree_tables(degree_).partitions; }
    const std::vector<Rational>& monomial_coefficients() const { return m_; }
    std::vector<Rational>& monomial_coefficients() { return m_; }

    std::vector<Rational> coefficients(Basis b) const {
        const auto& inv = degree_tables(degree_).from_m.at(b);
        std::vector<Rational> out(m_.size(), Rational(0));
        for (std::size_t j = 0; j < m_.size(); ++j) {
            if (m_[j] == 0) continue;
            for (std::size_t i = 0; i < m_.size(); ++i) out[i] += m_[j] * inv[j][i];
        }
        return out;
    }

    Rational coefficient_m(const Partition& lambda) const {
        if (lambda.size() != degree_) return 0;
        return m_[degree_tables(degree_).index.at(lambda.parts())];
    }

    /// Hall scalar product with h_nu: the m_nu coefficient.
    Rational pair_with_h(const std::vector<int>& parts) const {
        Partition nu = Partition::from_unsorted(parts);
        if (nu.size() != degree_) throw DomainError("Hall pairing: degree mismatch");
        return coefficient_m(nu);
    }

    /// Plethystic evaluation f[A]: coefficients fixed, p_j -> p_j[A] at (q0,t0).
    Rational at_alphabet(const MonomialAlphabet& A, const Rational& q0, const Rational& t0) const {
        auto pc = coefficients(Basis::PowerSum);
        const auto& parts = partitions();
        std::map<int, Rational> pj;
        Rational s = 0;
        for (std::size_t i = 0; i < pc.size(); ++i) {
            if (pc[i] == 0) continue;
            Rational prod = 1;
            for (int part : parts[i].parts()) {
                auto it = pj.find(part);
                if (it == pj.end()) it = pj.emplace(part, A.power_sum(part, q0, t0)).first;
                prod *= it->second;
            }
            s += pc[i] * prod;
        }
        return s;
    }

    friend SymFun operator+(SymFun a, const SymFun& b) {
        if (a.degree_ != b.degree_) throw DomainError("adding symmetric functions of different degrees");
        for (std::size_t i = 0; i < a.m_.size(); ++i) a.m_[i] += b.m_[i];
        return a;
    }
    friend SymFun operator*(const Rational& c, SymFun a) {
        for (auto& x : a.m_) x *= c;
        return a;
    }
    friend bool operator==(const SymFun& a, const SymFun& b) { return a.degree_ == b.degree_ && a.m_ == b.m_; }

private:
    int degree_;
    std::vector<Rational> m_;
};

/// e_k as a signed sum of complete products: e_k = sum over compositions alpha of k of (-1)^{k-l(alpha)} h_alpha.
inline std::vector<std::pair<int, std::vector<int>>> elementary_as_complete(int k) {
    std::vector<std::pair<int, std::vector<int>>> out;
    if (k < 0) return out;
    for (auto& alpha : compositions_of(k)) out.push_back({((k - static_cast<int>(alpha.size())) % 2) ? -1 : 1, alpha});
    return out;
}

/// Hook Schur function s_{(n-r,1^r)} as a signed sum of complete products (Jacobi-Trudi).
inline std::vector<std::pair<int, std::vector<int>>> hook_schur_as_complete(int n, int r) {
    if (r < 0 || r >= n) throw DomainError("hook requires 0 <= r < n");
    std::vector<int> lam{n - r};
    for (int i = 0; i < r; ++i) lam.push_back(1);
    const int L = static_cast<int>(lam.size());
    std::vector<int> perm(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::pair<int, std::vector<int>>> out;
    do {
        int sign = 1;
        for (int i = 0; i < L; ++i)
            for (int j = i + 1; j < L; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) sign = -sign;
        std::vector<int> parts;
        bool ok = true;
        for (int i = 0; i < L; ++i) {
            int idx = lam[static_cast<std::size_t>(i)] - i + perm[static_cast<std::size_t>(i)];
            if (idx < 0) {
                ok = false;
                break;
            }
            if (idx > 0) parts.push_back(idx);
        }
        if (ok) out.push_back({sign, parts});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace dqt
