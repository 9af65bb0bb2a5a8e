#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "deltaqt/error.hpp"
#include "deltaqt/partition.hpp"
#include "deltaqt/qt_polynomial.hpp"
#include "deltaqt/qt_rational.hpp"
#include "deltaqt/symfun.hpp"

namespace dqt {

inline int& macdonald_degree_cap() {
    static int cap = 7;
    return cap;
}

// ---------------------------------------------------------------- invariants

struct PartitionInvariants {
    MonomialAlphabet B;
    QtPolynomial T;
    QtPolynomial Pi;
    QtPolynomial w;
    QtPolynomial M;
};

struct InvariantValues {
    Rational B, T, Pi, w, M;
};

namespace detail {
inline PartitionInvariants compute_invariants(const Partition& mu) {
    PartitionInvariants inv{MonomialAlphabet(), QtPolynomial(1), QtPolynomial(1), QtPolynomial(1),
                            MonomialAlphabet::M().as_polynomial()};
    std::vector<MonomialAlphabet::Term> b;
    for (const Cell& c : mu.cells()) {
        int a1 = mu.coarm(c), l1 = mu.coleg(c), a = mu.arm(c), l = mu.leg(c);
        b.push_back({1, a1, l1});
        inv.T = inv.T * QtPolynomial::monomial(a1, l1);
        if (a1 || l1) inv.Pi = inv.Pi * (QtPolynomial(1) - QtPolynomial::monomial(a1, l1));
        inv.w = inv.w * (QtPolynomial::monomial(a, 0) - QtPolynomial::monomial(0, l + 1)) *
                (QtPolynomial::monomial(0, l) - QtPolynomial::monomial(a + 1, 0));
    }
    inv.B = MonomialAlphabet(b);
    return inv;
}
}  // namespace detail

inline const PartitionInvariants& partition_invariants(const Partition& mu) {
    static std::mutex lock;
    static std::map<std::vector<int>, PartitionInvariants> cache;
    std::lock_guard guard(lock);
    auto it = cache.find(mu.parts());
    if (it == cache.end()) it = cache.emplace(mu.parts(), detail::compute_invariants(mu)).first;
    return it->second;
}

inline InvariantValues partition_invariants(const Partition& mu, const EvalPoint& at) {
    thread_local std::map<std::tuple<std::vector<int>, Rational, Rational>, InvariantValues> cache;
    auto key = std::make_tuple(mu.parts(), at.q, at.t);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const auto& s = partition_invariants(mu);
    InvariantValues v{s.B.power_sum(1, at.q, at.t), s.T.evaluate(at.q, at.t), s.Pi.evaluate(at.q, at.t),
                      s.w.evaluate(at.q, at.t), s.M.evaluate(at.q, at.t)};
    if (cache.size() > 65536) cache.clear();
    return cache.emplace(std::move(key), v).first->second;
}

/// B_mu - 1.
inline MonomialAlphabet b_minus_one(const Partition& mu) {
    return partition_invariants(mu).B - MonomialAlphabet::one();
}

/// Coefficient of H~_mu in e_n: M B_mu Pi_mu / w_mu, with 1 for the empty partition.
inline Rational en_coef(const Partition& mu, const EvalPoint& at) {
    if (mu.empty()) return 1;
    auto v = partition_invariants(mu, at);
    if (v.w == 0) throw PoleError("w_mu vanishes at " + at.to_string());
    return v.M * v.B * v.Pi / v.w;
}

// ---------------------------------------------------------------- modified Macdonald polynomials

namespace detail {

struct FillingShape {
    std::vector<Cell> cells;        // reading order: rows top to bottom, left to right
    std::vector<int> below;         // index of the cell directly below, or -1
    std::vector<int> maj_weight;    // leg + 1
    std::vector<int> arm;
    std::vector<std::pair<int, int>> attacking;  // (earlier, later) in reading order
};

inline FillingShape filling_shape(const Partition& mu) {
    FillingShape s;
    for (int r = mu.length() - 1; r >= 0; --r)
        for (int c = 0; c < mu[static_cast<std::size_t>(r)]; ++c) s.cells.push_back({r, c});
    std::map<Cell, int> idx;
    for (std::size_t i = 0; i < s.cells.size(); ++i) idx[s.cells[i]] = static_cast<int>(i);
    for (const Cell& c : s.cells) {
        s.below.push_back(c.row > 0 ? idx.at({c.row - 1, c.col}) : -1);
        s.maj_weight.push_back(mu.leg(c) + 1);
        s.arm.push_back(mu.arm(c));
    }
    for (std::size_t i = 0; i < s.cells.size(); ++i)
        for (std::size_t j = i + 1; j < s.cells.size(); ++j) {
            const Cell& u = s.cells[i];
            const Cell& v = s.cells[j];
            if (u.row == v.row || (u.row == v.row + 1 && v.col < u.col))
                s.attacking.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    return s;
}

/// Sum of q^inv t^maj over fillings of mu with content lambda.
inline QtPolynomial filling_sum(const FillingShape& s, const std::vector<int>& lambda) {
    std::vector<int> values;
    for (std::size_t v = 0; v < lambda.size(); ++v) values.insert(values.end(), static_cast<std::size_t>(lambda[v]), static_cast<int>(v) + 1);
    std::map<std::pair<int, int>, long long> acc;
    do {
        int maj = 0, inv = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            int b = s.below[i];
            if (b >= 0 && values[i] > values[static_cast<std::size_t>(b)]) {
                maj += s.maj_weight[i];
                inv -= s.arm[i];
            }
        }
        for (auto [i, j] : s.attacking)
            if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(j)]) ++inv;
        ++acc[{inv, maj}];
    } while (std::next_permutation(values.begin(), values.end()));
    QtPolynomial p;
    for (auto& [e, c] : acc) p.add_term(e.first, e.second, Integer(static_cast<long>(c)));
    return p;
}

}  // namespace detail

/// Monomial-basis coefficients of H~_mu, indexed like partitions_of(|mu|).
namespace detail {
inline void require_degree_cap(const Partition& mu) {
    if (mu.size() > macdonald_degree_cap())
        throw CapacityError("|mu| = " + std::to_string(mu.size()) + " exceeds the degree cap " +
                            std::to_string(macdonald_degree_cap()));
}
}  // namespace detail

inline const std::vector<QtPolynomial>& htilde_symbolic(const Partition& mu) {
    static std::mutex mu_lock;
    static std::map<std::vector<int>, std::vector<QtPolynomial>> cache;
    detail::require_degree_cap(mu);
    std::lock_guard lock(mu_lock);
    auto it = cache.find(mu.parts());
    if (it != cache.end()) return it->second;
    std::vector<QtPolynomial> coeffs;
    auto shape = detail::filling_shape(mu);
    for (const Partition& lam : partitions_of(mu.size())) coeffs.push_back(detail::filling_sum(shape, lam.parts()));
    return cache.emplace(mu.parts(), std::move(coeffs)).first->second;
}

/// H~_mu with coefficients specialized at the point.
inline SymFun htilde(const Partition& mu, const EvalPoint& at) {
    detail::require_degree_cap(mu);
    thread_local std::map<std::tuple<std::vector<int>, Rational, Rational>, SymFun> cache;
    auto key = std::make_tuple(mu.parts(), at.q, at.t);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto& sym = htilde_symbolic(mu);
    SymFun f(mu.size());
    for (std::size_t i = 0; i < sym.size(); ++i) f.monomial_coefficients()[i] = sym[i].evaluate(at.q, at.t);
    if (cache.size() > 4096) cache.clear();
    return cache.emplace(std::move(key), f).first->second;
}

inline Rational htilde_at_alphabet(const Partition& mu, const MonomialAlphabet& A, const EvalPoint& at) {
    return htilde(mu, at).at_alphabet(A, at.q, at.t);
}

// ---------------------------------------------------------------- Hall pairings

inline Rational hall_pair_h(const Partition& mu, const std::vector<int>& nu, const EvalPoint& at) {
    std::vector<int> parts;
    for (int x : nu) {
        if (x < 0) return 0;
        if (x > 0) parts.push_back(x);
    }
    return htilde(mu, at).pair_with_h(parts);
}

/// <H~_mu, e_k h_a h_b>.
inline Rational hall_pair_ehh(const Partition& mu, int k, int a, int b, const EvalPoint& at) {
    if (k < 0 || a < 0 || b < 0) return 0;
    if (k + a + b != mu.size()) throw DomainError("Hall pairing: degree mismatch");
    SymFun f = htilde(mu, at);
    Rational s = 0;
    for (auto& [sign, alpha] : elementary_as_complete(k)) {
        std::vector<int> parts = alpha;
        if (a) parts.push_back(a);
        if (b) parts.push_back(b);
        s += sign * f.pair_with_h(parts);
    }
    return s;
}

/// <H~_mu, s_{(n-r,1^r)}>.
inline Rational hall_pair_hook(const Partition& mu, int r, const EvalPoint& at) {
    const int n = mu.size();
    if (r < 0 || r >= n) throw DomainError("hook requires 0 <= r < |mu|");
    SymFun f = htilde(mu, at);
    Rational s = 0;
    for (auto& [sign, parts] : hook_schur_as_complete(n, r)) s += sign * f.pair_with_h(parts);
    return s;
}

// ---------------------------------------------------------------- evaluators

namespace detail {
template <class F>
Rational memo_eval(char tag, int m, int n, int k, const EvalPoint& at, F&& compute) {
    thread_local std::map<std::tuple<char, int, int, int, Rational, Rational>, Rational> cache;
    auto key = std::make_tuple(tag, m, n, k, at.q, at.t);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    Rational v = compute();
    if (cache.size() > 65536) cache.clear();
    cache.emplace(std::move(key), v);
    return v;
}
}  // namespace detail

inline void require_nonneg(std::initializer_list<int> xs) {
    for (int x : xs)
        if (x < 0) throw DomainError("parameters must be non-negative");
}

/// <Delta'_{e_{m+n-k-1}} e_{m+n}, h_m h_n>.
inline Rational lhs_delta_hh(int m, int n, int k, const EvalPoint& at) {
    require_nonneg({m, n, k});
    return detail::memo_eval('L', m, n, k, at, [&]() -> Rational {
        const int N = m + n;
        Rational s = 0;
        for (const Partition& mu : partitions_of(N)) {
            Rational c = pleth_eh('e', N - k - 1, b_minus_one(mu), at);
            if (c == 0) continue;
            s += c * en_coef(mu, at) * hall_pair_h(mu, {m, n}, at);
        }
        return s;
    });
}

/// <Delta_{h_n} Delta'_{e_{m-k}} e_{m+1}, h_{m+1}>.
inline Rational mid_delta_hn(int m, int n, int k, const EvalPoint& at) {
    require_nonneg({m, n, k});
    return detail::memo_eval('M', m, n, k, at, [&]() -> Rational {
        Rational s = 0;
        for (const Partition& lam : partitions_of(m + 1)) {
            Rational c = pleth_eh('e', m - k, b_minus_one(lam), at);
            if (c == 0) continue;
            s += pleth_eh('h', n, partition_invariants(lam).B, at) * c * en_coef(lam, at);
        }
        return s;
    });
}

/// <nabla e_{m+n-k}, e_k h_{n-k} h_{m-k}>.
inline Rational rhs_nabla_ehh(int m, int n, int k, const EvalPoint& at) {
    require_nonneg({m, n, k});
    return detail::memo_eval('R', m, n, k, at, [&]() -> Rational {
        if (k > m || k > n) return 0;
        Rational s = 0;
        for (const Partition& mu : partitions_of(m + n - k)) {
            Rational T = partition_invariants(mu, at).T;
            s += T * en_coef(mu, at) * hall_pair_ehh(mu, k, n - k, m - k, at);
        }
        return s;
    });
}

/// sum_{r=1}^{m-k+1} t^{m-k-r+1} <Delta_{h_{m-k-r+1}} Delta_{e_k} e_n[X [r]_q], e_n>.
inline Rational sum_r_lhs(int m, int n, int k, const EvalPoint& at) {
    require_nonneg({m, n, k});
    return detail::memo_eval('S', m, n, k, at, [&]() -> Rational {
        Rational total = 0;
        for (int r = 1; r <= m - k + 1; ++r) {
            const int j = m - k - r + 1;
            MonomialAlphabet Y = MonomialAlphabet::M() * MonomialAlphabet::q_integer(r);
            Rational inner = 0;
            if (n == 0) {
                inner = pleth_eh('h', j, MonomialAlphabet(), at) * pleth_eh('e', k, MonomialAlphabet(), at);
            } else {
                for (const Partition& mu : partitions_of(n)) {
                    const auto& B = partition_invariants(mu).B;
                    Rational eig = pleth_eh('h', j, B, at) * pleth_eh('e', k, B, at);
                    if (eig == 0) continue;
                    auto v = partition_invariants(mu, at);
                    if (v.w == 0) throw PoleError("w_mu vanishes at " + at.to_string());
                    inner += eig * htilde_at_alphabet(mu, Y, at) / v.w * hall_pair_hook(mu, n - 1, at);
                }
            }
            total += rational_pow(at.t, static_cast<unsigned>(j)) * inner;
        }
        return total;
    });
}

/// Coefficient of m_lambda in Delta_{h_m} Delta'_{e_{n-k-1}} e_n.
inline Rational delta_lhs_by_content(int m, int n, int k, const Partition& lambda, const EvalPoint& at) {
    require_nonneg({m, n, k});
    if (lambda.size() != n) throw DomainError("content must be a partition of n");
    Rational s = 0;
    for (const Partition& mu : partitions_of(n)) {
        const auto& B = partition_invariants(mu).B;
        Rational c = pleth_eh('h', m, B, at) * pleth_eh('e', n - k - 1, b_minus_one(mu), at);
        if (c == 0) continue;
        s += c * en_coef(mu, at) * htilde(mu, at).coefficient_m(lambda);
    }
    return s;
}

/// <Delta_{e_d} f, h_n> for f = H~_mu, i.e. e_d[B_mu].
inline Rational delta_e_htilde_vs_h(const Partition& mu, int d, const EvalPoint& at) {
    return pleth_eh('e', d, partition_invariants(mu).B, at) * hall_pair_h(mu, {mu.size()}, at);
}

/// <Delta_{e_d} e_n, h_n> through the H~ expansion of e_n.
inline Rational delta_e_en_vs_h(int n, int d, const EvalPoint& at) {
    Rational s = 0;
    for (const Partition& mu : partitions_of(n))
        s += pleth_eh('e', d, partition_invariants(mu).B, at) * en_coef(mu, at) * hall_pair_h(mu, {n}, at);
    return s;
}

/// <e_n, e_d h_{n-d}> from the elementary-to-monomial transition.
inline Rational en_pair_ehh(int n, int d) {
    SymFun en = SymFun::basis_element(Basis::Elementary, Partition(n ? std::vector<int>{n} : std::vector<int>{}));
    Rational s = 0;
    for (auto& [sign, alpha] : elementary_as_complete(d)) {
        auto parts = alpha;
        if (n - d) parts.push_back(n - d);
        s += sign * en.pair_with_h(parts);
    }
    return s;
}

struct ReciprocitySides {
    Rational left, right;
    bool equal() const { return left == right; }
};

/// H~_alpha[M B_beta]/Pi_alpha and H~_beta[M B_alpha]/Pi_beta.
inline ReciprocitySides reciprocity_sides(const Partition& alpha, const Partition& beta, const EvalPoint& at) {
    auto ia = partition_invariants(alpha), ib = partition_invariants(beta);
    Rational pa = ia.Pi.evaluate(at.q, at.t), pb = ib.Pi.evaluate(at.q, at.t);
    if (pa == 0 || pb == 0) throw PoleError("Pi vanishes at " + at.to_string());
    MonomialAlphabet M = MonomialAlphabet::M();
    Rational l = alpha.empty() ? Rational(1) : htilde_at_alphabet(alpha, M * ib.B, at);
    Rational r = beta.empty() ? Rational(1) : htilde_at_alphabet(beta, M * ia.B, at);
    return {l / pa, r / pb};
}

inline bool reciprocity_check(const Partition& alpha, const Partition& beta, const EvalPoint& at) {
    return reciprocity_sides(alpha, beta, at).equal();
}

}  // namespace dqt
