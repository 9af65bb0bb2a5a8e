#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "deltaqt/error.hpp"
#include "deltaqt/qt_polynomial.hpp"

namespace dqt {

/// Exact rational specialization point (q0, t0) with the per-variable degree bound in force.
struct EvalPoint {
    Rational q;
    Rational t;
    int degree_bound = 0;

    EvalPoint swapped() const { return {t, q, degree_bound}; }
    std::string to_string() const { return "(q=" + q.get_str() + ",t=" + t.get_str() + ")"; }
};

/// Quotient of two polynomials; only ever specialized, never normalized.
class QtRational {
public:
    QtRational(QtPolynomial num = {}, QtPolynomial den = 1) : num_(std::move(num)), den_(std::move(den)) {  // NOLINT
        if (den_.is_zero()) throw DomainError("QtRational: zero denominator");
    }
    const QtPolynomial& numerator() const { return num_; }
    const QtPolynomial& denominator() const { return den_; }

    Rational evaluate(const Rational& q0, const Rational& t0) const {
        Rational d = den_.evaluate(q0, t0);
        if (d == 0) throw PoleError("denominator vanishes at (" + q0.get_str() + "," + t0.get_str() + ")");
        return num_.evaluate(q0, t0) / d;
    }
    Rational evaluate(const EvalPoint& p) const { return evaluate(p.q, p.t); }

    friend QtRational operator*(const QtRational& a, const QtRational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend QtRational operator+(const QtRational& a, const QtRational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

private:
    QtPolynomial num_, den_;
};

/// Evaluators signal a pole by throwing PoleError.
using Evaluator = std::function<Rational(const EvalPoint&)>;

inline bool is_prime(long v) {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::vector<long> primes_from(long start, std::size_t count) {
    std::vector<long> out;
    for (long v = start; out.size() < count; ++v)
        if (is_prime(v)) out.push_back(v);
    return out;
}

/// The evaluation grid: q values from 2,3,5,... and t values from 101,103,... (kept disjoint).
struct PrimeGrid {
    std::vector<long> q_values;
    std::vector<long> t_values;
    std::vector<long> t_spares;

    explicit PrimeGrid(int degree_bound, std::size_t spares = 32) {
        if (degree_bound < 0) throw DomainError("negative degree bound");
        std::size_t n = static_cast<std::size_t>(degree_bound) + 1;
        q_values = primes_from(2, n);
        long t_start = std::max(101L, q_values.back() + 1);
        auto ts = primes_from(t_start, n + spares);
        t_values.assign(ts.begin(), ts.begin() + static_cast<long>(n));
        t_spares.assign(ts.begin() + static_cast<long>(n), ts.end());
    }

    std::vector<EvalPoint> points(int degree_bound) const {
        std::vector<EvalPoint> out;
        for (long q0 : q_values)
            for (long t0 : t_values) out.push_back({q0, t0, degree_bound});
        return out;
    }
};

struct GridComparison {
    bool equal = true;
    std::size_t points_checked = 0;
    std::size_t points_replaced = 0;
    std::optional<EvalPoint> witness;
    Rational f_value, g_value;

    explicit operator bool() const { return equal; }
};

/// Evaluate both sides at one grid cell, moving t to spare primes while either side has a pole there.
inline std::optional<std::pair<Rational, Rational>> evaluate_cell(const Evaluator& f, const Evaluator& g, EvalPoint& p,
                                                                  const PrimeGrid& grid, std::size_t& replaced) {
    for (std::size_t attempt = 0;; ++attempt) {
        try {
            Rational fv = f(p);
            Rational gv = g(p);
            return std::make_pair(fv, gv);
        } catch (const PoleError&) {
            if (attempt >= grid.t_spares.size()) return std::nullopt;
            p.t = grid.t_spares[attempt];
            ++replaced;
        }
    }
}

/// Decide f == g as polynomials of per-variable degree <= degree_bound by exact agreement on the prime grid.
inline GridComparison poly_equal_by_grid(const Evaluator& f, const Evaluator& g, int degree_bound) {
    PrimeGrid grid(degree_bound);
    GridComparison res;
    for (EvalPoint p : grid.points(degree_bound)) {
        auto vals = evaluate_cell(f, g, p, grid, res.points_replaced);
        if (!vals) throw InfeasibleGridError("no pole-free point near " + p.to_string());
        ++res.points_checked;
        if (vals->first != vals->second) {
            res.equal = false;
            res.witness = p;
            res.f_value = vals->first;
            res.g_value = vals->second;
            return res;
        }
    }
    return res;
}

/// Monomial coefficients of the unique polynomial of degree < xs.size() through (xs, ys).
inline std::vector<Rational> interpolate_univariate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    std::size_t n = xs.size();
    std::vector<Rational> dd(ys);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    std::vector<Rational> coef(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        // coef := coef * (x - xs[i]) + dd[i]
        std::vector<Rational> next(n, Rational(0));
        for (std::size_t d = 0; d + 1 < n; ++d) next[d + 1] += coef[d];
        for (std::size_t d = 0; d < n; ++d) next[d] -= coef[d] * xs[i];
        next[0] += dd[i];
        coef.swap(next);
    }
    return coef;
}

/// Recover a polynomial with integer coefficients from its values on the tensor prime grid.
inline QtPolynomial recover_polynomial(const Evaluator& f, int degree_bound) {
    PrimeGrid grid(degree_bound);
    std::size_t n = grid.q_values.size();
    std::vector<Rational> qs(grid.q_values.begin(), grid.q_values.end());
    std::vector<Rational> ts(grid.t_values.begin(), grid.t_values.end());
    // rows[j][a] = coefficient of q^a at t = ts[j]
    std::vector<std::vector<Rational>> rows;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> ys;
        for (std::size_t i = 0; i < n; ++i) ys.push_back(f(EvalPoint{qs[i], ts[j], degree_bound}));
        rows.push_back(interpolate_univariate(qs, ys));
    }
    QtPolynomial out;
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<Rational> ys;
        for (std::size_t j = 0; j < n; ++j) ys.push_back(rows[j][a]);
        auto cs = interpolate_univariate(ts, ys);
        for (std::size_t b = 0; b < n; ++b) {
            if (cs[b] == 0) continue;
            if (cs[b].get_den() != 1) throw DomainError("recovered polynomial has a non-integer coefficient");
            out.add_term(static_cast<int>(a), static_cast<int>(b), cs[b].get_num());
        }
    }
    return out;
}

/// Degree bound N(N-1)/2 for objects of size N.
inline int degree_bound_for_size(int n) { return n <= 1 ? 0 : n * (n - 1) / 2; }

}  // namespace dqt
