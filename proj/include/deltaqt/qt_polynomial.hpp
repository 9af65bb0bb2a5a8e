#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "deltaqt/error.hpp"

namespace dqt {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational_pow(const Rational& base, unsigned e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

/// Bivariate polynomial in q,t with arbitrary precision integer coefficients.
class QtPolynomial {
public:
    using Exponent = std::pair<int, int>;  // (q exponent, t exponent)
    using TermMap = std::map<Exponent, Integer>;

    QtPolynomial() = default;
    QtPolynomial(long c) { if (c != 0) terms_[{0, 0}] = c; }  // NOLINT
    QtPolynomial(const Integer& c) { if (c != 0) terms_[{0, 0}] = c; }  // NOLINT

    static QtPolynomial monomial(int qe, int te, const Integer& c = 1) {
        if (qe < 0 || te < 0) throw DomainError("negative exponent in monomial");
        QtPolynomial p;
        if (c != 0) p.terms_[{qe, te}] = c;
        return p;
    }
    static QtPolynomial q() { return monomial(1, 0); }
    static QtPolynomial t() { return monomial(0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Integer coefficient(int qe, int te) const {
        auto it = terms_.find({qe, te});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(int qe, int te, const Integer& c) {
        if (qe < 0 || te < 0) throw DomainError("negative exponent in polynomial term");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({qe, te}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int degree_q() const {
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }
    int degree_t() const {
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, e.second);
        return d;
    }

    QtPolynomial& operator+=(const QtPolynomial& o) {
        for (auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    QtPolynomial& operator-=(const QtPolynomial& o) {
        for (auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    QtPolynomial& operator*=(const QtPolynomial& o) { return *this = *this * o; }

    friend QtPolynomial operator+(QtPolynomial a, const QtPolynomial& b) { return a += b; }
    friend QtPolynomial operator-(QtPolynomial a, const QtPolynomial& b) { return a -= b; }
    friend QtPolynomial operator-(const QtPolynomial& a) { return QtPolynomial() - a; }
    friend QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b) {
        QtPolynomial r;
        for (auto& [e1, c1] : a.terms_)
            for (auto& [e2, c2] : b.terms_)
                r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
        return r;
    }
    friend bool operator==(const QtPolynomial& a, const QtPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QtPolynomial& a, const QtPolynomial& b) { return !(a == b); }

    /// Multiply by q^qe t^te.
    QtPolynomial shifted(int qe, int te) const {
        QtPolynomial r;
        for (auto& [e, c] : terms_) r.add_term(e.first + qe, e.second + te, c);
        return r;
    }

    /// Swap the roles of q and t.
    QtPolynomial transposed() const {
        QtPolynomial r;
        for (auto& [e, c] : terms_) r.terms_[{e.second, e.first}] = c;
        return r;
    }

    Rational evaluate(const Rational& q0, const Rational& t0) const {
        if (terms_.empty()) return 0;
        std::vector<Rational> qp(degree_q() + 1), tp(degree_t() + 1);
        qp[0] = 1;
        for (std::size_t i = 1; i < qp.size(); ++i) qp[i] = qp[i - 1] * q0;
        tp[0] = 1;
        for (std::size_t i = 1; i < tp.size(); ++i) tp[i] = tp[i - 1] * t0;
        Rational s = 0;
        for (auto& [e, c] : terms_) s += Rational(c) * qp[e.first] * tp[e.second];
        return s;
    }

    /// Value at q = t = 1.
    Integer at_one() const {
        Integer s = 0;
        for (auto& [e, c] : terms_) s += c;
        return s;
    }

    /// "q_exp,t_exp,coeff" header followed by one row per term in lexicographic exponent order.
    std::string to_csv() const {
        std::ostringstream os;
        os << "q_exp,t_exp,coeff\n";
        for (auto& [e, c] : terms_) os << e.first << ',' << e.second << ',' << c.get_str() << '\n';
        return os.str();
    }

    static QtPolynomial from_csv(const std::string& text) {
        std::istringstream is(text);
        std::string line;
        QtPolynomial p;
        bool header = true;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            if (header) {
                header = false;
                if (line.rfind("q_exp", 0) == 0) continue;
            }
            auto c1 = line.find(','), c2 = line.find(',', c1 == std::string::npos ? 0 : c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw ValidationError("malformed polynomial CSV row: " + line);
            p.add_term(std::stoi(line.substr(0, c1)), std::stoi(line.substr(c1 + 1, c2 - c1 - 1)),
                       Integer(line.substr(c2 + 1)));
        }
        return p;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            Integer a = abs(c);
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << '-';
            first = false;
            bool unit = (a == 1) && (e.first || e.second);
            if (!unit) os << a.get_str();
            if (e.first) os << (unit ? "" : "*") << 'q' << (e.first > 1 ? "^" + std::to_string(e.first) : "");
            if (e.second)
                os << ((unit && !e.first) ? "" : "*") << 't' << (e.second > 1 ? "^" + std::to_string(e.second) : "");
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const QtPolynomial& p) { return os << p.to_string(); }

private:
    TermMap terms_;
};

/// Exact quotient of two polynomials in q alone; throws if either involves t or the division leaves a remainder.
inline QtPolynomial exact_divide_q(QtPolynomial num, const QtPolynomial& den) {
    if (den.is_zero()) throw DomainError("division by the zero polynomial");
    if (num.degree_t() > 0 || den.degree_t() > 0) throw DomainError("exact_divide_q expects polynomials in q only");
    int dd = den.degree_q();
    Integer lead = den.coefficient(dd, 0);
    QtPolynomial quot;
    while (!num.is_zero() && num.degree_q() >= dd) {
        int nd = num.degree_q();
        Integer c = num.coefficient(nd, 0);
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) throw DomainError("inexact polynomial division");
        Integer f = c / lead;
        quot.add_term(nd - dd, 0, f);
        num -= den.shifted(nd - dd, 0) * QtPolynomial(f);
    }
    if (!num.is_zero()) throw DomainError("inexact polynomial division");
    return quot;
}

/// [n]_q = 1 + q + ... + q^{n-1}.
inline QtPolynomial q_int(int n) {
    if (n < 0) throw DomainError("q_int: negative argument");
    QtPolynomial p;
    for (int i = 0; i < n; ++i) p.add_term(i, 0, 1);
    return p;
}

inline QtPolynomial q_factorial(int n) {
    if (n < 0) throw DomainError("q_factorial: negative argument");
    QtPolynomial p = 1;
    for (int i = 2; i <= n; ++i) p *= q_int(i);
    return p;
}

/// Gaussian binomial by exact division of q-factorials; 0 when k < 0 or n < k.
inline QtPolynomial q_binomial(int n, int k) {
    if (n < 0) throw DomainError("q_binomial: negative n");
    if (k < 0 || n < k) return {};
    static std::mutex mu;
    static std::map<std::pair<int, int>, QtPolynomial> memo;
    {
        std::lock_guard lock(mu);
        auto it = memo.find({n, k});
        if (it != memo.end()) return it->second;
    }
    QtPolynomial r = exact_divide_q(q_factorial(n), q_factorial(k) * q_factorial(n - k));
    std::lock_guard lock(mu);
    memo.emplace(std::make_pair(n, k), r);
    return r;
}

}  // namespace dqt
