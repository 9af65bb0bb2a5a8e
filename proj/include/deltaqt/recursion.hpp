#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "deltaqt/enumerate.hpp"
#include "deltaqt/family.hpp"
#include "deltaqt/qt_polynomial.hpp"

namespace dqt {

/// Index conventions for the PF^2(m\r,n)^{*k} recursion template.
struct RecursionConvention {
    int c1 = 1;  // t exponent offset
    int c2 = 0;  // offset in qbinom(r+s-1+c2, s)
    int c3 = 0;  // offset in the recursive m argument
    int base_shift = 0;            // base case is delta_{m+base_shift, r} delta_{k,0}
    bool empty_path_base = false;  // allow m = -1 at the base (the empty path)

    std::string to_string() const {
        std::ostringstream os;
        os << "(c1=" << c1 << ",c2=" << c2 << ",c3=" << c3 << ",base=delta_{m" << (base_shift >= 0 ? "+" : "")
           << base_shift << ",r}" << (empty_path_base ? ",empty" : "") << ")";
        return os.str();
    }
    auto operator<=>(const RecursionConvention&) const = default;
};

/// The form printed with the recursion: offsets (+1,0,0) and base delta_{m,r} delta_{k,0}.
inline RecursionConvention printed_convention() { return {1, 0, 0, 0, false}; }

/// Memoized evaluation of the recursion template under one convention.
class Pf2Recursion {
public:
    explicit Pf2Recursion(RecursionConvention c) : conv_(c) {}

    const RecursionConvention& convention() const { return conv_; }

    QtPolynomial operator()(int m, int r, int n, int k) {
        std::lock_guard lock(mu_);
        return eval(m, r, n, k);
    }

private:
    QtPolynomial eval(int m, int r, int n, int k) {
        int m_floor = conv_.empty_path_base ? -1 : 0;
        if (m < m_floor || r < 0 || n < 0 || k < 0) return {};
        if (n == 0) return (m + conv_.base_shift == r && k == 0) ? QtPolynomial(1) : QtPolynomial();
        if (m < 0) return {};
        auto key = std::make_tuple(m, r, n, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        QtPolynomial total;
        const int m_next = m - r + conv_.c3;
        for (int s = 1; s <= n; ++s) {
            QtPolynomial b1 = q_binomial_or_zero(r + s - 1 + conv_.c2, s);
            if (b1.is_zero()) continue;
            int te = m + n - r - s - k + conv_.c1;
            if (te < 0) continue;
            for (int h = 0; h <= k; ++h) {
                QtPolynomial b2 = q_binomial_or_zero(s, h);
                if (b2.is_zero()) continue;
                for (int u = h; u <= m_next + 3; ++u) {
                    QtPolynomial sub = eval(m_next, u, n - s, k - h);
                    if (sub.is_zero()) continue;
                    QtPolynomial b3 = q_binomial_or_zero(s + u - h - 1, u - h);
                    if (b3.is_zero()) continue;
                    total += (b1 * b2 * b3 * sub).shifted(h * (h - 1) / 2, te);
                }
            }
        }
        memo_.emplace(key, total);
        return total;
    }

    static QtPolynomial q_binomial_or_zero(int n, int k) {
        if (n < 0) return {};
        return q_binomial(n, k);
    }

    RecursionConvention conv_;
    std::mutex mu_;
    std::map<std::tuple<int, int, int, int>, QtPolynomial> memo_;
};

/// Evaluate one convention at one argument.
inline QtPolynomial pf2_recursion(int m, int r, int n, int k, RecursionConvention c = printed_convention()) {
    Pf2Recursion rec(c);
    return rec(m, r, n, k);
}

/// Brute-force enumerator of PF^2(m,n)^{*k} (ghost car included) bucketed by r.
inline std::map<int, QtPolynomial> bucketed_pf2_enumerator(int m, int n, int k, RSemantics sem) {
    FamilySpec spec;
    spec.family = Family::TwoCar;
    spec.m = m;
    spec.n = n;
    spec.k = k;
    spec.ghost = true;
    std::map<int, QtPolynomial> out;
    generate(spec, [&](const Path& p) { out[r_value(p, sem)].add_term(dinv(p), area(p), 1); });
    return out;
}

struct RecursionInstance {
    int m, r, n, k;
    QtPolynomial expected;
    QtPolynomial actual;
};

struct VariantOutcome {
    RecursionConvention convention;
    RSemantics semantics;
    bool survives = true;
    int mismatches = 0;
    std::vector<RecursionInstance> residuals;  // first few mismatches
};

struct ReconciliationReport {
    int max_size = 0;
    std::vector<std::vector<RSemantics>> semantics_classes;  // semantics with identical bucketings
    std::vector<VariantOutcome> outcomes;
    std::vector<VariantOutcome> survivors;
    bool printed_survives = false;
    bool bucket_sums_match_total = true;
    std::size_t instances = 0;

    bool success() const { return survivors.size() == 1; }

    std::string summary() const {
        std::ostringstream os;
        os << "max_size=" << max_size << " instances=" << instances << " variants=" << outcomes.size()
           << " survivors=" << survivors.size() << '\n';
        for (auto& cls : semantics_classes) {
            os << "r-semantics class {";
            for (std::size_t i = 0; i < cls.size(); ++i) os << (i ? ", " : "") << r_semantics_name(cls[i]);
            os << "}\n";
        }
        for (auto& s : survivors)
            os << "survivor: " << r_semantics_name(s.semantics) << ' ' << s.convention.to_string() << '\n';
        os << "printed variant " << printed_convention().to_string()
           << (printed_survives ? " survives" : " does not survive") << '\n';
        bool printed_offsets = false;
        for (auto& s : survivors)
            if (s.convention.c1 == 1 && s.convention.c2 == 0 && s.convention.c3 == 0) printed_offsets = true;
        os << "printed offsets (+1,0,0) " << (printed_offsets ? "are" : "are not") << " among the survivors\n";
        os << "bucket sums match the total enumerator: " << (bucket_sums_match_total ? "yes" : "no") << '\n';
        return os.str();
    }

    std::string residual_table() const {
        std::ostringstream os;
        os << "semantics,convention,mismatches,m,r,n,k,expected,actual\n";
        for (auto& o : outcomes)
            for (auto& r : o.residuals)
                os << r_semantics_name(o.semantics) << ',' << o.convention.to_string() << ',' << o.mismatches << ','
                   << r.m << ',' << r.r << ',' << r.n << ',' << r.k << ",\"" << r.expected << "\",\"" << r.actual
                   << "\"\n";
        return os.str();
    }
};

/// Search the finite convention space against the brute-force bucketed enumerators for all m+n <= max_size.
inline ReconciliationReport reconcile_recursion(int max_size, std::size_t residuals_kept = 3) {
    ReconciliationReport rep;
    rep.max_size = max_size;
    const std::vector<RSemantics> all_sem{RSemantics::DiagonalBigCars, RSemantics::DiagonalBigCarsPlusOne,
                                          RSemantics::GhostInclusive};
    using Table = std::map<std::tuple<int, int, int>, std::map<int, QtPolynomial>>;
    std::map<RSemantics, Table> data;
    std::map<std::tuple<int, int, int>, QtPolynomial> totals;
    for (int m = 0; m <= max_size; ++m)
        for (int n = 0; m + n <= max_size; ++n)
            for (int k = 0; k <= n; ++k) {
                for (auto sem : all_sem) data[sem][{m, n, k}] = bucketed_pf2_enumerator(m, n, k, sem);
                FamilySpec spec;
                spec.family = Family::TwoCar;
                spec.m = m;
                spec.n = n;
                spec.k = k;
                totals[{m, n, k}] = qt_enumerator(spec);
                ++rep.instances;
            }

    std::vector<RSemantics> reps;
    for (auto sem : all_sem) {
        bool placed = false;
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (data[reps[c]] == data[sem]) {
                rep.semantics_classes[c].push_back(sem);
                placed = true;
                break;
            }
        if (!placed) {
            reps.push_back(sem);
            rep.semantics_classes.push_back({sem});
        }
    }

    for (auto sem : reps)
        for (int c1 = -1; c1 <= 1; ++c1)
            for (int c2 = -1; c2 <= 1; ++c2)
                for (int c3 = -1; c3 <= 1; ++c3)
                    for (int b = -1; b <= 1; ++b)
                        for (bool empty : {false, true}) {
                            Pf2Recursion rec({c1, c2, c3, b, empty});
                            VariantOutcome out{rec.convention(), sem, true, 0, {}};
                            for (auto& [key, buckets] : data[sem]) {
                                auto [m, n, k] = key;
                                for (int r = 0; r <= m + 2; ++r) {
                                    auto it = buckets.find(r);
                                    QtPolynomial want = it == buckets.end() ? QtPolynomial() : it->second;
                                    QtPolynomial got = rec(m, r, n, k);
                                    if (want != got) {
                                        out.survives = false;
                                        ++out.mismatches;
                                        if (out.residuals.size() < residuals_kept)
                                            out.residuals.push_back({m, r, n, k, want, got});
                                    }
                                }
                            }
                            if (out.survives) {
                                rep.survivors.push_back(out);
                                for (auto& [key, total] : totals) {
                                    auto [m, n, k] = key;
                                    QtPolynomial sum;
                                    for (int r = 0; r <= m + 2; ++r) sum += rec(m, r, n, k);
                                    if (sum != total) rep.bucket_sums_match_total = false;
                                }
                                if (out.convention == printed_convention()) rep.printed_survives = true;
                            }
                            rep.outcomes.push_back(std::move(out));
                        }
    if (rep.survivors.empty()) rep.bucket_sums_match_total = false;
    return rep;
}

}  // namespace dqt
