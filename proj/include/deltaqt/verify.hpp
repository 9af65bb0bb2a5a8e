#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "deltaqt/bijections.hpp"
#include "deltaqt/enumerate.hpp"
#include "deltaqt/json_io.hpp"
#include "deltaqt/macdonald.hpp"
#include "deltaqt/recursion.hpp"

namespace dqt {

enum class Status { Pass, Fail, Skip };

inline std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "?";
}

struct VerificationRecord {
    std::string suite;
    std::string instance;
    Status status = Status::Pass;
    std::string witness;  // set unless status is Pass
    double seconds = 0;
};

using Report = std::vector<VerificationRecord>;

inline bool all_pass(const Report& r) {
    for (auto& x : r)
        if (x.status == Status::Fail) return false;
    return true;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string report_to_csv(const Report& r, bool timing = false) {
    std::ostringstream os;
    os << "suite,instance,status,witness" << (timing ? ",seconds" : "") << "\n";
    for (auto& x : r) {
        os << csv_escape(x.suite) << ',' << csv_escape(x.instance) << ',' << status_name(x.status) << ','
           << csv_escape(x.witness);
        if (timing) os << ',' << x.seconds;
        os << "\n";
    }
    return os.str();
}

inline Json report_to_json(const Report& r, bool timing = false) {
    Json arr = Json::array();
    for (auto& x : r) {
        Json j{{"suite", x.suite}, {"instance", x.instance}, {"status", status_name(x.status)}};
        if (x.status != Status::Pass) j["witness"] = x.witness;
        if (timing) j["seconds"] = x.seconds;
        arr.push_back(j);
    }
    return arr;
}

/// Runs checks and collects records. A check returns nullopt on success or a witness.
class Recorder {
public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    void check(const std::string& instance, const std::function<std::optional<std::string>()>& body) {
        auto start = std::chrono::steady_clock::now();
        VerificationRecord rec{suite_, instance, Status::Pass, "", 0};
        try {
            if (auto w = body()) {
                rec.status = Status::Fail;
                rec.witness = w->empty() ? "failed" : *w;
            }
        } catch (const CapacityError& e) {
            rec.status = Status::Skip;
            rec.witness = e.what();
        } catch (const std::exception& e) {
            rec.status = Status::Fail;
            rec.witness = std::string("exception: ") + e.what();
        }
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report_.push_back(std::move(rec));
    }

    void expect(const std::string& instance, bool ok, const std::string& witness) {
        check(instance, [&]() -> std::optional<std::string> {
            if (ok) return std::nullopt;
            return witness;
        });
    }

    Report& report() { return report_; }

private:
    std::string suite_;
    Report report_;
};

namespace detail {
inline std::string ints(const std::vector<int>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}
inline std::string grid_witness(const GridComparison& g) {
    if (g.equal) return "";
    return "at " + g.witness->to_string() + ": lhs=" + g.f_value.get_str() + " rhs=" + g.g_value.get_str();
}
inline std::optional<std::string> grid_check(const Evaluator& f, const Evaluator& g, int degree_bound) {
    auto r = poly_equal_by_grid(f, g, degree_bound);
    if (r) return std::nullopt;
    return grid_witness(r);
}
inline Evaluator constant_polynomial(QtPolynomial p) {
    return [p = std::move(p)](const EvalPoint& at) { return p.evaluate(at.q, at.t); };
}
}  // namespace detail

// ---------------------------------------------------------------- figure data

struct FigureData {
    static Path ldp() { return Path({0, 1, 2, 1, 2, 0, 1, 1}, std::vector<int>{2, 4, 5, 1, 3, 2, 6, 1}); }
    static Path zerocomp() {
        return Path({0, 1, 2, 2, 2, 0, 1, 2, 0, 1, 1, 0}, std::vector<int>{0, 1, 2, 0, 0, 0, 3, 4, 0, 5, 0, 0});
    }
    static Path two_car() {
        return Path({0, 0, 1, 1, 2, 0, 0, 1, 1, 2, 2, 0}, std::vector<int>{2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1, 2}, {}, true);
    }
    static PathPair aw_paths() { return {"NNENNEENNENNNENNE", "EENNNNENENNNEENNN", {}}; }
    static std::string aw_printed() { return "0 0' 1 1' 2 1' 1' 1 0' 0' 0 0' 0' 0' 1 1 1' 1'"; }
    static std::string aw_geometric() { return "0 0' 1 1' 2 1' 1' 0 0' 0' 1 0' 0' 0' 1 1 1' 1'"; }
    static Path plbounce_left() {
        return Path({0, 1, 2, 2, 2, 1, 2, 3, 2, 3, 3, 3}, std::vector<int>{0, 1, 2, 0, 0, 0, 3, 4, 0, 5, 0, 0},
                    {2, 3, 7, 8, 10}, false);
    }
    static PathPair plbounce_right() { return {"NNEEENNENEE", "EENENEEENNN", {}}; }
    static Path bijection_right() {
        return Path({0, 0, 1, 1, 2, 1, 0, 1, 1, 2, 2, 2}, std::vector<int>{2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 2, 1}, {}, true);
    }
    static PathPair phi_right() { return {"NNENNNENNEENENNE", "NENNNEENNNEEENNN", {}}; }
    static Path ehh_left() { return Path({0, 1, 1, 1, 0, 1, 2, 2}, std::vector<int>{5, 8, 2, 7, 1, 3, 6, 4}); }
    static Path ehh_bottom() {
        return Path({0, 0, 1, 1, 2, 1, 0, 1, 1, 2, 2, 2}, std::vector<int>{2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 2, 1}, {5, 8, 10},
                    true);
    }
};

inline Report figures_suite() {
    Recorder r("figures");
    Path ldp = FigureData::ldp();
    r.expect("ldp/area", area(ldp) == 8, "area " + std::to_string(area(ldp)));
    r.expect("ldp/dinv", dinv(ldp) == 6, "dinv " + std::to_string(dinv(ldp)));
    r.check("ldp/pairs", [&]() -> std::optional<std::string> {
        auto pr = dinv_pairs(ldp);
        std::vector<std::pair<int, int>> prim{{2, 7}, {4, 7}}, sec{{2, 6}, {3, 4}, {3, 8}, {5, 8}};
        if (pr.primary == prim && pr.secondary == sec) return std::nullopt;
        return "pairs differ";
    });
    r.expect("ldp/reading-word", detail::ints(dinv_reading_word(ldp), "") == "22416153",
             detail::ints(dinv_reading_word(ldp), ""));
    r.check("zerocomp/zero-composition", [&]() -> std::optional<std::string> {
        auto c = zero_composition(FigureData::zerocomp());
        if (c.parts == std::vector<int>{3, 1, 2, 1}) return std::nullopt;
        return c.to_string();
    });
    r.check("2cpf/big-car-composition", [&]() -> std::optional<std::string> {
        auto c = big_car_composition(FigureData::two_car());
        if (c.parts == std::vector<int>{3, 3, 1}) return std::nullopt;
        return c.to_string();
    });
    r.check("aw/codec-printed-word", [&]() -> std::optional<std::string> {
        auto w = polyomino_word_from_paths(FigureData::aw_paths());
        if (w.to_string() == FigureData::aw_printed()) return std::nullopt;
        return "codec gives " + w.to_string() + ", reference word is " + FigureData::aw_printed();
    });
    r.check("aw/codec-round-trip", [&]() -> std::optional<std::string> {
        auto pp = FigureData::aw_paths();
        auto back = polyomino_paths_from_word(polyomino_word_from_paths(pp));
        if (back.red == pp.red && back.green == pp.green) return std::nullopt;
        return "decoded " + back.red + " / " + back.green;
    });
    return r.report();
}

// ---------------------------------------------------------------- ndinv

/// eta . psi^{-1} . Phi . psi . eta^{-1}, composed from the individual maps.
inline Path pld_step_by_composition(const Path& d) {
    DominoSequence s = phi(to_dominoes(psi(eta_inverse(d))));
    if (s.empty()) return {};
    return eta(psi_inverse(from_dominoes(s)));
}

inline bool starts_with_double_valley(const Path& d) {
    return d.size() >= 2 && d.a(1) == 0 && d.a(2) == 0 && d.label(1) == 0 && d.label(2) == 0;
}

inline Report ndinv_suite(int max_size) {
    Recorder r("ndinv");
    for (int total = 0; total <= max_size; ++total)
        for (int n = 0; n <= total; ++n) {
            int m = total - n;
            FamilySpec spec{Family::CatalanPLD, m, n, n, std::nullopt, std::nullopt};
            std::string inst = "catalan-pld(" + std::to_string(m) + "," + std::to_string(n) + ")";
            r.check(inst, [&]() -> std::optional<std::string> {
                std::optional<std::string> bad;
                generate(spec, [&](const Path& d) {
                    if (bad) return;
                    auto fail = [&](const std::string& what) { bad = what + " on " + to_json(d).dump(); };
                    PolyominoWord w = eta_inverse(d);
                    Path p = psi(w);
                    if (eta(w) != d) return fail("eta round trip");
                    if (area(p) != area(d)) return fail("area");
                    if (ndinv(p) != dinv(d)) return fail("ndinv");
                    if (!(big_car_composition(p) == zero_composition(d))) return fail("composition");
                    Path step = pld_recursive_step(d);
                    if (step != pld_step_by_composition(d)) return fail("pld step");
                    if (!starts_with_double_valley(d) && dinv(d) - dinv(step) != diagonal_touches(d) - 1)
                        return fail("dinv drop");
                    if (starts_with_double_valley(d) && dinv(d) != dinv(step)) return fail("dinv drop");
                });
                return bad;
            });
        }
    return r.report();
}

// ---------------------------------------------------------------- ehh

inline Report ehh_suite(int max_size) {
    Recorder r("ehh");
    for (int size = 0; size <= max_size; ++size)
        for (int k = 0; k <= max_size; ++k)
            for (int n = k; n <= size + k; ++n) {
                int m = size + k - n;
                if (m < k) continue;
                ShuffleParams sp{k, n, m};
                FamilySpec src{Family::ShuffleKNM, m, n, k, std::nullopt, std::nullopt};
                FamilySpec dst{Family::TwoCar, m, n, k, std::nullopt, std::nullopt, true};
                std::string inst = "(k,n,m)=(" + std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(m) + ")";
                r.check(inst, [&]() -> std::optional<std::string> {
                    std::set<Path> images;
                    QtPolynomial image_enum;
                    std::optional<std::string> bad;
                    generate(src, [&](const Path& d) {
                        if (bad) return;
                        auto fail = [&](const std::string& what) { bad = what + " on " + to_json(d).dump(); };
                        Path img = ehh_forward(d, sp);
                        if (auto v = validate_family(img, dst); !v) return fail("image outside target: " + v.diagnostic);
                        if (dinv(img) != dinv(d) || area(img) != area(d)) return fail("statistics");
                        if (ehh_inverse(img, sp) != d) return fail("round trip");
                        if (!images.insert(img).second) return fail("not injective");
                        image_enum.add_term(dinv(img), area(img), 1);
                    });
                    if (bad) return bad;
                    QtPolynomial target = qt_enumerator(dst);
                    if (!(target == image_enum))
                        return "enumerators differ: target " + target.to_string() + " vs image " + image_enum.to_string();
                    return std::nullopt;
                });
            }
    return r.report();
}

// ---------------------------------------------------------------- recursion

inline Report recursion_suite(int max_size, ReconciliationReport* out = nullptr) {
    Recorder r("recursion-reconcile");
    ReconciliationReport rep = reconcile_recursion(max_size);
    r.expect("unique-survivor", rep.success(), rep.summary());
    r.expect("bucket-sums", rep.bucket_sums_match_total, "sum over r differs from the total enumerator");
    if (out) *out = rep;
    return r.report();
}

// ---------------------------------------------------------------- identities

enum class Identity { MacHook, NewId, DeltaHhSum, DeltahhEhh, Ehh, Reciprocity, DeltaConjectureHh, DeltaConjectureEhh };

inline std::string identity_name(Identity i) {
    switch (i) {
        case Identity::MacHook: return "mac-hook";
        case Identity::NewId: return "new-id";
        case Identity::DeltaHhSum: return "delta-hh-sum";
        case Identity::DeltahhEhh: return "deltahh-ehh";
        case Identity::Ehh: return "ehh-sum";
        case Identity::Reciprocity: return "reciprocity";
        case Identity::DeltaConjectureHh: return "delta-conjecture-hh";
        case Identity::DeltaConjectureEhh: return "delta-conjecture-ehh";
    }
    return "?";
}

inline Identity parse_identity(const std::string& s) {
    for (Identity i : {Identity::MacHook, Identity::NewId, Identity::DeltaHhSum, Identity::DeltahhEhh, Identity::Ehh,
                       Identity::Reciprocity, Identity::DeltaConjectureHh, Identity::DeltaConjectureEhh})
        if (identity_name(i) == s) return i;
    throw DomainError("unknown identity '" + s + "'");
}

/// The two sides of an (m,n,k) identity and the degree bound that decides it.
struct IdentitySides {
    Evaluator lhs, rhs;
    int degree_bound;
};

inline IdentitySides identity_sides(Identity id, int m, int n, int k) {
    const int D = degree_bound_for_size(m + n);
    auto L = [=](const EvalPoint& p) { return lhs_delta_hh(m, n, k, p); };
    auto Mi = [=](const EvalPoint& p) { return mid_delta_hn(m, n, k, p); };
    auto R = [=](const EvalPoint& p) { return rhs_nabla_ehh(m, n, k, p); };
    auto S = [=](const EvalPoint& p) { return sum_r_lhs(m, n, k, p); };
    switch (id) {
        case Identity::NewId: return {Mi, R, D};
        case Identity::DeltaHhSum: return {S, Mi, D};
        case Identity::DeltahhEhh: return {L, R, D};
        case Identity::Ehh: return {S, R, D};
        case Identity::DeltaConjectureHh:
            return {L, detail::constant_polynomial(qt_enumerator({Family::TwoCar, m, n, k, std::nullopt, std::nullopt})), D};
        case Identity::DeltaConjectureEhh:
            return {R, detail::constant_polynomial(qt_enumerator({Family::ShuffleKNM, m, n, k, std::nullopt, std::nullopt})),
                    degree_bound_for_size(m + n - k)};
        default: throw DomainError("identity " + identity_name(id) + " is not an (m,n,k) identity");
    }
}

inline void mac_hook_checks(Recorder& r, int n) {
    for (const Partition& mu : partitions_of(n))
        for (int rr = 0; rr < n; ++rr)
            r.check("mac-hook mu=" + mu.to_string() + " r=" + std::to_string(rr), [&]() {
                return detail::grid_check([&](const EvalPoint& p) { return hall_pair_hook(mu, rr, p); },
                                          [&](const EvalPoint& p) { return pleth_eh('e', rr, b_minus_one(mu), p); },
                                          degree_bound_for_size(n));
            });
}

inline void reciprocity_checks(Recorder& r, int max_size) {
    std::vector<Partition> ps;
    for (int s = 0; s <= max_size; ++s)
        for (auto& p : partitions_of(s)) ps.push_back(p);
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i; j < ps.size(); ++j) {
            const Partition &a = ps[i], &b = ps[j];
            r.check("reciprocity " + a.to_string() + " " + b.to_string(), [&]() {
                return detail::grid_check([&](const EvalPoint& p) { return reciprocity_sides(a, b, p).left; },
                                          [&](const EvalPoint& p) { return reciprocity_sides(a, b, p).right; },
                                          degree_bound_for_size(a.size() + b.size()));
            });
        }
}

inline std::string mnk(int m, int n, int k) {
    return "(m,n,k)=(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
}

inline void mnk_checks(Recorder& r, Identity id, int max_total, int max_k = -1, bool n_above_k = false) {
    for (int total = 0; total <= max_total; ++total)
        for (int m = 0; m <= total; ++m) {
            int n = total - m;
            for (int k = 0; k <= std::min(m, n); ++k) {
                if (max_k >= 0 && k > max_k) continue;
                if (n_above_k && n <= k) continue;
                r.check(identity_name(id) + " " + mnk(m, n, k), [&]() {
                    auto s = identity_sides(id, m, n, k);
                    return detail::grid_check(s.lhs, s.rhs, s.degree_bound);
                });
            }
        }
}

inline Report identities_suite(int max_total = 6, int hook_max = 5, int reciprocity_max = 4) {
    Recorder r("identities");
    for (int n = 1; n <= hook_max; ++n) mac_hook_checks(r, n);
    reciprocity_checks(r, reciprocity_max);
    for (Identity id : {Identity::NewId, Identity::DeltaHhSum, Identity::DeltahhEhh, Identity::Ehh})
        mnk_checks(r, id, max_total);
    return r.report();
}

// ---------------------------------------------------------------- delta conjecture, tiny sizes

inline void content_checks(Recorder& r, int m, int n, int k) {
    auto by_content = qt_enumerator_by_content(m, n, k);
    for (const Partition& lam : partitions_of(n)) {
        QtPolynomial expected;
        if (auto it = by_content.find(lam.parts()); it != by_content.end()) expected = it->second;
        r.check("content " + mnk(m, n, k) + " lambda=" + lam.to_string(), [&]() {
            return detail::grid_check([&](const EvalPoint& p) { return delta_lhs_by_content(m, n, k, lam, p); },
                                      detail::constant_polynomial(expected), degree_bound_for_size(m + n));
        });
    }
}

inline Report delta_tiny_suite(int max_total = 5, int max_k = 2) {
    Recorder r("delta-tiny");
    mnk_checks(r, Identity::DeltaConjectureHh, max_total);
    for (int total = 0; total <= max_total; ++total)
        for (int m = 0; m <= total; ++m)
            for (int k = 0; k <= max_k; ++k)
                if (total - m > k) content_checks(r, m, total - m, k);
    return r.report();
}

// ---------------------------------------------------------------- engine self-validation

inline QtPolynomial sample_polynomial(std::mt19937& gen) {
    std::uniform_int_distribution<int> exp(0, 4), coef(-5, 5), count(0, 5);
    QtPolynomial p;
    for (int i = count(gen); i > 0; --i) p.add_term(exp(gen), exp(gen), coef(gen));
    return p;
}

inline Report engine_suite(int max_degree = 7, int normalization_max = 5) {
    Recorder r("engine");
    const EvalPoint pts[] = {{2, 101, 0}, {3, 103, 0}, {Rational(-1, 2), Rational(7, 3), 0}};
    for (int d = 0; d <= max_degree; ++d)
        r.check("basis-round-trips degree " + std::to_string(d), [&]() -> std::optional<std::string> {
            const auto& tb = degree_tables(d);
            for (Basis b : {Basis::PowerSum, Basis::Complete, Basis::Elementary}) {
                const auto &A = tb.to_m.at(b), &B = tb.from_m.at(b);
                for (std::size_t i = 0; i < A.size(); ++i)
                    for (std::size_t j = 0; j < A.size(); ++j) {
                        Rational s = 0;
                        for (std::size_t l = 0; l < A.size(); ++l) s += B[i][l] * A[l][j];
                        if (s != (i == j ? 1 : 0)) return "transition inverse fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    }
            }
            for (const auto& at : pts)
                for (const Partition& mu : partitions_of(std::min(d, 6))) {
                    SymFun f = htilde(mu, at);
                    for (Basis b : {Basis::PowerSum, Basis::Complete, Basis::Elementary})
                        if (!(SymFun::from_basis(b, f.degree(), f.coefficients(b)) == f))
                            return "round trip fails for H~" + mu.to_string() + " at " + at.to_string();
                }
            return std::nullopt;
        });
    for (int n = 1; n <= normalization_max; ++n)
        for (const Partition& mu : partitions_of(n)) {
            int D = degree_bound_for_size(n);
            r.check("normalization s_(n) " + mu.to_string(), [&]() {
                return detail::grid_check([&](const EvalPoint& p) { return hall_pair_h(mu, {n}, p); },
                                          [](const EvalPoint&) { return Rational(1); }, D);
            });
            r.check("normalization s_(1^n) " + mu.to_string(), [&]() {
                return detail::grid_check([&](const EvalPoint& p) { return hall_pair_hook(mu, n - 1, p); },
                                          [&](const EvalPoint& p) { return partition_invariants(mu, p).T; }, D);
            });
        }
    for (int n = 0; n <= normalization_max; ++n)
        for (int d = 0; d <= n; ++d) {
            r.check("e-h-delta e_n n=" + std::to_string(n) + " d=" + std::to_string(d), [&]() {
                return detail::grid_check([&](const EvalPoint& p) { return delta_e_en_vs_h(n, d, p); },
                                          [&](const EvalPoint&) { return en_pair_ehh(n, d); }, degree_bound_for_size(n));
            });
            for (const Partition& mu : partitions_of(n))
                r.check("e-h-delta H~" + mu.to_string() + " d=" + std::to_string(d), [&]() {
                    return detail::grid_check([&](const EvalPoint& p) { return delta_e_htilde_vs_h(mu, d, p); },
                                              [&](const EvalPoint& p) { return hall_pair_ehh(mu, d, n - d, 0, p); },
                                              degree_bound_for_size(n));
                });
        }
    r.check("ring-axioms", [&]() -> std::optional<std::string> {
        std::mt19937 gen(20240611);
        const QtPolynomial zero, one(1);
        for (int trial = 0; trial < 300; ++trial) {
            auto a = sample_polynomial(gen), b = sample_polynomial(gen), c = sample_polynomial(gen);
            auto fail = [&](const char* law) {
                return std::string(law) + " fails for a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
            };
            if (!((a + b) + c == a + (b + c))) return fail("additive associativity");
            if (!(a + b == b + a)) return fail("additive commutativity");
            if (!(a + zero == a) || !(a - a == zero)) return fail("additive identity/inverse");
            if (!((a * b) * c == a * (b * c))) return fail("multiplicative associativity");
            if (!(a * b == b * a)) return fail("multiplicative commutativity");
            if (!(a * one == a)) return fail("multiplicative identity");
            if (!(a * (b + c) == a * b + a * c)) return fail("distributivity");
        }
        return std::nullopt;
    });
    return r.report();
}

}  // namespace dqt
