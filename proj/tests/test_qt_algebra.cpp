#include <gtest/gtest.h>

#include <random>

#include "deltaqt/deltaqt.hpp"

using namespace dqt;

namespace {

QtPolynomial pascal_binomial(int n, int k) {
    // [n,k] = [n-1,k-1] + q^k [n-1,k]
    if (k < 0 || k > n) return {};
    if (k == 0 || k == n) return 1;
    return pascal_binomial(n - 1, k - 1) + pascal_binomial(n - 1, k).shifted(k, 0);
}

QtPolynomial random_poly(std::mt19937& gen, int max_exp = 4) {
    std::uniform_int_distribution<int> e(0, max_exp), c(-9, 9), len(0, 6);
    QtPolynomial p;
    for (int i = len(gen); i > 0; --i) p.add_term(e(gen), e(gen), c(gen));
    return p;
}

}  // namespace

TEST(QtPolynomial, NoZeroTermsAreStored) {
    QtPolynomial p = QtPolynomial::q() - QtPolynomial::q();
    EXPECT_TRUE(p.is_zero());
    p.add_term(2, 1, 3);
    p.add_term(2, 1, -3);
    EXPECT_EQ(p.term_count(), 0u);
}

TEST(QtPolynomial, NegativeExponentRejected) {
    EXPECT_THROW(QtPolynomial::monomial(-1, 0), DomainError);
}

TEST(QtPolynomial, ArithmeticIsArbitraryPrecision) {
    QtPolynomial p = 1 + QtPolynomial::q();
    QtPolynomial r = 1;
    for (int i = 0; i < 80; ++i) r = r * p;
    Integer expected;
    mpz_bin_uiui(expected.get_mpz_t(), 80, 40);
    EXPECT_EQ(r.coefficient(40, 0), expected);
    EXPECT_EQ(r.at_one(), Integer(1) << 80);
}

TEST(QtPolynomial, RingAxiomsOnRandomPolynomials) {
    std::mt19937 gen(7);
    for (int i = 0; i < 200; ++i) {
        auto a = random_poly(gen), b = random_poly(gen), c = random_poly(gen);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, QtPolynomial());
        EXPECT_EQ(a * QtPolynomial(1), a);
    }
}

TEST(QtPolynomial, EvaluationIsARingHomomorphism) {
    std::mt19937 gen(11);
    const Rational q0(3, 2), t0(-5, 7);
    for (int i = 0; i < 100; ++i) {
        auto a = random_poly(gen), b = random_poly(gen);
        EXPECT_EQ((a * b).evaluate(q0, t0), a.evaluate(q0, t0) * b.evaluate(q0, t0));
        EXPECT_EQ((a + b).evaluate(q0, t0), a.evaluate(q0, t0) + b.evaluate(q0, t0));
    }
}

TEST(QtPolynomial, CsvRoundTrip) {
    QtPolynomial p = 1 + QtPolynomial::q() + QtPolynomial::monomial(0, 2, -4);
    std::string csv = p.to_csv();
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "q_exp,t_exp,coeff");
    EXPECT_EQ(csv, "q_exp,t_exp,coeff\n0,0,1\n0,2,-4\n1,0,1\n");
    EXPECT_EQ(QtPolynomial::from_csv(csv), p);
}

TEST(QtPolynomial, TransposeSwapsVariables) {
    QtPolynomial p = QtPolynomial::monomial(2, 1, 5) + QtPolynomial::t();
    EXPECT_EQ(p.transposed(), QtPolynomial::monomial(1, 2, 5) + QtPolynomial::q());
}

TEST(QAnalogues, QBinomialExamples) {
    auto q = QtPolynomial::q();
    EXPECT_EQ(q_binomial(2, 1), 1 + q);
    EXPECT_EQ(q_binomial(1, 2), QtPolynomial());
    EXPECT_EQ(q_binomial(4, 2), 1 + q + QtPolynomial::monomial(2, 0, 2) + QtPolynomial::monomial(3, 0) +
                                    QtPolynomial::monomial(4, 0));
    EXPECT_EQ(q_binomial(5, -1), QtPolynomial());
    EXPECT_THROW(q_binomial(-1, 0), DomainError);
}

TEST(QAnalogues, QBinomialMatchesPascalRecurrence) {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) EXPECT_EQ(q_binomial(n, k), pascal_binomial(n, k)) << n << "," << k;
}

TEST(QAnalogues, QBinomialSymmetryAndSpecialization) {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(q_binomial(n, k), q_binomial(n, n - k));
            Integer b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            EXPECT_EQ(q_binomial(n, k).at_one(), b);
        }
}

TEST(QAnalogues, QIntegerAndFactorial) {
    EXPECT_EQ(q_int(0), QtPolynomial());
    EXPECT_EQ(q_int(3), 1 + QtPolynomial::q() + QtPolynomial::monomial(2, 0));
    EXPECT_EQ(q_factorial(3), q_int(1) * q_int(2) * q_int(3));
    EXPECT_EQ(q_factorial(0), QtPolynomial(1));
}

TEST(QAnalogues, ExactDivisionRejectsRemainder) {
    EXPECT_THROW(exact_divide_q(q_int(3), q_int(2)), DomainError);
}

TEST(Grid, Layout) {
    PrimeGrid g(3);
    EXPECT_EQ(g.q_values, (std::vector<long>{2, 3, 5, 7}));
    EXPECT_EQ(g.t_values, (std::vector<long>{101, 103, 107, 109}));
    EXPECT_EQ(g.points(3).size(), 16u);
}

TEST(Grid, Examples) {
    auto c = [](QtPolynomial p) { return Evaluator([p](const EvalPoint& x) { return p.evaluate(x.q, x.t); }); };
    auto q = QtPolynomial::q(), t = QtPolynomial::t();
    EXPECT_TRUE(poly_equal_by_grid(c(q_binomial(3, 1)), c(q_binomial(3, 1)), 3));
    auto r = poly_equal_by_grid(c(1 + q + t), c(1 + q + t * t), 2);
    EXPECT_FALSE(r);
    ASSERT_TRUE(r.witness.has_value());
    FamilySpec spec{Family::TwoCar, 1, 1, 0, std::nullopt, std::nullopt};
    EXPECT_TRUE(poly_equal_by_grid(c(qt_enumerator(spec)), c(1 + q + t), 1));
}

TEST(Grid, AgreesWithCoefficientComparison) {
    std::mt19937 gen(3);
    int disagreements = 0;
    for (int i = 0; i < 150; ++i) {
        auto a = random_poly(gen, 3);
        auto b = (i % 3 == 0) ? a : random_poly(gen, 3);
        if (i % 5 == 0) b = a + QtPolynomial::monomial(3, 3);
        auto ea = Evaluator([a](const EvalPoint& x) { return a.evaluate(x.q, x.t); });
        auto eb = Evaluator([b](const EvalPoint& x) { return b.evaluate(x.q, x.t); });
        disagreements += (static_cast<bool>(poly_equal_by_grid(ea, eb, 3)) != (a == b));
    }
    EXPECT_EQ(disagreements, 0);
}

TEST(Grid, PoleTriggersReplacement) {
    // 1/(t-101) has a pole on the first t column
    Evaluator f = [](const EvalPoint& x) {
        if (x.t == 101) throw PoleError("pole");
        return Rational(1);
    };
    auto r = poly_equal_by_grid(f, [](const EvalPoint&) { return Rational(1); }, 1);
    EXPECT_TRUE(r);
    EXPECT_EQ(r.points_replaced, 2u);
}

TEST(Grid, RecoverPolynomial) {
    QtPolynomial p = 3 + QtPolynomial::monomial(2, 1, -2) + QtPolynomial::monomial(0, 3);
    auto f = Evaluator([p](const EvalPoint& x) { return p.evaluate(x.q, x.t); });
    EXPECT_EQ(recover_polynomial(f, 3), p);
}

TEST(QtRational, PoleIsSignalled) {
    QtRational r(QtPolynomial(1), 1 - QtPolynomial::q());
    EXPECT_THROW(r.evaluate(1, 5), PoleError);
    EXPECT_EQ(r.evaluate(3, 5), Rational(-1, 2));
}
