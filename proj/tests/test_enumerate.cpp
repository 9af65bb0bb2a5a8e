#include <gtest/gtest.h>

#include <array>
#include <functional>

#include "deltaqt/deltaqt.hpp"

using namespace dqt;

namespace {

FamilySpec spec(Family f, int m, int n, int k, bool ghost = false) {
    FamilySpec s;
    s.family = f;
    s.m = m;
    s.n = n;
    s.k = k;
    s.ghost = ghost;
    return s;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long catalan_recurrence(int n) {
    std::vector<long> c{1};
    for (int i = 1; i <= n; ++i) {
        long s = 0;
        for (int j = 0; j < i; ++j) s += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - 1 - j)];
        c.push_back(s);
    }
    return c[static_cast<std::size_t>(n)];
}

// Dyck paths as N/E bit strings; a decoration sits on an N step directly after another N step
long decorated_dyck_count(int n, int k) {
    long total = 0;
    for (unsigned w = 0; w < (1u << (2 * n)); ++w) {
        int h = 0, ns = 0, nn = 0;
        bool ok = true, prev_n = false;
        for (int i = 0; i < 2 * n && ok; ++i) {
            bool north = (w >> i) & 1u;
            h += north ? 1 : -1;
            ns += north;
            if (north && prev_n) ++nn;
            prev_n = north;
            ok = h >= 0;
        }
        if (ok && ns == n) total += binom(nn, k);
    }
    return total;
}

// columns of height 1 take either car, columns of height 2 must read (small, big) upward
long pf2_transfer_count(int m, int n) {
    const int size = m + n;
    std::function<long(int, int, int)> go = [&](int north, int east, int small) -> long {
        if (north == size) return small == n ? 1 : 0;
        long s = 0;
        for (int h = 1; h <= 2 && north + h <= size; ++h) {
            int ways_small[3] = {0, 0, 0};
            if (h == 1) ways_small[0] = ways_small[1] = 1;
            else ways_small[1] = 1;
            for (int e = 1; east + e <= north + h; ++e) {
                if (north + h == size && east + e != size) continue;
                if (north + h < size && east + e > north + h - 0) continue;
                for (int u = 0; u <= 2; ++u)
                    if (ways_small[u]) s += go(north + h, east + e, small + u);
            }
        }
        return s;
    };
    // the path must end with its last column; east steps after the final column fill to the diagonal
    return go(0, 0, 0);
}

QtPolynomial poly(std::initializer_list<std::array<int, 2>> terms) {
    QtPolynomial p;
    for (auto [a, b] : terms) p.add_term(a, b, 1);
    return p;
}

}  // namespace

TEST(Generate, SpecExamples) {
    EXPECT_EQ(count_members(spec(Family::Dyck, 0, 3, 0)), 5u);
    EXPECT_EQ(count_members(spec(Family::TwoCar, 1, 1, 0)), 3u);
    EXPECT_EQ(count_members(spec(Family::ReducedPolyomino, 0, 0, 0)), 1u);
    EXPECT_EQ(generate_all_polyominoes(0, 0, 0).front().to_string(), "0");
}

TEST(Generate, DyckCountsMatchCatalanRecurrence) {
    for (int n = 0; n <= 8; ++n)
        EXPECT_EQ(count_members(spec(Family::Dyck, 0, n, 0)), static_cast<std::uint64_t>(catalan_recurrence(n))) << n;
}

TEST(Generate, DecoratedDyckCountsMatchBitStrings) {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k < n; ++k)
            EXPECT_EQ(count_members(spec(Family::Dyck, 0, n, k)), static_cast<std::uint64_t>(decorated_dyck_count(n, k)))
                << n << ' ' << k;
}

TEST(Generate, TwoCarCountsMatchTransferCounter) {
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; m + n <= 6; ++n)
            EXPECT_EQ(count_members(spec(Family::TwoCar, m, n, 0)), static_cast<std::uint64_t>(pf2_transfer_count(m, n)))
                << m << ' ' << n;
}

TEST(Generate, ParkingFunctionCount) {
    for (int n = 1; n <= 5; ++n) {
        FamilySpec s = spec(Family::LabelledDyck, 0, n, 0);
        s.content = std::vector<int>(static_cast<std::size_t>(n), 1);
        long expect = 1;
        for (int i = 0; i < n - 1; ++i) expect *= n + 1;
        EXPECT_EQ(count_members(s), static_cast<std::uint64_t>(expect));
    }
}

TEST(Generate, CanonicalOrderAndMembership) {
    std::vector<FamilySpec> specs{spec(Family::Dyck, 0, 5, 2), spec(Family::TwoCar, 2, 3, 1),
                                  spec(Family::TwoShuffle, 2, 3, 1), spec(Family::ShuffleKNM, 3, 3, 1),
                                  spec(Family::CatalanPLD, 3, 2, 0)};
    FamilySpec pld = spec(Family::PartiallyLabelled, 2, 3, 1);
    pld.content = std::vector<int>{1, 2};
    specs.push_back(pld);
    for (auto& s : specs) {
        auto all = generate_all(s);
        ASSERT_FALSE(all.empty()) << s.to_string();
        for (std::size_t i = 0; i < all.size(); ++i) {
            ASSERT_TRUE(validate_family(all[i], s)) << s.to_string() << ' ' << validate_family(all[i], s).diagnostic;
            if (i) {
                auto key = [](const Path& p) {
                    std::vector<int> d(p.decorated_rises().begin(), p.decorated_rises().end());
                    return std::make_tuple(p.area_word(), p.labels().value_or(std::vector<int>{}), d);
                };
                ASSERT_LT(key(all[i - 1]), key(all[i])) << s.to_string();
            }
        }
    }
}

TEST(Generate, Errors) {
    EXPECT_THROW(count_members(spec(Family::LabelledDyck, 0, 3, 0)), SpecError);
    EXPECT_THROW(count_members(spec(Family::Dyck, -1, 3, 0)), SpecError);
    EXPECT_THROW(count_members(spec(Family::Dyck, 0, 8, 0), 100), CapacityError);
}

TEST(Enumerator, SpecExamples) {
    EXPECT_EQ(qt_enumerator(spec(Family::TwoCar, 1, 1, 0)), poly({{0, 0}, {1, 0}, {0, 1}}));
    EXPECT_EQ(qt_enumerator(spec(Family::Dyck, 0, 0, 0)), QtPolynomial(1));
    // a decreasing reading word forbids rises; an increasing one gives the q,t-Catalan
    EXPECT_EQ(qt_enumerator(spec(Family::ShuffleKNM, 0, 3, 0)), QtPolynomial(1));
    EXPECT_EQ(qt_enumerator(spec(Family::ShuffleKNM, 3, 3, 3)), poly({{3, 0}, {2, 1}, {1, 2}, {0, 3}, {1, 1}}));
    EXPECT_EQ(qt_enumerator(spec(Family::Dyck, 0, 3, 0)), poly({{3, 0}, {2, 1}, {1, 2}, {0, 3}, {1, 1}}));
}

TEST(Enumerator, GhostDoesNotChangeEnumerator) {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 5; ++n)
            for (int k = 0; k <= n; ++k)
                EXPECT_EQ(qt_enumerator(spec(Family::TwoCar, m, n, k)), qt_enumerator(spec(Family::TwoCar, m, n, k, true)));
}

TEST(Enumerator, BucketsSumToTotal) {
    for (auto sem : {RSemantics::DiagonalBigCars, RSemantics::DiagonalBigCarsPlusOne, RSemantics::GhostInclusive})
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; m + n <= 5; ++n) {
                QtPolynomial sum;
                for (int r = 0; r <= m + 2; ++r) {
                    FamilySpec s = spec(Family::TwoCar, m, n, 1 <= n ? 1 : 0, true);
                    s.r = r;
                    s.r_semantics = sem;
                    sum += qt_enumerator(s);
                }
                EXPECT_EQ(sum, qt_enumerator(spec(Family::TwoCar, m, n, 1 <= n ? 1 : 0)));
            }
}

TEST(Enumerator, ParkingFunctionsAreSymmetric) {
    for (int n = 1; n <= 5; ++n) {
        FamilySpec s = spec(Family::LabelledDyck, 0, n, 0);
        s.content = std::vector<int>(static_cast<std::size_t>(n), 1);
        auto e = qt_enumerator(s);
        EXPECT_EQ(e, e.transposed()) << n;
    }
}

TEST(Enumerator, TwoCarAgreesWithTwoShuffle) {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 6; ++n)
            for (int k = 0; k <= std::max(0, m + n - 1); ++k)
                EXPECT_EQ(qt_enumerator(spec(Family::TwoCar, m, n, k)), qt_enumerator(spec(Family::TwoShuffle, m, n, k)))
                    << m << ' ' << n << ' ' << k;
}

TEST(Enumerator, ByContent) {
    auto one = qt_enumerator_by_content(0, 1, 0);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.at({1}), QtPolynomial(1));
    auto two = qt_enumerator_by_content(0, 2, 0);
    EXPECT_EQ(two.at({1, 1}), poly({{0, 0}, {1, 0}, {0, 1}}));
    for (int m = 0; m <= 2; ++m)
        for (int n = 1; m + n <= 4; ++n)
            for (int k = 0; k < n; ++k) {
                auto by = qt_enumerator_by_content(m, n, k);
                Integer members = 0;
                for (auto& [content, poly] : by) {
                    FamilySpec s = spec(Family::PartiallyLabelled, m, n, k);
                    s.content = content;
                    s.content->resize(static_cast<std::size_t>(n), 0);
                    ASSERT_EQ(poly, qt_enumerator(s));
                    members += poly.at_one();
                }
                EXPECT_GT(members, 0);
            }
}
