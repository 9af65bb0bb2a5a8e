#include <gtest/gtest.h>

#include "deltaqt/deltaqt.hpp"

using namespace dqt;

namespace {

DominoSequence dom(std::initializer_list<std::pair<int, int>> xs) {
    DominoSequence d;
    for (auto [l, a] : xs) d.push_back({l, a});
    return d;
}

FamilySpec catalan(int m, int n) { return FamilySpec{Family::CatalanPLD, m, n, n, std::nullopt, std::nullopt}; }

}  // namespace

TEST(Eta, FigurePlbounce) {
    Path d = FigureData::plbounce_left();
    PolyominoWord w = eta_inverse(d);
    auto pp = polyomino_paths_from_word(w);
    EXPECT_EQ(pp.red, FigureData::plbounce_right().red);
    EXPECT_EQ(pp.green, FigureData::plbounce_right().green);
    EXPECT_EQ(polyomino_stats(w).area, area(d));
    EXPECT_EQ(eta(w), d);
}

TEST(Eta, SingleRow) {
    Path d({0}, std::vector<int>{0});
    EXPECT_EQ(eta_inverse(d).to_string(), "0");
    EXPECT_EQ(eta(PolyominoWord::parse("0")), d);
}

TEST(Eta, RejectsOutsideDomain) {
    EXPECT_THROW(eta_inverse(FigureData::ldp()), DomainError);
    EXPECT_THROW(eta_inverse(FigureData::zerocomp()), DomainError);
}

TEST(Eta, RoundTripsExhaustively) {
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; m + n <= 5; ++n) {
            std::set<PolyominoWord> seen;
            generate(catalan(m, n), [&](const Path& d) {
                PolyominoWord w = eta_inverse(d);
                ASSERT_TRUE(validate_family(w, FamilySpec{Family::ReducedPolyomino, m, n, 0, std::nullopt, std::nullopt}));
                ASSERT_EQ(eta(w), d);
                ASSERT_EQ(polyomino_stats(w).area, area(d));
                ASSERT_TRUE(seen.insert(w).second);
            });
            EXPECT_EQ(seen.size(), count_members(FamilySpec{Family::ReducedPolyomino, m, n, 0, std::nullopt, std::nullopt}));
        }
}

TEST(Psi, FigureBijection) {
    PolyominoWord w = eta_inverse(FigureData::plbounce_left());
    Path p = psi(w);
    Path expect = FigureData::bijection_right();
    EXPECT_EQ(p.area_word(), expect.area_word());
    EXPECT_EQ(p.labels(), expect.labels());
}

TEST(Psi, GhostWord) {
    Path p = psi(PolyominoWord::parse("0"));
    EXPECT_EQ(to_dominoes(p), dom({{2, 0}}));
    EXPECT_EQ(psi_inverse(p).to_string(), "0");
}

TEST(Psi, TransportsStatisticsExhaustively) {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 5; ++n)
            for (int k = 0; k <= std::max(0, m + n); ++k)
                generate_polyominoes(m, n, k, [&](const PolyominoWord& w) {
                    Path p = psi(w);
                    auto s = polyomino_stats(w);
                    ASSERT_EQ(dinv(p), s.dinv) << w.to_string();
                    ASSERT_EQ(area(p), s.area) << w.to_string();
                    ASSERT_EQ(psi_inverse(p), w);
                    ASSERT_TRUE(validate_family(p, FamilySpec{Family::TwoCar, m, n, k, std::nullopt, std::nullopt, true}));
                });
}

TEST(Phi, SmallSequences) {
    EXPECT_TRUE(phi(dom({{2, 0}})).empty());
    EXPECT_EQ(phi(dom({{2, 0}, {2, 0}})), dom({{2, 0}}));
    EXPECT_THROW(phi(dom({{2, 0}, {2, 1}})), InvariantViolation);
    auto out = phi(dom({{2, 0}, {1, 0}, {2, 1}, {2, 0}}));
    EXPECT_EQ(out.front(), (Domino{2, 0}));
    EXPECT_EQ(out.size(), 3u);
}

TEST(Phi, FigurePolyomino) {
    PolyominoWord aw = polyomino_word_from_paths(FigureData::aw_paths());
    DominoSequence s = phi(to_dominoes(psi(aw)));
    auto pp = polyomino_paths_from_word(psi_inverse(from_dominoes(s)));
    EXPECT_EQ(pp.red, FigureData::phi_right().red);
    EXPECT_EQ(pp.green, FigureData::phi_right().green);
}

TEST(Phi, ShrinksAndStaysValid) {
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 5; ++n)
            generate(FamilySpec{Family::TwoCar, m, n, 0, std::nullopt, std::nullopt, true}, [&](const Path& p) {
                DominoSequence d = to_dominoes(p);
                while (!d.empty()) {
                    DominoSequence e = phi(d);
                    ASSERT_LT(e.size(), d.size());
                    if (!e.empty()) ASSERT_NO_THROW(from_dominoes(e));
                    d = e;
                }
            });
}

TEST(Ndinv, Base) {
    EXPECT_EQ(ndinv(DominoSequence{}), 0);
    EXPECT_EQ(ndinv(dom({{2, 0}})), 0);
}

TEST(Ndinv, EqualsDinvOnCatalanPaths) {
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; m + n <= 6; ++n)
            generate(catalan(m, n), [&](const Path& d) {
                Path p = psi(eta_inverse(d));
                ASSERT_EQ(ndinv(p), dinv(d));
                ASSERT_EQ(area(p), area(d));
                ASSERT_EQ(big_car_composition(p), zero_composition(d));
            });
}

TEST(Ndinv, TwoShuffleReadAsTwoCar) {
    Path p({0, 0, 1}, std::vector<int>{2, 1, 3});
    Path c = two_shuffle_to_two_car(p, 2);
    EXPECT_EQ(to_dominoes(c), dom({{2, 0}, {1, 0}, {1, 0}, {2, 1}}));
    EXPECT_EQ(dinv(c), dinv(p));
}

TEST(PldStep, MatchesCompositionAndDropsDinv) {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 5; ++n)
            generate(catalan(m, n), [&](const Path& d) {
                Path s = pld_recursive_step(d);
                ASSERT_EQ(s, pld_step_by_composition(d));
                if (starts_with_double_valley(d))
                    ASSERT_EQ(dinv(s), dinv(d));
                else
                    ASSERT_EQ(dinv(d) - dinv(s), diagonal_touches(d) - 1);
            });
}

TEST(PldStep, SingleRowAndDoubleValley) {
    EXPECT_EQ(pld_recursive_step(Path({0}, std::vector<int>{0})), Path());
    Path d({0, 0, 1}, std::vector<int>{0, 0, 1}, {3}, false);
    ASSERT_TRUE(validate_family(d, catalan(1, 1)));
    Path s = pld_recursive_step(d);
    EXPECT_EQ(s.size(), 2);
    EXPECT_EQ(dinv(s), dinv(d));
}

TEST(Ehh, FigureExample) {
    Path img = ehh_forward(FigureData::ehh_left(), {3, 5, 6});
    EXPECT_EQ(img, FigureData::ehh_bottom());
    EXPECT_EQ(img.decorated_rises().size(), 3u);
    EXPECT_EQ(ehh_inverse(img, {3, 5, 6}), FigureData::ehh_left());
}

TEST(Ehh, KZeroIsRelabelling) {
    generate(FamilySpec{Family::ShuffleKNM, 2, 3, 0, std::nullopt, std::nullopt}, [](const Path& d) {
        Path img = ehh_forward(d, {0, 3, 2});
        ASSERT_EQ(img.size(), d.size() + 1);
        for (int i = 1; i <= d.size(); ++i) {
            ASSERT_EQ(img.a(i + 1), d.a(i));
            ASSERT_EQ(img.label(i + 1), d.label(i) <= 3 ? 1 : 2);
        }
    });
}

TEST(Ehh, ExhaustiveBijection) {
    for (int size = 0; size <= 5; ++size)
        for (int k = 0; k <= size; ++k)
            for (int n = k; n <= size + k; ++n) {
                int m = size + k - n;
                if (m < k) continue;
                std::set<Path> images;
                generate(FamilySpec{Family::ShuffleKNM, m, n, k, std::nullopt, std::nullopt}, [&](const Path& d) {
                    Path img = ehh_forward(d, {k, n, m});
                    ASSERT_EQ(dinv(img), dinv(d));
                    ASSERT_EQ(area(img), area(d));
                    ASSERT_EQ(ehh_inverse(img, {k, n, m}), d);
                    ASSERT_TRUE(images.insert(img).second);
                });
                EXPECT_EQ(images.size(),
                          count_members(FamilySpec{Family::TwoCar, m, n, k, std::nullopt, std::nullopt, true}));
            }
}

TEST(Ehh, InverseRejectsTallColumns) {
    // three stacked cars cannot come from a shuffle path
    Path tall({0, 1, 2}, std::vector<int>{1, 2, 3});
    EXPECT_THROW(ehh_inverse(tall, {0, 1, 2}), DomainError);
}

TEST(ShuffleStep, TwoRowExample) {
    // car 1 medium on the diagonal, car 2 big above it
    Path d({0, 1}, std::vector<int>{1, 2});
    auto res = shuffle_recursion_step(d, {0, 1, 1});
    EXPECT_EQ(res.path.size(), 0);
    EXPECT_EQ(res.s, 1);
    EXPECT_EQ(res.h, 0);
    EXPECT_TRUE(res.removed_first);
}

TEST(ShuffleStep, AreaLossOnEveryInstance) {
    for (int size = 1; size <= 6; ++size)
        for (int k = 0; k <= size; ++k)
            for (int n = std::max(k, 1); n <= size + k; ++n) {
                int m = size + k - n;
                if (m < k) continue;
                generate(FamilySpec{Family::ShuffleKNM, m, n, k, std::nullopt, std::nullopt}, [&](const Path& d) {
                    auto res = shuffle_recursion_step(d, {k, n, m});
                    int diagonal = 0;
                    for (int i = 1; i <= d.size(); ++i) diagonal += d.a(i) == 0;
                    ASSERT_EQ(area(d) - area(res.path), d.size() - diagonal);
                    ASSERT_EQ(res.area_loss, d.size() - diagonal);
                    ASSERT_TRUE(validate_family(res.path, FamilySpec{Family::ShuffleKNM, res.params.m, res.params.n,
                                                                     res.params.k, std::nullopt, std::nullopt}));
                });
            }
}

TEST(ShuffleStep, RejectsOutsideFamily) {
    EXPECT_THROW(shuffle_recursion_step(FigureData::ldp(), {1, 2, 3}), DomainError);
}
