#include <gtest/gtest.h>

#include "deltaqt/deltaqt.hpp"

using namespace dqt;

namespace {

FamilySpec spec(Family f, int m, int n, int k) { return FamilySpec{f, m, n, k, std::nullopt, std::nullopt}; }

// dinv straight from the definition, without the library's pair listing
int dinv_oracle(const std::vector<int>& a, const std::vector<int>& l) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            c += (a[i] == a[j] && l[i] < l[j]) || (a[i] == a[j] + 1 && l[i] > l[j]);
    return c;
}

long narayana(int n, int k) {
    Integer a, b;
    mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k - 1));
    Integer r = a * b / n;
    return r.get_si();
}

}  // namespace

TEST(Partition, Validation) {
    EXPECT_THROW(Partition({1, 2}), ValidationError);
    EXPECT_THROW(Partition({2, 0}), ValidationError);
    EXPECT_EQ(Partition::from_unsorted({1, 0, 3, 2}).parts(), (std::vector<int>{3, 2, 1}));
}

TEST(Partition, CellStatistics) {
    Partition mu({3, 1});
    // cell (row 0, col 0): one cell above, two to the right
    EXPECT_EQ(mu.arm({0, 0}), 2);
    EXPECT_EQ(mu.leg({0, 0}), 1);
    EXPECT_EQ(mu.arm({1, 0}), 0);
    EXPECT_EQ(mu.leg({0, 1}), 0);
    EXPECT_EQ(mu.coarm({0, 2}), 2);
    EXPECT_EQ(mu.coleg({1, 0}), 1);
    EXPECT_EQ(mu.conjugate().parts(), (std::vector<int>{2, 1, 1}));
    EXPECT_EQ(mu.cells().size(), 4u);
}

TEST(Partition, Counts) {
    const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(partitions_of(n).size(), p[n]);
    EXPECT_EQ(compositions_of(5).size(), 16u);
}

TEST(Path, InvariantsAreEnforced) {
    EXPECT_THROW(Path({1, 0}), ValidationError);
    EXPECT_THROW(Path({0, 2}), ValidationError);
    EXPECT_THROW(Path({0, 1}, std::vector<int>{2, 1}), ValidationError);
    EXPECT_THROW(Path({0, 0}, std::nullopt, {2}), ValidationError);
    EXPECT_NO_THROW(Path({0, 1}, std::vector<int>{1, 2}, {2}));
}

TEST(Path, FigureLdp) {
    Path p = FigureData::ldp();
    EXPECT_EQ(area(p), 8);
    EXPECT_EQ(dinv(p), 6);
    auto pairs = dinv_pairs(p);
    EXPECT_EQ(pairs.primary, (std::vector<std::pair<int, int>>{{2, 7}, {4, 7}}));
    EXPECT_EQ(pairs.secondary, (std::vector<std::pair<int, int>>{{2, 6}, {3, 4}, {3, 8}, {5, 8}}));
    EXPECT_EQ(dinv_reading_word(p), (std::vector<int>{2, 2, 4, 1, 6, 1, 5, 3}));
    EXPECT_TRUE(validate_family(p, FamilySpec{Family::LabelledDyck, 0, 8, 0, std::nullopt,
                                              std::vector<int>{2, 2, 1, 1, 1, 1}}));
}

TEST(Path, AreaExamples) {
    EXPECT_EQ(area(Path({0, 0, 0, 0})), 0);
    EXPECT_EQ(area(Path({0, 1, 1}, std::nullopt, {2})), 1);
}

TEST(Path, DinvExamples) {
    EXPECT_EQ(dinv(Path({0}, std::vector<int>{1})), 0);
    EXPECT_EQ(dinv(Path({0, 0}, std::vector<int>{1, 2})), 1);
    // decorations never change dinv
    EXPECT_EQ(dinv(Path({0, 1, 1}, std::vector<int>{1, 2, 3}, {2})), dinv(Path({0, 1, 1}, std::vector<int>{1, 2, 3})));
}

TEST(Path, DinvMatchesDefinitionOnAllSmallParkingFunctions) {
    for (int n = 1; n <= 5; ++n)
        generate(FamilySpec{Family::LabelledDyck, 0, n, 0, std::nullopt, std::vector<int>(static_cast<std::size_t>(n), 1)},
                 [&](const Path& p) {
                     ASSERT_EQ(dinv(p), dinv_oracle(p.area_word(), *p.labels()));
                     auto w = dinv_reading_word(p);
                     std::sort(w.begin(), w.end());
                     for (int i = 0; i < n; ++i) ASSERT_EQ(w[static_cast<std::size_t>(i)], i + 1);
                 });
}

TEST(Path, ReadingWordExamples) {
    EXPECT_EQ(dinv_reading_word(Path({0}, std::vector<int>{7})), std::vector<int>{7});
    // diagonal 0 holds labels 1,3,5 bottom to top; diagonal 1 holds 2,4
    EXPECT_EQ(dinv_reading_word(FigureData::zerocomp()), (std::vector<int>{1, 3, 5, 2, 4}));
}

TEST(Path, Compositions) {
    EXPECT_EQ(zero_composition(FigureData::zerocomp()).parts, (std::vector<int>{3, 1, 2, 1}));
    EXPECT_EQ(big_car_composition(FigureData::two_car()).parts, (std::vector<int>{3, 3, 1}));
    EXPECT_EQ(zero_composition(Path({0, 0, 0}, std::vector<int>{0, 0, 0})).parts, (std::vector<int>{1, 1, 1}));
    EXPECT_THROW(zero_composition(Path({0, 1}, std::vector<int>{1, 2})), DomainError);
    EXPECT_THROW(big_car_composition(Path({0, 0}, std::vector<int>{1, 1})), DomainError);
}

TEST(Path, GhostRowDoesNotChangeStatistics) {
    generate(spec(Family::TwoCar, 2, 3, 1), [](const Path& p) {
        Path g = with_ghost(p);
        ASSERT_EQ(dinv(g), dinv(p));
        ASSERT_EQ(area(g), area(p));
        ASSERT_EQ(without_ghost(g), p);
    });
}

TEST(Family, SmallestMembers) {
    Path one({0}, std::vector<int>{1});
    EXPECT_TRUE(validate_family(one, FamilySpec{Family::LabelledDyck, 0, 1, 0, std::nullopt, std::vector<int>{1}}));
    EXPECT_TRUE(validate_family(one, FamilySpec{Family::PartiallyLabelled, 0, 1, 0, std::nullopt, std::vector<int>{1}}));
}

TEST(Family, ShuffleFigure) {
    Path p = FigureData::ehh_left();
    EXPECT_EQ(dinv_reading_word(p), (std::vector<int>{5, 1, 8, 2, 7, 3, 6, 4}));
    EXPECT_TRUE(validate_family(p, spec(Family::ShuffleKNM, 6, 5, 3)));
    EXPECT_FALSE(validate_family(p, spec(Family::ShuffleKNM, 6, 5, 2)));
    EXPECT_TRUE(in_three_shuffle({5, 1, 8, 2, 7, 3, 6, 4}, 3, 5));
}

TEST(Family, CatalanFigure) {
    EXPECT_TRUE(validate_family(FigureData::plbounce_left(), spec(Family::CatalanPLD, 6, 5, 5)));
    EXPECT_FALSE(validate_family(FigureData::zerocomp(), spec(Family::CatalanPLD, 6, 5, 5)));
}

TEST(Family, RejectionsCarryADiagnostic) {
    auto v = validate_family(FigureData::ldp(), spec(Family::TwoCar, 4, 4, 0));
    EXPECT_FALSE(v);
    EXPECT_FALSE(v.diagnostic.empty());
}

TEST(Family, SpecChecks) {
    EXPECT_THROW(spec(Family::ShuffleKNM, 1, 3, 2).check(), SpecError);
    EXPECT_THROW(spec(Family::LabelledDyck, 0, 2, 0).check(), SpecError);
    EXPECT_THROW(parse_family("nope"), SpecError);
    EXPECT_EQ(parse_family("catalan-pld"), Family::CatalanPLD);
}

TEST(Polyomino, WordInvariants) {
    EXPECT_THROW(PolyominoWord::parse("0' 0"), ValidationError);
    EXPECT_THROW(PolyominoWord::parse("0 1"), ValidationError);
    EXPECT_NO_THROW(PolyominoWord::parse("0 0' 1"));
    auto w = PolyominoWord::parse("0 0' 1 1' 0");
    EXPECT_EQ(w.m(), 2);
    EXPECT_EQ(w.n(), 2);
}

TEST(Polyomino, StatsExamples) {
    auto s = polyomino_stats(PolyominoWord::parse("0 0' 0"));
    EXPECT_EQ(s.dinv, 1);
    auto e = polyomino_stats(PolyominoWord::parse("0 0'"));
    EXPECT_EQ(e.area, 0);
    EXPECT_EQ(e.dinv, 0);
}

TEST(Polyomino, FigureAwGeometry) {
    auto w = polyomino_word_from_paths(FigureData::aw_paths());
    EXPECT_EQ(w.to_string(), FigureData::aw_geometric());
    EXPECT_EQ(w.length(), 18);
    EXPECT_EQ(polyomino_stats(w).area, 11);
    // the reference word swaps letters 8 and 11
    auto printed = PolyominoWord::parse(FigureData::aw_printed());
    EXPECT_NE(w, printed);
    EXPECT_EQ(polyomino_stats(printed).area, 11);
}

TEST(Polyomino, EmptyPolyomino) {
    EXPECT_EQ(polyomino_word_from_paths({"", "", {}}).to_string(), "0");
    auto pp = polyomino_paths_from_word(PolyominoWord());
    EXPECT_EQ(pp.red, "");
    EXPECT_EQ(pp.green, "");
}

TEST(Polyomino, InvalidGeometryRejected) {
    EXPECT_THROW(polyomino_word_from_paths({"EN", "NE", {}}), GeometryError);
    EXPECT_THROW(polyomino_word_from_paths({"NE", "N", {}}), GeometryError);
}

TEST(Polyomino, CodecRoundTripsAndNarayanaCounts) {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n + m <= 6; ++n) {
            long count = 0;
            generate_polyominoes(m, n, 0, [&](const PolyominoWord& w) {
                ++count;
                auto pp = polyomino_paths_from_word(w);
                ASSERT_EQ(polyomino_word_from_paths(pp), w);
                ASSERT_EQ(polyomino_paths_from_word(polyomino_word_from_paths(pp)).red, pp.red);
            });
            EXPECT_EQ(count, narayana(m + n + 1, m + 1)) << m << "x" << n;
        }
}

TEST(Polyomino, DecorationsPassThroughTheCodec) {
    auto w = PolyominoWord::parse("0 0' 1* 1' 0");
    auto pp = polyomino_paths_from_word(w);
    EXPECT_EQ(pp.decorated_rises, std::set<int>{2});
    EXPECT_EQ(polyomino_word_from_paths(pp), w);
    EXPECT_EQ(polyomino_stats(w).area, polyomino_stats(PolyominoWord::parse("0 0' 1 1' 0")).area - 1);
}

TEST(Json, PathRoundTrip) {
    Path p = FigureData::ehh_bottom();
    Json j = to_json(p, "pf2");
    EXPECT_EQ(j["family"], "pf2");
    EXPECT_EQ(j["decorated_rises"], (std::vector<int>{5, 8, 10}));
    EXPECT_EQ(path_from_json(j), p);
    Json u = to_json(Path({0, 1}));
    EXPECT_TRUE(u["labels"].is_null());
    EXPECT_THROW(path_from_json(parse_json(R"({"labels": [1]})")), ValidationError);
}

TEST(Json, PolyominoRoundTrip) {
    auto w = PolyominoWord::parse("0 0' 1* 1' 0");
    Json j = to_json(w);
    EXPECT_EQ(j["letters"][1]["barred"], true);
    EXPECT_EQ(polyomino_from_json(j), w);
}
