#include <gtest/gtest.h>

#include "support.hpp"

using namespace ordinary;
using namespace testing_support;

TEST(Scalar, ParsesIntegersAndFractions) {
    EXPECT_EQ(parse_scalar("3"), Scalar(3));
    EXPECT_EQ(parse_scalar("-3/6"), Scalar(-1, 2));
    EXPECT_EQ(to_string(parse_scalar("4/8")), "1/2");
    EXPECT_THROW(parse_scalar("1/0"), Error);
    EXPECT_THROW(parse_scalar("1.5"), Error);
    EXPECT_THROW(parse_scalar(""), Error);
    EXPECT_THROW(parse_scalar("--1"), Error);
}

TEST(CanonicalLine, Examples) {
    auto l = canonical_line(2, 0, 4);
    EXPECT_EQ(l.a(), 1);
    EXPECT_EQ(l.b(), 0);
    EXPECT_EQ(l.c(), 2);
    auto m = canonical_line(0, -3, 6);
    EXPECT_EQ(m.a(), 0);
    EXPECT_EQ(m.b(), 1);
    EXPECT_EQ(m.c(), -2);
    auto k = canonical_line(Q("1/2"), Q("1/3"), 1);
    EXPECT_EQ(k.a(), 3);
    EXPECT_EQ(k.b(), 2);
    EXPECT_EQ(k.c(), 6);
    EXPECT_THROW(canonical_line(0, 0, 1), Error);
}

TEST(CanonicalLine, IdempotentAndScaleInvariant) {
    SplitMix64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Scalar a(rng.range(-20, 20), rng.range(1, 9)), b(rng.range(-20, 20), rng.range(1, 9)),
            c(rng.range(-20, 20), rng.range(1, 9));
        a.canonicalize();
        b.canonicalize();
        c.canonicalize();
        if (a == 0 && b == 0) continue;
        Scalar s(rng.range(-9, 9), rng.range(1, 9));
        s.canonicalize();
        if (s == 0) continue;
        auto l = canonical_line(a, b, c);
        auto again = canonical_line(l.a(), l.b(), l.c());
        auto scaled = canonical_line(Scalar(s * a), Scalar(s * b), Scalar(s * c));
        EXPECT_TRUE(l.same_locus(again));
        EXPECT_TRUE(l.same_locus(scaled));
    }
}

TEST(CanonicalLine, ParallelismIgnoresOffsetScaling) {
    // x = 0 and 2x = 1 have different primitive triples but are parallel.
    EXPECT_TRUE(canonical_line(1, 0, 0).parallel_to(canonical_line(2, 0, 1)));
    EXPECT_FALSE(canonical_line(1, 0, 0).parallel_to(canonical_line(1, 1, 0)));
}

TEST(IntersectLines, Examples) {
    EXPECT_EQ(*intersect_lines(L(1, 0, 0), L(0, 1, 0)), P(0, 0));
    EXPECT_EQ(*intersect_lines(L(1, 1, 2), L(1, -1, 0)), P(1, 1));
    EXPECT_FALSE(intersect_lines(L(1, 0, 0), L(1, 0, 1)).has_value());
    EXPECT_THROW(intersect_lines(L(1, 0, 0), L(2, 0, 0)), Error);
}

TEST(IntersectLines, AgreesWithCramer) {
    SplitMix64 rng(11);
    for (int i = 0; i < 300; ++i) {
        auto l = L(rng.range(-9, 9), rng.range(1, 9), rng.range(-30, 30));
        auto m = L(rng.range(-9, 9), rng.range(-9, 9) | 1, rng.range(-30, 30));
        if (l.same_locus(m)) continue;
        EXPECT_EQ(intersect_lines(l, m), cramer(l, m));
    }
}

TEST(SideOfLine, Examples) {
    auto base = L(0, 1, 0);
    EXPECT_EQ(side_of_line(base, P(3, 1)), Side::Positive);
    EXPECT_EQ(side_of_line(base, P(5, 0)), Side::On);
    EXPECT_EQ(side_of_line(base, P(0, -2)), Side::Negative);
}

TEST(BaseFrame, IdentityAndReflection) {
    auto f = base_frame(L(0, 1, 0), P(0, 1));
    EXPECT_EQ(f.apply(P(3, 4)), P(3, 4));
    EXPECT_EQ(f.apply(P(-2, 7)), P(-2, 7));
    auto g = base_frame(L(0, 1, 0), P(0, -1));
    EXPECT_EQ(g.apply(P(3, 4)), P(3, -4));
    EXPECT_THROW(base_frame(L(0, 1, 0), P(4, 0)), Error);
}

TEST(BaseFrame, VerticalBaseMapsToAxisWithWitnessAbove) {
    const auto base = L(1, 0, 0);
    const auto f = base_frame(base, P(1, 0));
    for (auto p : {P(0, 0), P(0, 5), P(0, -3)}) EXPECT_EQ(f.apply(p).y, 0);
    EXPECT_GT(f.apply(P(1, 0)).y, 0);
    auto framed = f.apply(base);
    EXPECT_EQ(framed.a(), 0);
}

TEST(BaseFrame, InverseRoundTripsAndPreservesIncidence) {
    SplitMix64 rng(3);
    for (int i = 0; i < 100; ++i) {
        auto base = L(rng.range(-9, 9), rng.range(1, 9), rng.range(-9, 9));
        Point2 w = P(rng.range(-20, 20), rng.range(-20, 20));
        if (on_line(base, w)) continue;
        auto f = base_frame(base, w);
        auto inv = f.inverse();
        EXPECT_EQ(f.apply(base).a(), 0);
        EXPECT_GT(f.apply(w).y, 0);
        Point2 p = P(rng.range(-50, 50), rng.range(-50, 50));
        EXPECT_EQ(inv.apply(f.apply(p)), p);
        auto l = L(rng.range(-9, 9), rng.range(1, 9), rng.range(-9, 9));
        EXPECT_EQ(on_line(l, p), on_line(f.apply(l), f.apply(p)));
    }
}

TEST(SolvePoint, Examples) {
    std::vector<HyperplaneD> a{H({1, 0, 0}, 0), H({0, 1, 0}, 0), H({0, 0, 1}, 0)};
    EXPECT_EQ(*solve_point(a), (PointD{0, 0, 0}));
    std::vector<HyperplaneD> b{H({1, 0, 0}, 0), H({0, 1, 0}, 0), H({1, 1, 0}, 1)};
    EXPECT_FALSE(solve_point(b).has_value());
    std::vector<HyperplaneD> c{H({1, 0, 0}, 0), H({0, 1, 0}, 0), H({1, 1, 1}, 1)};
    auto p = solve_point(c);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(count_through(c, *p), 3u);
    EXPECT_EQ(*p, (PointD{0, 0, 1}));
}

TEST(MaximalIndependentSubset, Examples) {
    std::vector<Vector> a{{1, 0}, {0, 1}, {1, 1}};
    EXPECT_EQ(maximal_independent_subset(a), (std::vector<std::size_t>{0, 1}));
    std::vector<Vector> b{{1, 1, 0}, {2, 2, 0}, {3, 3, 0}};
    EXPECT_EQ(maximal_independent_subset(b).size(), 1u);
}

TEST(MaximalIndependentSubset, MatchesBareissRankOnRandomR5) {
    SplitMix64 rng(2024);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 9));
        const std::size_t r = static_cast<std::size_t>(rng.range(1, 5));
        std::vector<Vector> basis;
        for (std::size_t i = 0; i < r; ++i) {
            Vector v(5);
            for (auto& x : v) x = rng.range(-4, 4);
            basis.push_back(v);
        }
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < n; ++i) {
            Vector v(5, Scalar(0));
            for (const auto& b : basis) {
                Scalar c(rng.range(-2, 2));
                for (std::size_t k = 0; k < 5; ++k) v[k] += c * b[k];
            }
            vs.push_back(v);
        }
        auto idx = maximal_independent_subset(vs);
        std::vector<Vector> chosen;
        for (auto i : idx) chosen.push_back(vs[i]);
        ASSERT_EQ(idx.size(), bareiss_rank(vs));
        ASSERT_EQ(bareiss_rank(chosen), idx.size());
        ASSERT_TRUE(std::is_sorted(idx.begin(), idx.end()));
    }
}

TEST(Flats, Examples) {
    auto z0 = flat_of(H({0, 0, 1}, 0));
    auto z1 = flat_of(H({0, 0, 1}, 1));
    EXPECT_FALSE(intersect_flats(z0, z1).has_value());
    auto line = intersect_flats(z0, flat_of(H({1, 0, 0}, 0)));
    ASSERT_TRUE(line.has_value());
    EXPECT_EQ(line->dim(), 1u);
    EXPECT_TRUE(flat_contains(*line, PointD{0, 7, 0}));
    EXPECT_FALSE(flat_contains(*line, PointD{1, 7, 0}));

    auto xy = *intersect_flats(flat_of(H({1, 0, 0, 0}, 0)), flat_of(H({0, 1, 0, 0}, 0)));
    EXPECT_EQ(xy.dim(), 2u);
    EXPECT_FALSE(intersect_flats(xy, flat_of(H({1, 1, 0, 0}, 5))).has_value());
}

TEST(Flats, IntersectionIsContainedInBoth) {
    SplitMix64 rng(99);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = static_cast<std::size_t>(rng.range(2, 5));
        auto draw = [&] {
            Vector n(d);
            for (auto& x : n) x = rng.range(-3, 3);
            if (is_zero(n)) n[0] = 1;
            return canonical_hyperplane(n, Scalar(rng.range(-5, 5)));
        };
        auto h1 = draw(), h2 = draw();
        auto f = intersect_flats(flat_of(h1), flat_of(h2));
        if (!f) {
            EXPECT_TRUE(h1.parallel_to(h2));
            EXPECT_FALSE(h1.same_locus(h2));
            continue;
        }
        EXPECT_TRUE(h1.contains(f->base_point));
        EXPECT_TRUE(h2.contains(f->base_point));
        for (const auto& dir : f->directions) {
            EXPECT_EQ(dot(h1.normal(), dir), 0);
            EXPECT_EQ(dot(h2.normal(), dir), 0);
        }
        EXPECT_EQ(f->dim(), h1.same_locus(h2) ? d - 1 : d - 2);
    }
}

TEST(Hyperplane, CanonicalFamiliesAndDimensionCap) {
    auto a = H({1, 0, 0}, 0);
    auto b = canonical_hyperplane({2, 0, 0}, 2);
    auto c = canonical_hyperplane({2, 0, 0}, 1);
    EXPECT_TRUE(a.parallel_to(b));
    EXPECT_TRUE(a.parallel_to(c));
    EXPECT_FALSE(b.same_locus(c));
    EXPECT_THROW(check_dimension(17), Error);
    EXPECT_NO_THROW(check_dimension(16));
}
