#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace ordinary;
using namespace testing_support;

namespace {

Pseudoline line_ps(const Scalar& m, const Scalar& k, std::optional<Color> c = std::nullopt) {
    return straight_pseudoline(m, Point2{Scalar(0), k}, c);
}

std::vector<Pseudoline> numbered(std::vector<Pseudoline> ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) ps[i].id = i;
    return ps;
}

Pseudoline bent() { return Pseudoline{{P(0, 0), P(1, 1)}, Scalar(-1), Scalar(0), std::nullopt, 0}; }

} // namespace

TEST(EvalAtX, Examples) {
    EXPECT_EQ(eval_at_x(line_ps(1, 0), Scalar(3)), 3);
    EXPECT_EQ(eval_at_x(bent(), Scalar(2)), 1);
    EXPECT_EQ(eval_at_x(bent(), Scalar(-1)), 1);
    EXPECT_EQ(eval_at_x(bent(), Q("1/2")), Q("1/2"));
}

TEST(EvalAtX, MatchesLinearWalk) {
    SplitMix64 rng(5);
    GenSpec s;
    s.kind = GenKind::WiringDiagram;
    s.n = 12;
    s.seed = 5;
    auto ps = generate_pseudolines(s);
    for (const auto& p : ps)
        for (int i = 0; i < 40; ++i) {
            Scalar x(rng.range(-40, 400), rng.range(1, 8));
            x.canonicalize();
            ASSERT_EQ(eval_at_x(p, x), walk_eval(p, x));
        }
}

TEST(IntersectPseudolines, Examples) {
    EXPECT_EQ(intersect_pseudolines(line_ps(1, 0), line_ps(-1, 0)), P(0, 0));
    EXPECT_EQ(intersect_pseudolines(line_ps(0, 0), line_ps(-1, 1)), P(1, 0));
    EXPECT_THROW(intersect_pseudolines(line_ps(0, 0), line_ps(0, 1)), Error);
    // Touching without crossing is not a crossing.
    Pseudoline vee{{P(0, 0)}, Scalar(-1), Scalar(1), std::nullopt, 0};
    EXPECT_EQ(try_intersect(vee, line_ps(0, 0)).status, CrossingStatus::None);
    // Crossing twice.
    EXPECT_EQ(try_intersect(vee, line_ps(0, 1)).status, CrossingStatus::Multiple);
}

TEST(IntersectPseudolines, WiringPairsCrossWhereValuesMeet) {
    GenSpec s;
    s.kind = GenKind::WiringDiagram;
    s.n = 15;
    s.seed = 8;
    auto ps = generate_pseudolines(s);
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            Point2 c = intersect_pseudolines(ps[i], ps[j]);
            EXPECT_EQ(walk_eval(ps[i], c.x), c.y);
            EXPECT_EQ(walk_eval(ps[j], c.x), c.y);
            // Order flips across the crossing.
            Scalar lo = c.x - Q("1/4"), hi = c.x + Q("1/4");
            EXPECT_EQ(sgn(walk_eval(ps[i], lo) - walk_eval(ps[j], lo)), -sgn(walk_eval(ps[i], hi) - walk_eval(ps[j], hi)));
        }
}

TEST(ValidateArrangement, Examples) {
    auto good = numbered({line_ps(1, 0), line_ps(-1, 0), line_ps(0, 1)});
    EXPECT_TRUE(validate_arrangement(good).ok());
    auto parallel = numbered({line_ps(0, 0), line_ps(0, 1)});
    EXPECT_FALSE(validate_arrangement(parallel).ok());
    auto pencil = numbered({line_ps(1, 0), line_ps(2, 0), line_ps(3, 0)});
    auto rep = validate_arrangement(pencil);
    EXPECT_FALSE(rep.ok());
    EXPECT_TRUE(rep.all_concurrent);
}

TEST(ValidateArrangement, SegmentCap) {
    GenSpec s;
    s.kind = GenKind::WiringDiagram;
    s.n = 120;
    s.seed = 1;
    auto ps = generate_pseudolines(s);
    std::size_t longest = 0;
    for (const auto& p : ps) longest = std::max(longest, p.segment_count());
    ASSERT_GT(longest, kDefaultMaxSegments);
    EXPECT_FALSE(validate_arrangement(ps).ok());
    EXPECT_TRUE(validate_arrangement(ps, longest).ok());
}

TEST(PseudolinesThrough, Examples) {
    auto ps = numbered({line_ps(1, 0), line_ps(-1, 0), line_ps(0, 1)});
    EXPECT_EQ(pseudolines_through(ps, P(0, 0)), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(pseudolines_through(ps, P(1, 1)), (std::vector<std::size_t>{0, 2}));
}

TEST(PseudolinesThrough, MatchesOracleMap) {
    GenSpec s;
    s.kind = GenKind::WiringDiagram;
    s.n = 20;
    s.seed = 3;
    s.max_bundle_size = 5;
    auto ps = generate_pseudolines(s);
    for (const auto& e : oracle::enumerate_2d(ps)) EXPECT_EQ(pseudolines_through(ps, e.point), e.incident);
}

TEST(FindOrdinaryPseudoline, Examples) {
    auto tri = numbered({line_ps(1, 0), line_ps(-1, 0), line_ps(0, 1)});
    auto r = find_ordinary_pseudoline(tri);
    EXPECT_EQ(count_through(tri, r.point), 2u);

    auto fan = numbered({line_ps(1, 0), line_ps(-1, 0), line_ps(2, 0), line_ps(0, 1)});
    auto f = find_ordinary_pseudoline(fan);
    EXPECT_NE(f.point, P(0, 0));
    EXPECT_EQ(f.point.y, 1);
    EXPECT_EQ(count_through(fan, f.point), 2u);
}

TEST(FindOrdinaryPseudoline, RecursesFromATriplePoint) {
    // L1, L2 and L4 meet at the origin; L0 is the base below it.
    auto ps = numbered({line_ps(0, -1), line_ps(1, 0), line_ps(-1, 0), line_ps(Q("1/3"), 5), line_ps(3, 0)});
    auto r = find_ordinary_pseudoline(ps);
    EXPECT_EQ(count_through(ps, r.point), 2u);
    ASSERT_FALSE(r.trace.empty());
    EXPECT_EQ(r.trace.front().apex, P(0, 0));
    EXPECT_EQ(r.trace.front().base, 0u);
}

TEST(FindOrdinaryPseudoline, WiringDiagramN50) {
    int with_steps = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenSpec s;
        s.kind = GenKind::WiringDiagram;
        s.n = 50;
        s.seed = seed;
        s.max_bundle_size = 6;
        auto ps = lead_with_multiple_point(generate_pseudolines(s));
        auto map = oracle::enumerate_2d(ps);
        std::size_t high = 0;
        for (const auto& e : map) high += e.incident.size() >= 3;
        EXPECT_GT(high, 0u);
        auto r = find_ordinary_pseudoline(ps);
        EXPECT_EQ(count_through(ps, r.point), 2u);
        EXPECT_LE(r.trace.size(), 50u);
        std::set<std::size_t> dividers;
        for (const auto& st : r.trace)
            if (st.divider) EXPECT_TRUE(dividers.insert(*st.divider).second);
        with_steps += !r.trace.empty();
    }
    EXPECT_EQ(with_steps, 20);
}

TEST(FindOrdinaryPseudoline, Errors) {
    auto pencil = numbered({line_ps(1, 0), line_ps(2, 0), line_ps(3, 0)});
    try {
        find_ordinary_pseudoline(pencil);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AllConcurrent);
    }
    auto parallel = numbered({line_ps(0, 0), line_ps(0, 1), line_ps(1, 0)});
    try {
        find_ordinary_pseudoline(parallel);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidArrangement);
    }
}

TEST(FindMonochromatic, RedPairBluePair) {
    // Red y=x, y=-x and blue y=0, x=2, sheared by (x, y) -> (x + 2y, y) so
    // that no pseudoline is vertical. Incidences are unchanged.
    auto ps = numbered({line_ps(Q("1/3"), 0, Color::Red), line_ps(1, 0, Color::Red), line_ps(0, 0, Color::Blue),
                        line_ps(Q("1/2"), -1, Color::Blue)});
    auto r = find_monochromatic(ps);
    EXPECT_EQ(r.point, P(2, 0));
    EXPECT_EQ(r.color, Color::Blue);
    EXPECT_EQ(r.witnesses, (std::vector<std::size_t>{2, 3}));
    // Same answer when the first pseudoline is blue.
    std::vector<Pseudoline> swapped{ps[2], ps[0], ps[1], ps[3]};
    auto s = find_monochromatic(numbered(swapped));
    EXPECT_EQ(s.point, P(2, 0));
    EXPECT_EQ(s.color, Color::Blue);
}

TEST(FindMonochromatic, SingleColor) {
    auto ps = numbered({line_ps(1, 0, Color::Blue), line_ps(-1, 0, Color::Blue), line_ps(0, 1, Color::Blue)});
    auto r = find_monochromatic(ps);
    EXPECT_EQ(r.color, Color::Blue);
    EXPECT_GE(count_through(ps, r.point), 2u);
}

TEST(FindMonochromatic, UncoloredRejected) {
    auto ps = numbered({line_ps(1, 0, Color::Blue), line_ps(-1, 0), line_ps(0, 1, Color::Red)});
    EXPECT_THROW(find_monochromatic(ps), Error);
}

TEST(FindMonochromatic, BiasedWiringReturnsOnlyAvailableColor) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec s;
        s.kind = GenKind::Biased;
        s.n = 8 + seed % 17;
        s.seed = seed;
        s.color_bias = seed % 2 ? 0.25 : 0.75;
        s.straight = seed % 4 < 2;
        auto ps = generate_pseudolines(s);
        const Color only = s.color_bias < 0.5 ? Color::Blue : Color::Red;
        auto cls = oracle::classify(oracle::enumerate_2d(ps), 2, oracle::colors_of<Pseudoline>(ps));
        ASSERT_TRUE((only == Color::Red ? cls.monochromatic_blue : cls.monochromatic_red).empty());
        PseudolineOptions opt;
        opt.max_segments = 1000;
        auto r = find_monochromatic(ps, opt);
        EXPECT_EQ(r.color, only) << "seed " << seed;
        for (auto i : pseudolines_through(ps, r.point)) EXPECT_EQ(ps[i].color, r.color);
        std::set<std::size_t> dividers;
        for (const auto& st : r.trace)
            if (st.divider) EXPECT_TRUE(dividers.insert(*st.divider).second);
    }
}
