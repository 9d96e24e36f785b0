#pragma once

// Ordinary intersection of a planar line arrangement in O(n log n).
//
// Pipeline: pick three lines meeting in three distinct points, make the first
// one horizontal, sort the crossings on it into bundles, and inspect the
// lowest crossing above it formed by consecutive lines of adjacent bundles.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <vector>

#include "ordinary/errors.hpp"
#include "ordinary/plane.hpp"

namespace ordinary {

enum class Provenance2D { TrivialGrid, OrdinaryBundle, LowestX, ParallelY };

inline std::string_view to_string(Provenance2D p) {
    switch (p) {
    case Provenance2D::TrivialGrid: return "trivial_grid";
    case Provenance2D::OrdinaryBundle: return "ordinary_bundle";
    case Provenance2D::LowestX: return "lowest_X";
    case Provenance2D::ParallelY: return "parallel_Y";
    }
    return "?";
}

/// Crossing on the base line, in frame coordinates, with the lines through it
/// ordered leftmost (largest slope angle) to rightmost.
struct Bundle {
    Point2 point;
    std::vector<std::size_t> members;
};

struct BaseBundles {
    std::vector<Bundle> bundles;        // ascending x
    std::vector<std::size_t> parallels; // lines parallel to the base, base excluded
};

struct Candidate {
    Point2 point; // frame coordinates
    std::array<std::size_t, 2> lines;
};

struct OrdinaryResult2D {
    Point2 point; // input coordinates
    std::array<std::size_t, 2> witnesses;
    Provenance2D provenance;
    std::optional<std::size_t> base_line; // absent for trivial_grid
    std::optional<AffineMap2> frame;
};

enum class TripleFailure { None, TooFew, AllParallel, AllConcurrent, TwoFamilies };

struct TripleSearch {
    std::optional<std::array<std::size_t, 3>> triple;
    TripleFailure failure = TripleFailure::None;
    std::optional<std::array<std::size_t, 2>> crossing_pair; // set for TwoFamilies
};

/// O(n): fix line 0 and the first line B not parallel to it, then look for a
/// third line avoiding both directions and their crossing P. When that fails,
/// every other line passes through P or is parallel to line 0 or B, and a
/// constant-size case split either repairs the triple or classifies the input.
inline TripleSearch search_triple(std::span<const Line2> lines) {
    TripleSearch out;
    if (lines.size() < 2) {
        out.failure = TripleFailure::TooFew;
        return out;
    }
    const std::size_t a = 0;
    std::size_t b = 1;
    while (b < lines.size() && lines[a].parallel_to(lines[b])) ++b;
    if (b == lines.size()) {
        out.failure = TripleFailure::AllParallel;
        return out;
    }
    const Point2 p = *intersect_lines(lines[a], lines[b]);
    std::optional<std::size_t> through_p, par_a, par_b;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (i == b) continue;
        if (on_line(lines[i], p)) {
            if (!through_p) through_p = i;
        } else if (lines[i].parallel_to(lines[a])) {
            if (!par_a) par_a = i;
        } else if (lines[i].parallel_to(lines[b])) {
            if (!par_b) par_b = i;
        } else {
            out.triple = {a, b, i};
            return out;
        }
    }
    if (!par_a && !par_b) {
        out.failure = through_p ? TripleFailure::AllConcurrent : TripleFailure::TwoFamilies;
        if (!through_p) out.crossing_pair = {a, b};
        return out;
    }
    if (through_p) {
        // E through P is parallel to neither a nor b, so F crosses both of its partners off P.
        if (par_a)
            out.triple = {b, *through_p, *par_a};
        else
            out.triple = {a, *through_p, *par_b};
        return out;
    }
    out.failure = TripleFailure::TwoFamilies;
    out.crossing_pair = {a, b};
    return out;
}

/// Indices of three lines meeting pairwise in three distinct points.
inline std::optional<std::array<std::size_t, 3>> find_triple(std::span<const Line2> lines) {
    return search_triple(lines).triple;
}

inline std::vector<Line2> frame_lines(std::span<const Line2> lines, const AffineMap2& frame) {
    std::vector<Line2> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back(frame.apply(l));
    return out;
}

/// Bundles on lines[base], which `frame` sends to the x-axis. Only the
/// crossing abscissa and cotangent of each image are needed, and both are
/// ratios, so images are never canonicalized.
inline BaseBundles bundles_on_base(std::span<const Line2> lines, std::size_t base, const AffineMap2& frame) {
    struct Crossing {
        Scalar x;
        Scalar cot; // dx/dy along the line; smaller means larger slope angle
        std::size_t line;
    };
    const auto& m = frame.matrix();
    const auto& t = frame.translation();
    const Scalar det = frame.det();
    BaseBundles out;
    std::vector<Crossing> crossings;
    crossings.reserve(lines.size());
    Scalar na, nb, nc;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i == base) continue;
        const Line2& l = lines[i];
        // Image a'x + b'y = c', scaled by det.
        na = l.a() * m[3] - l.b() * m[2];
        nb = l.b() * m[0] - l.a() * m[1];
        if (sgn(na) == 0) {
            out.parallels.push_back(i);
            continue;
        }
        nc = l.c() * det + na * t[0] + nb * t[1];
        crossings.push_back({Scalar(nc / na), Scalar(-nb / na), i});
    }
    std::sort(crossings.begin(), crossings.end(), [](const Crossing& p, const Crossing& q) {
        if (int c = ::cmp(p.x, q.x); c != 0) return c < 0;
        return ::cmp(p.cot, q.cot) < 0;
    });
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        if (i == 0 || crossings[i].x != crossings[i - 1].x)
            out.bundles.push_back({Point2{crossings[i].x, Scalar(0)}, {}});
        out.bundles.back().members.push_back(crossings[i].line);
    }
    return out;
}

/// `framed` must already be in a frame where lines[base] is the x-axis.
inline BaseBundles bundles_on_base(std::span<const Line2> framed, std::size_t base) {
    return bundles_on_base(framed, base, AffineMap2{});
}

/// Lowest crossing strictly above the base among rightmost(P_k) x leftmost(P_k+1),
/// in frame coordinates; ties go to the smaller x.
inline std::optional<Candidate> lowest_candidate(std::span<const Bundle> bundles, std::span<const Line2> lines,
                                                 const AffineMap2& frame) {
    std::optional<Candidate> best;
    for (std::size_t k = 0; k + 1 < bundles.size(); ++k) {
        const std::size_t r = bundles[k].members.back();
        const std::size_t l = bundles[k + 1].members.front();
        auto x = intersect_lines(lines[r], lines[l]);
        if (!x) continue;
        Point2 p = frame.apply(*x);
        if (sgn(p.y) <= 0) continue;
        if (!best || ::cmp(p.y, best->point.y) < 0 || (p.y == best->point.y && ::cmp(p.x, best->point.x) < 0))
            best = Candidate{std::move(p), {r, l}};
    }
    return best;
}

inline std::optional<Candidate> lowest_candidate(std::span<const Bundle> bundles, std::span<const Line2> framed) {
    return lowest_candidate(bundles, framed, AffineMap2{});
}

namespace detail {

__extension__ using Int128 = __int128;

/// Below this bound every key is an int64 fraction (numerators stay under
/// 2^62, denominators under 2^42) and cross products fit in 128 bits.
inline constexpr unsigned long kSmallCoefficient = 1ul << 20;

template <class Int>
struct IntLine {
    Int a, b, c;
};

// Canonical lines have integer coefficients.
inline std::vector<IntLine<Integer>> int_lines(std::span<const Line2> lines) {
    std::vector<IntLine<Integer>> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back({l.a().get_num(), l.b().get_num(), l.c().get_num()});
    return out;
}

/// Fixed-width copy when every coefficient is below kSmallCoefficient.
inline std::optional<std::vector<IntLine<std::int64_t>>> small_int_lines(std::span<const Line2> lines) {
    std::vector<IntLine<std::int64_t>> out;
    out.reserve(lines.size());
    for (const auto& l : lines) {
        const mpz_srcptr z[3] = {l.a().get_num_mpz_t(), l.b().get_num_mpz_t(), l.c().get_num_mpz_t()};
        for (auto v : z)
            if (mpz_cmpabs_ui(v, kSmallCoefficient) >= 0) return std::nullopt;
        out.push_back({mpz_get_si(z[0]), mpz_get_si(z[1]), mpz_get_si(z[2])});
    }
    return out;
}

template <class Int>
void require_distinct(const std::vector<IntLine<Int>>& ls) {
    std::vector<std::size_t> order(ls.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto tie = [&](std::size_t i) { return std::tie(ls[i].a, ls[i].b, ls[i].c); };
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return tie(i) < tie(j); });
    for (std::size_t k = 1; k < order.size(); ++k)
        if (tie(order[k - 1]) == tie(order[k]))
            throw Error(ErrorKind::NotAnArrangement,
                        "duplicate line at indices " + std::to_string(std::min(order[k - 1], order[k])) + " and " +
                            std::to_string(std::max(order[k - 1], order[k])));
}

/// Storage type and the type products are formed in.
template <class Int>
struct WideOf {
    using type = Int;
};
template <>
struct WideOf<std::int64_t> {
    using type = Int128;
};

/// num / den with den > 0.
template <class Int>
struct Ratio {
    Int num, den;
};

template <class Int, class W>
Ratio<Int> make_ratio(W num, W den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {Int(num), Int(den)};
}

template <class Int>
int compare(const Ratio<Int>& p, const Ratio<Int>& q) {
    using W = typename WideOf<Int>::type;
    const W l = W(p.num) * W(q.den);
    const W r = W(q.num) * W(p.den);
    return l < r ? -1 : (r < l ? 1 : 0);
}

struct PlanarDecision {
    Provenance2D provenance;
    std::size_t first, second;
};

/// Everything after the base is fixed, on integer fractions. In the frame of
/// base_frame(), x = b0 x - a0 y and y = side (a0 x + b0 y - c0), so a line
/// with det = a0 b - a b0 != 0 meets a0 x + b0 y = k at frame x
/// (k (a a0 + b b0) - c (a0^2 + b0^2)) / det. Taking k = c0 + side gives the
/// crossing one unit above the base, whose order within a bundle is the
/// slope-angle order.
template <class Int>
PlanarDecision decide_on_base(const std::vector<IntLine<Int>>& ls, std::size_t base, int side) {
    using W = typename WideOf<Int>::type;
    struct Crossing {
        Ratio<Int> x;
        std::size_t line;
    };
    const W a0 = ls[base].a, b0 = ls[base].b, c0 = ls[base].c;
    const W norm = a0 * a0 + b0 * b0;
    auto det_of = [&](const IntLine<Int>& l) { return W(a0 * W(l.b) - W(l.a) * b0); };
    auto dot_of = [&](const IntLine<Int>& l) { return W(W(l.a) * a0 + W(l.b) * b0); };
    auto at_level = [&](const IntLine<Int>& l, const W& k) {
        return make_ratio<Int, W>(W(k * dot_of(l) - W(l.c) * norm), det_of(l));
    };
    const W up = c0 + side;

    std::vector<Crossing> cs;
    std::vector<std::size_t> parallels;
    cs.reserve(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i == base) continue;
        if (det_of(ls[i]) == 0) {
            parallels.push_back(i);
            continue;
        }
        cs.push_back({at_level(ls[i], c0), i});
    }
    std::sort(cs.begin(), cs.end(), [&](const Crossing& p, const Crossing& q) {
        if (int c = compare(p.x, q.x); c != 0) return c < 0;
        return compare(at_level(ls[p.line], up), at_level(ls[q.line], up)) < 0;
    });
    check_invariant(cs.size() + parallels.size() + 1 == ls.size(), "bundle partition covers all lines");

    std::vector<std::size_t> starts; // bundle k is cs[starts[k], starts[k + 1])
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (i == 0 || compare(cs[i].x, cs[i - 1].x) != 0) starts.push_back(i);
    starts.push_back(cs.size());
    for (std::size_t k = 0; k + 1 < starts.size(); ++k)
        if (starts[k + 1] - starts[k] == 1) return {Provenance2D::OrdinaryBundle, base, cs[starts[k]].line};

    struct Best {
        W X, Y, D; // the crossing is (X / D, Y / D)
        Ratio<W> height, x;
        std::size_t r, l;
    };
    std::optional<Best> best;
    for (std::size_t k = 0; k + 2 < starts.size(); ++k) {
        const std::size_t r = cs[starts[k + 1] - 1].line, l = cs[starts[k + 1]].line;
        const W ra = ls[r].a, rb = ls[r].b, rc = ls[r].c, la = ls[l].a, lb = ls[l].b, lc = ls[l].c;
        W D = ra * lb - la * rb;
        if (D == 0) continue;
        W X = rc * lb - lc * rb;
        W Y = ra * lc - la * rc;
        W h = a0 * X + b0 * Y - c0 * D;
        if (side < 0) h = -h;
        auto height = make_ratio<W, W>(h, D);
        if (height.num <= 0) continue;
        auto fx = make_ratio<W, W>(W(b0 * X - a0 * Y), D);
        if (best) {
            int c = compare(height, best->height);
            if (c > 0 || (c == 0 && compare(fx, best->x) >= 0)) continue;
        }
        best = Best{std::move(X), std::move(Y), std::move(D), std::move(height), std::move(fx), r, l};
    }
    check_invariant(best.has_value(), "a crossing exists above the base");

    for (std::size_t p : parallels) {
        if (W(ls[p].a) * best->X + W(ls[p].b) * best->Y != W(ls[p].c) * best->D) continue;
        // M through X is parallel to the base: the crossing of M with the
        // leftmost line of the leftmost bundle is ordinary.
        return {Provenance2D::ParallelY, p, cs.front().line};
    }
    return {Provenance2D::LowestX, best->r, best->l};
}

} // namespace detail

inline void require_distinct_lines(std::span<const Line2> lines) {
    if (auto small = detail::small_int_lines(lines))
        detail::require_distinct(*small);
    else
        detail::require_distinct(detail::int_lines(lines));
}

inline OrdinaryResult2D find_ordinary_point_2d(std::span<const Line2> lines) {
    if (lines.size() < 2) throw Error(ErrorKind::NotAnArrangement, "need at least two lines");
    auto small = detail::small_int_lines(lines);
    if (small)
        detail::require_distinct(*small);
    else
        require_distinct_lines(lines);

    TripleSearch ts = search_triple(lines);
    if (!ts.triple) {
        switch (ts.failure) {
        case TripleFailure::AllParallel: throw Error(ErrorKind::AllParallel, "all lines parallel");
        case TripleFailure::AllConcurrent: throw Error(ErrorKind::AllConcurrent, "all lines concurrent");
        case TripleFailure::TwoFamilies: {
            auto [i, j] = *ts.crossing_pair;
            return {*intersect_lines(lines[i], lines[j]), {i, j}, Provenance2D::TrivialGrid, std::nullopt, std::nullopt};
        }
        default: throw Error(ErrorKind::NotAnArrangement, "need at least two lines");
        }
    }

    const auto [base, l1, l2] = *ts.triple;
    const Point2 witness = *intersect_lines(lines[l1], lines[l2]);
    const int side = static_cast<int>(side_of_line(lines[base], witness));
    const detail::PlanarDecision d = small ? detail::decide_on_base(*small, base, side)
                                           : detail::decide_on_base(detail::int_lines(lines), base, side);
    return {*intersect_lines(lines[d.first], lines[d.second]), {d.first, d.second}, d.provenance, base,
            base_frame(lines[base], witness)};
}

} // namespace ordinary
