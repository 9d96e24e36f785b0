#pragma once

// Pseudoline arrangements as x-monotone rational polylines with end rays, and
// the two O(n^2) triangle-shrinking searches: an ordinary crossing, and a
// monochromatic crossing in a two-colored arrangement.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "ordinary/errors.hpp"
#include "ordinary/plane.hpp"

namespace ordinary {

inline constexpr std::size_t kDefaultMaxSegments = 64;

/// Graph of a piecewise-linear function: vertices with strictly increasing x,
/// and rays of the given slopes beyond the first and last vertex. A straight
/// line is one vertex with equal slopes.
struct Pseudoline {
    std::vector<Point2> vertices;
    Scalar left_slope;
    Scalar right_slope;
    std::optional<Color> color;
    std::size_t id = 0;

    /// Finite segments plus the two rays.
    std::size_t segment_count() const { return vertices.size() + 1; }
};

inline Pseudoline straight_pseudoline(const Scalar& slope, const Point2& anchor,
                                      std::optional<Color> color = std::nullopt, std::size_t id = 0) {
    return Pseudoline{{anchor}, slope, slope, color, id};
}

/// Embeds a non-vertical line; nullopt for vertical ones.
inline std::optional<Pseudoline> as_pseudoline(const Line2& l) {
    if (sgn(l.b()) == 0) return std::nullopt;
    return straight_pseudoline(Scalar(-l.a() / l.b()), Point2{Scalar(0), Scalar(l.c() / l.b())}, l.color(), l.id());
}

/// Throws InvalidArrangement when the polyline is malformed or too long.
inline void check_pseudoline(const Pseudoline& p, std::size_t max_segments = kDefaultMaxSegments) {
    if (p.vertices.empty()) throw Error(ErrorKind::InvalidArrangement, "pseudoline without vertices");
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
        if (::cmp(p.vertices[i - 1].x, p.vertices[i].x) >= 0)
            throw Error(ErrorKind::InvalidArrangement, "pseudoline " + std::to_string(p.id) + " is not x-monotone");
    if (p.segment_count() > max_segments)
        throw Error(ErrorKind::InvalidArrangement, "pseudoline " + std::to_string(p.id) + " has " +
                                                       std::to_string(p.segment_count()) + " segments, cap is " +
                                                       std::to_string(max_segments));
}

inline Scalar eval_at_x(const Pseudoline& p, const Scalar& x) {
    const auto& v = p.vertices;
    if (::cmp(x, v.front().x) <= 0) return v.front().y + p.left_slope * (x - v.front().x);
    if (::cmp(x, v.back().x) >= 0) return v.back().y + p.right_slope * (x - v.back().x);
    auto it = std::upper_bound(v.begin(), v.end(), x,
                               [](const Scalar& q, const Point2& pt) { return ::cmp(q, pt.x) < 0; });
    const Point2& hi = *it;
    const Point2& lo = *(it - 1);
    return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

inline bool on_pseudoline(const Pseudoline& p, const Point2& pt) { return eval_at_x(p, pt.x) == pt.y; }

/// Signed vertical offset of pt from p: positive above.
inline int side_of(const Pseudoline& p, const Point2& pt) { return sgn(pt.y - eval_at_x(p, pt.x)); }

enum class CrossingStatus { Single, None, Multiple };

struct Crossing {
    CrossingStatus status = CrossingStatus::None;
    Point2 point;
};

/// Walks the merged breakpoints of f = p - q and locates its sign change.
/// A single transversal crossing is the only accepted shape.
inline Crossing try_intersect(const Pseudoline& p, const Pseudoline& q) {
    std::vector<Scalar> xs;
    xs.reserve(p.vertices.size() + q.vertices.size());
    {
        std::size_t i = 0, j = 0;
        while (i < p.vertices.size() || j < q.vertices.size()) {
            int c = i == p.vertices.size()   ? 1
                    : j == q.vertices.size() ? -1
                                             : ::cmp(p.vertices[i].x, q.vertices[j].x);
            if (c <= 0) {
                xs.push_back(p.vertices[i].x);
                if (c == 0) ++j;
                ++i;
            } else {
                xs.push_back(q.vertices[j].x);
                ++j;
            }
        }
    }
    // f at each breakpoint; linear walk in both polylines.
    std::vector<Scalar> f;
    f.reserve(xs.size());
    {
        auto walker = [](const Pseudoline& pl) {
            return [&pl, k = std::size_t{0}](const Scalar& x) mutable -> Scalar {
                const auto& v = pl.vertices;
                while (k < v.size() && ::cmp(v[k].x, x) < 0) ++k;
                if (k == 0) return v.front().y + pl.left_slope * (x - v.front().x);
                if (k == v.size()) return v.back().y + pl.right_slope * (x - v.back().x);
                if (v[k].x == x) return v[k].y;
                const Point2& lo = v[k - 1];
                const Point2& hi = v[k];
                return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
            };
        };
        auto fp = walker(p);
        auto fq = walker(q);
        for (const auto& x : xs) f.push_back(fp(x) - fq(x));
    }
    const Scalar slope_left = p.left_slope - q.left_slope;
    const Scalar slope_right = p.right_slope - q.right_slope;
    const int s_minus = sgn(slope_left) != 0 ? -sgn(slope_left) : sgn(f.front());
    const int s_plus = sgn(slope_right) != 0 ? sgn(slope_right) : sgn(f.back());

    // Sign sequence: -inf, breakpoints..., +inf. Events are zeros at breakpoints
    // and strict sign flips between neighbouring nonzero entries.
    std::vector<int> s;
    s.reserve(f.size() + 2);
    s.push_back(s_minus);
    for (const auto& v : f) s.push_back(sgn(v));
    s.push_back(s_plus);

    Crossing out;
    if (s_minus == 0 || s_plus == 0) {
        out.status = CrossingStatus::Multiple; // coincident rays
        return out;
    }
    // Walk maximal zero runs: a run flanked by opposite signs is a crossing, by
    // equal signs a touch. Runs longer than one breakpoint are shared segments.
    std::size_t crossings = 0, contacts = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (s[k] != 0) {
            if (s[k - 1] != 0 && s[k - 1] != s[k]) ++crossings, ++contacts;
            continue;
        }
        std::size_t e = k;
        while (s[e] == 0) ++e;
        ++contacts;
        if (e - k > 1) ++contacts;
        crossings += s[k - 1] != s[e];
        k = e;
    }
    if (crossings == 0) {
        out.status = CrossingStatus::None;
        return out;
    }
    if (contacts > 1) {
        out.status = CrossingStatus::Multiple;
        return out;
    }
    out.status = CrossingStatus::Single;
    const std::size_t m = f.size();
    for (std::size_t k = 0; k < m; ++k) {
        if (sgn(f[k]) == 0) {
            out.point = {xs[k], eval_at_x(p, xs[k])};
            return out;
        }
    }
    Scalar x;
    if (s[0] != s[1]) {
        x = xs.front() - f.front() / slope_left;
    } else if (s[m] != s[m + 1]) {
        x = xs.back() - f.back() / slope_right;
    } else {
        std::size_t k = 1;
        while (s[k] == s[k + 1]) ++k;
        // zero of the linear piece between xs[k-1] and xs[k]
        const Scalar& x0 = xs[k - 1];
        const Scalar& x1 = xs[k];
        x = x0 + f[k - 1] * (x1 - x0) / (f[k - 1] - f[k]);
    }
    out.point = {x, eval_at_x(p, x)};
    return out;
}

inline Point2 intersect_pseudolines(const Pseudoline& p, const Pseudoline& q) {
    Crossing c = try_intersect(p, q);
    if (c.status == CrossingStatus::None)
        throw Error(ErrorKind::NoCrossing,
                    "pseudolines " + std::to_string(p.id) + " and " + std::to_string(q.id) + " do not cross");
    if (c.status == CrossingStatus::Multiple)
        throw Error(ErrorKind::MultipleCrossings, "pseudolines " + std::to_string(p.id) + " and " +
                                                      std::to_string(q.id) + " meet more than once");
    return c.point;
}

struct ValidationIssue {
    std::size_t first;
    std::size_t second; // equals first for single-pseudoline problems
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool all_concurrent = false;

    bool ok() const { return issues.empty() && !all_concurrent; }
};

/// O(n^2 * S_max) check of the arrangement axioms.
inline ValidationReport validate_arrangement(std::span<const Pseudoline> ps,
                                             std::size_t max_segments = kDefaultMaxSegments) {
    ValidationReport rep;
    bool shapes_ok = true;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        try {
            check_pseudoline(ps[i], max_segments);
        } catch (const Error& e) {
            rep.issues.push_back({i, i, e.what()});
            shapes_ok = false;
        }
    }
    if (!shapes_ok) return rep;
    std::optional<Point2> common;
    bool concurrent = ps.size() >= 2;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            Crossing c = try_intersect(ps[i], ps[j]);
            if (c.status == CrossingStatus::None) {
                rep.issues.push_back({i, j, "pair never crosses"});
                concurrent = false;
            } else if (c.status == CrossingStatus::Multiple) {
                rep.issues.push_back({i, j, "pair meets more than once or touches"});
                concurrent = false;
            } else if (!common) {
                common = c.point;
            } else if (c.point != *common) {
                concurrent = false;
            }
        }
    }
    rep.all_concurrent = concurrent && common.has_value();
    return rep;
}

inline void require_valid(std::span<const Pseudoline> ps, std::size_t max_segments) {
    auto rep = validate_arrangement(ps, max_segments);
    if (!rep.issues.empty()) {
        const auto& is = rep.issues.front();
        throw Error(ErrorKind::InvalidArrangement, "invalid arrangement (" + std::to_string(rep.issues.size()) +
                                                       " issues), first at " + std::to_string(is.first) + "/" +
                                                       std::to_string(is.second) + ": " + is.message);
    }
    if (rep.all_concurrent) throw Error(ErrorKind::AllConcurrent, "all pseudolines cross at one point");
}

inline std::vector<std::size_t> pseudolines_through(std::span<const Pseudoline> ps, const Point2& pt) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (on_pseudoline(ps[i], pt)) out.push_back(i);
    return out;
}

/// Recursion state: triangle with apex P over the base pseudoline, base
/// corners Q (left_pt) and S (right_pt), and R (mid_pt) on the base between
/// them. left_side runs Q..P, right_side P..S, mid_side P..R.
struct TriangleState {
    Point2 apex;
    std::size_t base = 0;
    Point2 left_pt;
    Point2 right_pt;
    std::size_t left_side = 0;
    std::size_t right_side = 0;
    Point2 mid_pt;
    std::size_t mid_side = 0;
    std::optional<Color> expected_color;
    std::vector<std::size_t> used_dividers;
    std::size_t step = 0;
    std::optional<std::size_t> divider; // chosen at this step, if the search continued
};

struct PseudolineOptions {
    bool validate = true;
    std::size_t max_segments = kDefaultMaxSegments;
};

struct OrdinaryPseudoResult {
    Point2 point;
    std::array<std::size_t, 2> witnesses;
    std::vector<TriangleState> trace;
};

struct MonoResult {
    Point2 point;
    Color color = Color::Blue;
    std::vector<std::size_t> witnesses;
    std::vector<TriangleState> trace;
};

namespace detail {

inline bool strictly_between(const Scalar& x, const Scalar& a, const Scalar& b) {
    return ::cmp(a, b) < 0 ? (::cmp(a, x) < 0 && ::cmp(x, b) < 0) : (::cmp(b, x) < 0 && ::cmp(x, a) < 0);
}

/// Shrinks the triangle until `done(R, incident)` holds. `pick(incident, st)`
/// names the dividing pseudoline through R. Each step costs O(n) incidence
/// tests plus two O(S_max) crossings; no divider repeats, so at most n steps.
template <class Done, class Pick>
std::pair<Point2, std::vector<std::size_t>> shrink_triangle(std::span<const Pseudoline> ps, TriangleState st,
                                                            std::vector<TriangleState>& trace, Done done, Pick pick,
                                                            bool alternate_color) {
    std::unordered_set<std::size_t> used;
    for (;;) {
        ++st.step;
        check_invariant(st.step <= ps.size(), "no more steps than pseudolines");
        auto incident = pseudolines_through(ps, st.mid_pt);
        if (done(incident, st)) {
            trace.push_back(st);
            return {st.mid_pt, std::move(incident)};
        }
        const std::size_t l3 = pick(incident, st);
        check_invariant(l3 != st.base && l3 != st.mid_side, "divider differs from the base and the P-R side");
        check_invariant(used.insert(l3).second, "dividing pseudoline never repeats");
        st.divider = l3;
        trace.push_back(st);

        const Point2 hit_left = intersect_pseudolines(ps[l3], ps[st.left_side]);
        const Point2 hit_right = intersect_pseudolines(ps[l3], ps[st.right_side]);
        const bool in_left = strictly_between(hit_left.x, st.left_pt.x, st.apex.x);
        const bool in_right = strictly_between(hit_right.x, st.apex.x, st.right_pt.x);
        check_invariant(in_left != in_right, "divider crosses exactly one open triangle side");

        TriangleState nx;
        nx.apex = st.mid_pt;
        nx.left_pt = st.apex;
        nx.left_side = st.mid_side;
        nx.right_side = st.base;
        nx.mid_side = l3;
        if (in_left) {
            nx.base = st.left_side;
            nx.right_pt = st.left_pt;
            nx.mid_pt = hit_left;
        } else {
            nx.base = st.right_side;
            nx.right_pt = st.right_pt;
            nx.mid_pt = hit_right;
        }
        nx.expected_color = st.expected_color;
        if (alternate_color && nx.expected_color) nx.expected_color = opposite(*nx.expected_color);
        nx.used_dividers = st.used_dividers;
        nx.used_dividers.push_back(l3);
        nx.step = st.step;
        st = std::move(nx);
    }
}

inline std::size_t lowest_other(const std::vector<std::size_t>& incident, std::size_t a, std::size_t b) {
    for (std::size_t i : incident)
        if (i != a && i != b) return i;
    throw Error(ErrorKind::Internal, "no third pseudoline through a non-ordinary point");
}

} // namespace detail

inline OrdinaryPseudoResult find_ordinary_pseudoline(std::span<const Pseudoline> ps, const PseudolineOptions& opt = {}) {
    if (ps.size() < 2) throw Error(ErrorKind::NotAnArrangement, "need at least two pseudolines");
    if (opt.validate) require_valid(ps, opt.max_segments);

    const std::size_t l0 = 0, l1 = 1;
    const Point2 p01 = intersect_pseudolines(ps[l0], ps[l1]);
    std::size_t l2 = 2;
    while (l2 < ps.size() && on_pseudoline(ps[l2], p01)) ++l2;
    if (l2 == ps.size()) throw Error(ErrorKind::AllConcurrent, "all pseudolines cross at one point");

    OrdinaryPseudoResult out;
    const Point2 p = intersect_pseudolines(ps[l1], ps[l2]);
    auto at_p = pseudolines_through(ps, p);
    if (at_p.size() == 2) {
        out.point = p;
        out.witnesses = {l1, l2};
        return out;
    }

    // Three pseudolines through P, ordered by where they meet L0.
    struct Foot {
        Point2 pt;
        std::size_t line;
    };
    std::vector<Foot> feet;
    for (std::size_t k = 0; k < 3; ++k) feet.push_back({intersect_pseudolines(ps[at_p[k]], ps[l0]), at_p[k]});
    std::sort(feet.begin(), feet.end(), [](const Foot& a, const Foot& b) { return ::cmp(a.pt.x, b.pt.x) < 0; });
    check_invariant(feet[0].pt.x != feet[1].pt.x && feet[1].pt.x != feet[2].pt.x,
                    "pseudolines through P meet the base at distinct points");

    TriangleState st;
    st.apex = p;
    st.base = l0;
    st.left_pt = feet[0].pt;
    st.left_side = feet[0].line;
    st.mid_pt = feet[1].pt;
    st.mid_side = feet[1].line;
    st.right_pt = feet[2].pt;
    st.right_side = feet[2].line;

    auto [pt, incident] = detail::shrink_triangle(
        ps, std::move(st), out.trace,
        [](const std::vector<std::size_t>& inc, const TriangleState&) { return inc.size() == 2; },
        [](const std::vector<std::size_t>& inc, const TriangleState& s) {
            return detail::lowest_other(inc, s.base, s.mid_side);
        },
        false);
    out.point = pt;
    out.witnesses = {incident[0], incident[1]};
    return out;
}

inline MonoResult find_monochromatic(std::span<const Pseudoline> ps, const PseudolineOptions& opt = {}) {
    if (ps.size() < 2) throw Error(ErrorKind::NotAnArrangement, "need at least two pseudolines");
    for (const auto& p : ps)
        if (!p.color) throw Error(ErrorKind::NotAnArrangement, "pseudoline " + std::to_string(p.id) + " has no color");
    if (opt.validate) require_valid(ps, opt.max_segments);

    auto color_of = [&](std::size_t i) { return *ps[i].color; };
    auto all_of_color = [&](const std::vector<std::size_t>& inc, Color c) {
        return std::all_of(inc.begin(), inc.end(), [&](std::size_t i) { return color_of(i) == c; });
    };
    auto first_of_color = [&](const std::vector<std::size_t>& inc, Color c) -> std::optional<std::size_t> {
        for (std::size_t i : inc)
            if (color_of(i) == c) return i;
        return std::nullopt;
    };

    MonoResult out;
    auto finish = [&](Point2 pt, Color c, std::vector<std::size_t> inc) {
        out.point = std::move(pt);
        out.color = c;
        out.witnesses = std::move(inc);
        return out;
    };

    const bool one_color =
        std::all_of(ps.begin(), ps.end(), [&](const Pseudoline& p) { return *p.color == *ps.front().color; });
    if (one_color) {
        Point2 pt = intersect_pseudolines(ps[0], ps[1]);
        auto inc = pseudolines_through(ps, pt);
        return finish(std::move(pt), color_of(0), std::move(inc));
    }

    // Role colors: `mine` is the color of L0, `other` the opposite one.
    const std::size_t l0 = 0;
    const Color mine = color_of(l0);
    const Color other = opposite(mine);

    std::optional<Point2> q, s;
    for (std::size_t k = 1; k < ps.size(); ++k) {
        Point2 c = intersect_pseudolines(ps[l0], ps[k]);
        if (!q || ::cmp(c.x, q->x) < 0) q = c;
        if (!s || ::cmp(c.x, s->x) > 0) s = c;
    }
    if (*q == *s) throw Error(ErrorKind::AllConcurrent, "all pseudolines cross at one point");

    auto at_q = pseudolines_through(ps, *q);
    auto red_q = first_of_color(at_q, other);
    if (!red_q) return finish(*q, mine, std::move(at_q));
    auto at_s = pseudolines_through(ps, *s);
    auto red_s = first_of_color(at_s, other);
    if (!red_s) return finish(*s, mine, std::move(at_s));

    const Point2 p = intersect_pseudolines(ps[*red_q], ps[*red_s]);
    auto at_p = pseudolines_through(ps, p);
    if (all_of_color(at_p, other)) return finish(p, other, std::move(at_p));

    const std::size_t l2 = *first_of_color(at_p, mine);
    const Point2 r = intersect_pseudolines(ps[l2], ps[l0]);
    check_invariant(::cmp(q->x, r.x) < 0 && ::cmp(r.x, s->x) < 0, "R lies strictly between Q and S");

    TriangleState st;
    st.apex = p;
    st.base = l0;
    st.left_pt = *q;
    st.left_side = *red_q;
    st.right_pt = *s;
    st.right_side = *red_s;
    st.mid_pt = r;
    st.mid_side = l2;
    st.expected_color = mine;

    auto [pt, incident] = detail::shrink_triangle(
        ps, std::move(st), out.trace,
        [&](const std::vector<std::size_t>& inc, const TriangleState& s2) {
            return all_of_color(inc, *s2.expected_color);
        },
        [&](const std::vector<std::size_t>& inc, const TriangleState& s2) {
            return *first_of_color(inc, opposite(*s2.expected_color));
        },
        true);
    const Color c = out.trace.back().expected_color.value();
    return finish(pt, c, std::move(incident));
}

} // namespace ordinary
