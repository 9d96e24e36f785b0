#pragma once

// Test-side reference computations, kept apart from the library's own oracle.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <ordinary.hpp>

namespace testing_support {

using namespace ordinary;

inline Line2 L(long a, long b, long c) { return canonical_line(Scalar(a), Scalar(b), Scalar(c)); }

/// y = m x + k as a line.
inline Line2 slope_line(const Scalar& m, const Scalar& k) { return canonical_line(m, Scalar(-1), Scalar(-k)); }

inline Point2 P(long x, long y) { return {Scalar(x), Scalar(y)}; }

inline Scalar Q(const char* s) { return parse_scalar(s); }

inline HyperplaneD H(std::vector<long> normal, long offset) {
    Vector n;
    for (long v : normal) n.emplace_back(v);
    return canonical_hyperplane(n, Scalar(offset));
}

/// Fraction-free (Bareiss) rank over integers after clearing denominators.
inline std::size_t bareiss_rank(const std::vector<Vector>& rows_in) {
    if (rows_in.empty()) return 0;
    std::vector<std::vector<Integer>> m;
    for (const auto& r : rows_in) m.push_back(primitive_integer_vector(r));
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

/// Crossing by Cramer's rule on the raw coefficients.
inline std::optional<Point2> cramer(const Line2& l, const Line2& m) {
    Scalar det = l.a() * m.b() - l.b() * m.a();
    if (det == 0) return std::nullopt;
    return Point2{Scalar((l.c() * m.b() - l.b() * m.c()) / det), Scalar((l.a() * m.c() - l.c() * m.a()) / det)};
}

/// Point -> number of lines through it, by pairwise crossings and direct counting.
inline std::map<Point2, std::size_t> degrees_2d(std::span<const Line2> ls) {
    std::map<Point2, std::size_t> out;
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j)
            if (auto p = cramer(ls[i], ls[j]); p && !out.count(*p)) {
                std::size_t k = 0;
                for (const auto& l : ls) k += l.a() * p->x + l.b() * p->y == l.c();
                out[*p] = k;
            }
    return out;
}

/// Value of a pseudoline at x, walking the vertex list linearly.
inline Scalar walk_eval(const Pseudoline& p, const Scalar& x) {
    const auto& v = p.vertices;
    if (x <= v.front().x) return v.front().y + p.left_slope * (x - v.front().x);
    for (std::size_t i = 1; i < v.size(); ++i)
        if (x <= v[i].x) return v[i - 1].y + (v[i].y - v[i - 1].y) / (v[i].x - v[i - 1].x) * (x - v[i - 1].x);
    return v.back().y + p.right_slope * (x - v.back().x);
}

inline std::size_t count_through(std::span<const Pseudoline> ps, const Point2& pt) {
    std::size_t k = 0;
    for (const auto& p : ps) k += walk_eval(p, pt.x) == pt.y;
    return k;
}

inline std::size_t count_through(std::span<const HyperplaneD> hs, const PointD& pt) {
    std::size_t k = 0;
    for (const auto& h : hs) {
        Scalar s = 0;
        for (std::size_t i = 0; i < pt.size(); ++i) s += h.normal()[i] * pt[i];
        k += s == h.offset();
    }
    return k;
}

/// Reorders so that pseudolines 1 and 2 meet at a point of degree >= 3 and
/// pseudoline 0 avoids it, forcing the triangle search to run. Unchanged if
/// there is no such point.
inline std::vector<Pseudoline> lead_with_multiple_point(std::vector<Pseudoline> ps) {
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            auto c = try_intersect(ps[i], ps[j]);
            if (c.status != CrossingStatus::Single || count_through(ps, c.point) < 3) continue;
            std::size_t off = 0;
            while (off < ps.size() && walk_eval(ps[off], c.point.x) == c.point.y) ++off;
            if (off == ps.size()) return ps;
            std::vector<Pseudoline> out{ps[off], ps[i], ps[j]};
            for (std::size_t k = 0; k < ps.size(); ++k)
                if (k != off && k != i && k != j) out.push_back(ps[k]);
            for (std::size_t k = 0; k < out.size(); ++k) out[k].id = k;
            return out;
        }
    return ps;
}

} // namespace testing_support
