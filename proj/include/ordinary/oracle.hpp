#pragma once

// Brute-force ground truth. Quadratic (or C(n, d)) enumeration; desk scale only.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ordinary/errors.hpp"
#include "ordinary/hyperplanes.hpp"
#include "ordinary/plane.hpp"
#include "ordinary/pseudolines.hpp"
#include "ordinary/space.hpp"

namespace ordinary::oracle {

template <class P>
struct IncidenceEntry {
    P point;
    std::vector<std::size_t> incident; // sorted, size >= 2
};

template <class P>
using IncidenceMap = std::vector<IncidenceEntry<P>>;

using IncidenceMap2 = IncidenceMap<Point2>;
using IncidenceMapD = IncidenceMap<PointD>;

struct VectorLess {
    bool operator()(const Vector& u, const Vector& v) const { return lex_less(u, v); }
};

inline IncidenceMap2 enumerate_2d(std::span<const Line2> lines) {
    std::map<Point2, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (auto p = intersect_lines(lines[i], lines[j])) {
                auto& v = groups[*p];
                v.push_back(i);
                v.push_back(j);
            }
    IncidenceMap2 out;
    for (auto& [p, v] : groups) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        out.push_back({p, std::move(v)});
    }
    return out;
}

inline IncidenceMap2 enumerate_2d(std::span<const Pseudoline> ps) {
    std::map<Point2, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            Crossing c = try_intersect(ps[i], ps[j]);
            if (c.status != CrossingStatus::Single)
                throw Error(ErrorKind::InvalidArrangement, "pseudolines " + std::to_string(i) + " and " +
                                                               std::to_string(j) + " do not cross exactly once");
            auto& v = groups[c.point];
            v.push_back(i);
            v.push_back(j);
        }
    IncidenceMap2 out;
    for (auto& [p, v] : groups) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        out.push_back({p, std::move(v)});
    }
    return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (std::uint64_t{1} << 62)) return r;
    }
    return r;
}

inline constexpr std::uint64_t kSubsetCap = 10'000'000;

template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        visit(std::span<const std::size_t>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Every d-subset with independent normals, grouped by point; incidences are
/// recounted against all hyperplanes.
inline IncidenceMapD enumerate_nd(std::span<const HyperplaneD> hs, std::uint64_t cap = kSubsetCap) {
    if (hs.empty()) return {};
    const std::size_t d = hs.front().dim();
    if (binomial(hs.size(), d) > cap) throw Error(ErrorKind::SpecInfeasible, "enumerate_nd: C(n, d) above cap");
    std::map<PointD, bool, VectorLess> points;
    std::vector<HyperplaneD> sub;
    for_each_subset(hs.size(), d, [&](std::span<const std::size_t> idx) {
        sub.clear();
        for (auto i : idx) sub.push_back(hs[i]);
        if (auto p = solve_point(sub)) points.emplace(std::move(*p), true);
    });
    IncidenceMapD out;
    for (auto& [p, _] : points) {
        IncidenceEntry<PointD> e{p, {}};
        for (std::size_t i = 0; i < hs.size(); ++i)
            if (hs[i].contains(p)) e.incident.push_back(i);
        out.push_back(std::move(e));
    }
    return out;
}

struct Classification {
    std::size_t ordinary_count = 0;
    std::vector<std::size_t> degrees;          // per entry
    std::vector<std::size_t> monochromatic_red; // entry indices
    std::vector<std::size_t> monochromatic_blue;
};

/// `ordinary_degree` is 2 in the plane, d for hyperplanes.
template <class P>
Classification classify(const IncidenceMap<P>& map, std::size_t ordinary_degree,
                        std::span<const std::optional<Color>> colors = {}) {
    Classification c;
    for (std::size_t k = 0; k < map.size(); ++k) {
        const auto& inc = map[k].incident;
        c.degrees.push_back(inc.size());
        if (inc.size() == ordinary_degree) ++c.ordinary_count;
        if (colors.empty()) continue;
        auto first = colors[inc.front()];
        if (!first) continue;
        bool mono = std::all_of(inc.begin(), inc.end(), [&](std::size_t i) { return colors[i] == first; });
        if (mono) (*first == Color::Red ? c.monochromatic_red : c.monochromatic_blue).push_back(k);
    }
    return c;
}

template <class Elem>
std::vector<std::optional<Color>> colors_of(std::span<const Elem> xs) {
    std::vector<std::optional<Color>> out;
    for (const auto& x : xs) {
        if constexpr (requires { x.color(); })
            out.push_back(x.color());
        else
            out.push_back(x.color);
    }
    return out;
}

/// Lower bound on ordinary crossings among n >= 7 lines, not all parallel or concurrent.
inline std::size_t lenchner_bound(std::size_t n) { return (2 * n - 3 + 6) / 7; }

inline std::vector<std::size_t> incident_lines(std::span<const Line2> lines, const Point2& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (on_line(lines[i], p)) out.push_back(i);
    return out;
}

inline std::vector<std::size_t> incident_hyperplanes(std::span<const HyperplaneD> hs, const PointD& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < hs.size(); ++i)
        if (hs[i].contains(p)) out.push_back(i);
    return out;
}

/// Rank by plain Gaussian elimination over all vectors.
inline std::size_t rank_by_elimination(std::vector<Vector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][c]) == 0) continue;
            Scalar f = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

struct HypothesisReport {
    std::size_t normal_rank = 0;
    bool not_all_parallel = false;
    bool common_point_exists = false;                        // all hyperplanes share a point
    std::vector<std::vector<std::size_t>> d_through_a_line; // witnesses, capped
    std::size_t d_through_a_line_count = 0;

    bool no_d_through_a_line() const { return d_through_a_line_count == 0; }
    bool all_hold() const { return not_all_parallel && !common_point_exists && no_d_through_a_line(); }
};

namespace detail {

/// Incremental echelon form of an augmented system [normal | offset].
class Echelon {
public:
    explicit Echelon(std::size_t d) : d_(d) {}

    /// false when the row makes the system inconsistent.
    bool push(const HyperplaneD& h) {
        Vector r = h.normal();
        r.push_back(h.offset());
        for (const auto& [row, piv] : rows_) {
            if (sgn(r[piv]) == 0) continue;
            Scalar f = r[piv];
            for (std::size_t j = 0; j <= d_; ++j) r[j] -= f * row[j];
        }
        std::size_t p = 0;
        while (p < d_ && sgn(r[p]) == 0) ++p;
        if (p == d_) {
            history_.push_back(false);
            return sgn(r[d_]) == 0;
        }
        Scalar inv = 1 / r[p];
        for (auto& q : r) q *= inv;
        rows_.push_back({std::move(r), p});
        history_.push_back(true);
        return true;
    }

    void pop() {
        if (history_.back()) rows_.pop_back();
        history_.pop_back();
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t d_;
    std::vector<std::pair<Vector, std::size_t>> rows_;
    std::vector<bool> history_;
};

} // namespace detail

/// Exhaustive check of: not all parallel, not all through one point, and no d
/// hyperplanes containing a common line. Inconsistent partial subsets prune
/// their whole subtree.
inline HypothesisReport check_hypotheses_nd(std::span<const HyperplaneD> hs, std::size_t keep = 16) {
    HypothesisReport rep;
    if (hs.empty()) return rep;
    const std::size_t d = hs.front().dim();
    std::vector<Vector> normals;
    for (const auto& h : hs) normals.push_back(h.normal());
    rep.normal_rank = rank_by_elimination(normals);
    for (std::size_t i = 1; i < hs.size() && !rep.not_all_parallel; ++i)
        if (!hs[i].parallel_to(hs[0])) rep.not_all_parallel = true;
    {
        detail::Echelon all(d);
        bool consistent = true;
        for (const auto& h : hs) consistent = consistent && all.push(h);
        rep.common_point_exists = consistent;
    }
    detail::Echelon ech(d);
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        if (chosen.size() == d) {
            if (ech.rank() < d) {
                ++rep.d_through_a_line_count;
                if (rep.d_through_a_line.size() < keep) rep.d_through_a_line.push_back(chosen);
            }
            return;
        }
        for (std::size_t i = start; i + (d - chosen.size()) <= hs.size(); ++i) {
            const bool ok = ech.push(hs[i]);
            if (ok) {
                chosen.push_back(i);
                dfs(i + 1);
                chosen.pop_back();
            }
            ech.pop();
        }
    };
    if (hs.size() >= d) dfs(0);
    return rep;
}

} // namespace ordinary::oracle
