#pragma once

// Ordinary intersection (a point on exactly d hyperplanes) in R^d, reduced to
// the planar algorithm on a 2-flat cut out by d-2 pairwise non-parallel
// hyperplanes with independent normals.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "ordinary/arrangement2d.hpp"
#include "ordinary/errors.hpp"
#include "ordinary/space.hpp"

namespace ordinary {

struct FamilyPartition {
    std::vector<std::vector<std::size_t>> families; // lexicographic by normal; members in input order
    std::vector<Vector> family_normals;
};

inline bool lex_less(const Vector& u, const Vector& v) {
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(),
                                        [](const Scalar& p, const Scalar& q) { return ::cmp(p, q) < 0; });
}

inline FamilyPartition partition_families(std::span<const HyperplaneD> hs) {
    std::vector<std::size_t> order(hs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (lex_less(hs[i].direction(), hs[j].direction())) return true;
        if (lex_less(hs[j].direction(), hs[i].direction())) return false;
        if (lex_less(hs[i].normal(), hs[j].normal())) return true;
        if (lex_less(hs[j].normal(), hs[i].normal())) return false;
        if (int c = ::cmp(hs[i].offset(), hs[j].offset()); c != 0) return c < 0;
        return i < j;
    });
    FamilyPartition out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const HyperplaneD& h = hs[order[k]];
        if (k > 0 && h.same_locus(hs[order[k - 1]]))
            throw Error(ErrorKind::DuplicateHyperplane, "duplicate hyperplane at indices " +
                                                            std::to_string(order[k - 1]) + " and " +
                                                            std::to_string(order[k]));
        if (k == 0 || !h.parallel_to(hs[order[k - 1]])) {
            out.families.emplace_back();
            out.family_normals.push_back(h.direction());
        }
        out.families.back().push_back(order[k]);
    }
    for (auto& f : out.families) std::sort(f.begin(), f.end());
    return out;
}

enum class ProvenanceND { Case3OnM, Case2ThenMPrime };

inline std::string_view to_string(ProvenanceND p) {
    return p == ProvenanceND::Case3OnM ? "case3_on_M" : "case2_then_M'";
}

struct OrdinaryResultND {
    PointD point;
    std::vector<std::size_t> witnesses; // d-2 constituents of the 2-flat, then the two trace sources
    ProvenanceND provenance = ProvenanceND::Case3OnM;
    std::size_t skipped_empty_traces = 0;
    Flat plane; // the 2-flat the planar search ran on
};

/// Verdict: the normals do not span R^d, so no d hyperplanes meet in a point.
struct NoIntersectionPoint {
    std::size_t normal_rank = 0;
};

using NdOutcome = std::variant<OrdinaryResultND, NoIntersectionPoint>;

namespace detail {

struct Traced {
    std::vector<Line2> lines; // coordinates along plane.directions
    std::vector<std::size_t> source;
    std::size_t skipped = 0;
};

inline Flat plane_of(std::span<const HyperplaneD> hs, std::span<const std::size_t> constituents) {
    Flat m = whole_space(hs.front().dim());
    for (std::size_t c : constituents) {
        auto next = intersect_flats(m, flat_of(hs[c]));
        check_invariant(next.has_value(), "constituents of the 2-flat meet");
        m = std::move(*next);
    }
    check_invariant(m.dim() == 2, "constituent flat is two-dimensional");
    return m;
}

inline Traced trace_on(const Flat& plane, std::span<const HyperplaneD> hs, std::span<const std::size_t> members) {
    Traced t;
    for (std::size_t h : members) {
        const Vector& n = hs[h].normal();
        Scalar alpha = dot(n, plane.directions[0]);
        Scalar beta = dot(n, plane.directions[1]);
        Scalar gamma = hs[h].offset() - dot(n, plane.base_point);
        if (sgn(alpha) == 0 && sgn(beta) == 0) {
            if (sgn(gamma) == 0)
                throw Error(ErrorKind::HypothesisViolated,
                            "hyperplane " + std::to_string(h) + " contains the whole 2-flat");
            ++t.skipped; // misses the 2-flat, cannot touch any point found on it
            continue;
        }
        t.lines.push_back(canonical_line(alpha, beta, gamma, std::nullopt, h));
        t.source.push_back(h);
    }
    std::vector<std::size_t> order(t.lines.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return locus_order(t.lines[i], t.lines[j]) < 0; });
    for (std::size_t k = 1; k < order.size(); ++k)
        if (t.lines[order[k - 1]].same_locus(t.lines[order[k]]))
            throw Error(ErrorKind::HypothesisViolated, "hyperplanes " + std::to_string(t.source[order[k - 1]]) +
                                                           " and " + std::to_string(t.source[order[k]]) +
                                                           " trace the same line: d hyperplanes share a line");
    return t;
}

/// True when there are at least three traces and all pass through one point.
/// Throws an invariant failure when every trace is parallel (impossible once
/// the normals span R^d).
inline bool all_concurrent(const std::vector<Line2>& lines) {
    std::size_t j = 1;
    while (j < lines.size() && lines[0].parallel_to(lines[j])) ++j;
    check_invariant(j < lines.size(), "traces on the 2-flat are not all parallel");
    if (lines.size() < 3) return false;
    const Point2 p = *intersect_lines(lines[0], lines[j]);
    return std::all_of(lines.begin(), lines.end(), [&](const Line2& l) { return on_line(l, p); });
}

} // namespace detail

inline NdOutcome find_ordinary_point_nd(std::span<const HyperplaneD> hs) {
    if (hs.empty()) throw Error(ErrorKind::NotAnArrangement, "empty hyperplane arrangement");
    const std::size_t d = hs.front().dim();
    check_dimension(d);
    for (const auto& h : hs)
        if (h.dim() != d) throw Error(ErrorKind::DimensionMismatch, "hyperplanes of mixed dimension");
    if (d < 2 || hs.size() < d)
        throw Error(ErrorKind::NotAnArrangement, "need n >= d >= 2 hyperplanes");

    const FamilyPartition part = partition_families(hs);
    const std::vector<std::size_t> basis = maximal_independent_subset(part.family_normals);
    if (basis.size() < d) return NoIntersectionPoint{basis.size()};

    if (d == 2) {
        std::vector<Line2> lines;
        lines.reserve(hs.size());
        for (std::size_t i = 0; i < hs.size(); ++i)
            lines.push_back(canonical_line(hs[i].normal()[0], hs[i].normal()[1], hs[i].offset(), std::nullopt, i));
        auto r = find_ordinary_point_2d(lines);
        return OrdinaryResultND{{r.point.x, r.point.y}, {r.witnesses[0], r.witnesses[1]}, ProvenanceND::Case3OnM, 0,
                                whole_space(2)};
    }

    std::vector<std::size_t> constituents;
    std::vector<bool> in_plane_family(part.families.size(), false);
    for (std::size_t t = 0; t + 2 < d; ++t) {
        constituents.push_back(part.families[basis[t]].front());
        in_plane_family[basis[t]] = true;
    }
    std::vector<std::size_t> remaining;
    for (std::size_t f = 0; f < part.families.size(); ++f)
        if (!in_plane_family[f])
            remaining.insert(remaining.end(), part.families[f].begin(), part.families[f].end());

    Flat plane = detail::plane_of(hs, constituents);
    detail::Traced traced = detail::trace_on(plane, hs, remaining);
    ProvenanceND prov = ProvenanceND::Case3OnM;
    std::size_t skipped = traced.skipped;

    if (detail::all_concurrent(traced.lines)) {
        // Swap in a parallel translate of one constituent to get a parallel 2-flat.
        bool swapped = false;
        for (std::size_t t = 0; t + 2 < d && !swapped; ++t) {
            const auto& fam = part.families[basis[t]];
            if (fam.size() >= 2) {
                constituents[t] = fam[1];
                swapped = true;
            }
        }
        if (!swapped) throw Error(ErrorKind::AllConcurrent, "all hyperplanes pass through one point");
        plane = detail::plane_of(hs, constituents);
        traced = detail::trace_on(plane, hs, remaining);
        skipped += traced.skipped;
        if (detail::all_concurrent(traced.lines))
            throw Error(ErrorKind::HypothesisViolated, "traces concurrent on both parallel 2-flats: d hyperplanes share a line");
        prov = ProvenanceND::Case2ThenMPrime;
    }

    auto r = find_ordinary_point_2d(traced.lines);
    OrdinaryResultND out;
    out.point = plane.at(std::vector<Scalar>{r.point.x, r.point.y});
    out.witnesses = constituents;
    out.witnesses.push_back(traced.source[r.witnesses[0]]);
    out.witnesses.push_back(traced.source[r.witnesses[1]]);
    out.provenance = prov;
    out.skipped_empty_traces = skipped;
    out.plane = std::move(plane);
    return out;
}

} // namespace ordinary
