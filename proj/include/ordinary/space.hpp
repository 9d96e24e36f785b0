#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordinary/errors.hpp"
#include "ordinary/scalar.hpp"

namespace ordinary {

using Vector = std::vector<Scalar>;
using PointD = Vector;

/// Dimension cap. Per-step costs grow polynomially in d, so d stays small.
inline constexpr std::size_t kDefaultMaxDimension = 16;

inline void check_dimension(std::size_t d, std::size_t limit = kDefaultMaxDimension) {
    if (d == 0 || d > limit)
        throw Error(ErrorKind::DimensionMismatch,
                    "dimension " + std::to_string(d) + " outside [1, " + std::to_string(limit) + "]");
}

inline Scalar dot(const Vector& u, const Vector& v) {
    Scalar s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

inline bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& q) { return sgn(q) == 0; });
}

/// normal . x = offset, stored as a primitive integer vector (normal, offset)
/// whose first nonzero normal coordinate is positive.
class HyperplaneD {
public:
    const Vector& normal() const { return normal_; }
    const Scalar& offset() const { return offset_; }
    std::size_t dim() const { return normal_.size(); }
    /// Primitive integer normal; equal exactly for parallel hyperplanes.
    const Vector& direction() const { return direction_; }
    std::size_t id() const { return id_; }
    void set_id(std::size_t id) { id_ = id; }

    bool parallel_to(const HyperplaneD& o) const { return direction_ == o.direction_; }
    bool same_locus(const HyperplaneD& o) const { return normal_ == o.normal_ && offset_ == o.offset_; }
    bool contains(const PointD& p) const { return dot(normal_, p) == offset_; }

private:
    friend HyperplaneD canonical_hyperplane(const Vector&, const Scalar&, std::size_t);
    HyperplaneD() = default;

    Vector normal_;
    Vector direction_;
    Scalar offset_;
    std::size_t id_ = 0;
};

inline HyperplaneD canonical_hyperplane(const Vector& normal, const Scalar& offset, std::size_t id = 0) {
    if (normal.empty() || is_zero(normal)) throw Error(ErrorKind::DegenerateLine, "hyperplane with zero normal");
    Vector all = normal;
    all.push_back(offset);
    auto v = primitive_integer_vector(all);
    auto lead = std::find_if(v.begin(), v.end(), [](const Integer& z) { return z != 0; });
    if (*lead < 0)
        for (auto& z : v) z = -z;
    HyperplaneD h;
    h.normal_.reserve(normal.size());
    for (std::size_t i = 0; i + 1 < v.size(); ++i) h.normal_.emplace_back(v[i]);
    h.offset_ = Scalar(v.back());
    for (const auto& z : primitive_integer_vector(h.normal_)) h.direction_.emplace_back(z);
    h.id_ = id;
    return h;
}

/// General solution of A x = b: particular + span(nullspace). nullopt when inconsistent.
struct LinearSolution {
    Vector particular;
    std::vector<Vector> nullspace;
};

/// Reduced row echelon solve. A is row-major, rows.size() equations, `cols` unknowns.
inline std::optional<LinearSolution> solve_system(std::vector<Vector> rows, Vector rhs, std::size_t cols) {
    const std::size_t m = rows.size();
    for (std::size_t i = 0; i < m; ++i) rows[i].push_back(rhs[i]);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m; ++c) {
        std::size_t p = r;
        while (p < m && sgn(rows[p][c]) == 0) ++p;
        if (p == m) continue;
        std::swap(rows[p], rows[r]);
        Scalar inv = 1 / rows[r][c];
        for (auto& q : rows[r]) q *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            Scalar f = rows[i][c];
            for (std::size_t j = c; j <= cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (sgn(rows[i][cols]) != 0) return std::nullopt;

    LinearSolution sol;
    sol.particular.assign(cols, Scalar(0));
    for (std::size_t i = 0; i < r; ++i) sol.particular[pivots[i]] = rows[i][cols];
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols, Scalar(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = -rows[i][f];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

/// Common point of d hyperplanes in R^d; present iff their normals are independent.
inline std::optional<PointD> solve_point(std::span<const HyperplaneD> hs) {
    if (hs.empty()) throw Error(ErrorKind::DimensionMismatch, "solve_point needs d hyperplanes");
    const std::size_t d = hs.front().dim();
    if (hs.size() != d) throw Error(ErrorKind::DimensionMismatch, "solve_point needs exactly d hyperplanes");
    std::vector<Vector> rows;
    Vector rhs;
    for (const auto& h : hs) {
        if (h.dim() != d) throw Error(ErrorKind::DimensionMismatch, "mixed ambient dimensions");
        rows.push_back(h.normal());
        rhs.push_back(h.offset());
    }
    auto sol = solve_system(std::move(rows), std::move(rhs), d);
    if (!sol || !sol->nullspace.empty()) return std::nullopt;
    return std::move(sol->particular);
}

/// Indices (ascending) of a maximal linearly independent subset of `vs`.
///
/// Incremental scheme with a d x d working matrix: rows that reduce to zero are
/// discarded and refilled from the input, only the freshly added rows are
/// reduced, and the scan stops as soon as d independent rows are held. Every
/// input vector is touched at most once, so the cost is O(n) for fixed d.
inline std::vector<std::size_t> maximal_independent_subset(std::span<const Vector> vs) {
    std::vector<std::size_t> chosen;
    if (vs.empty()) return chosen;
    const std::size_t d = vs.front().size();
    for (const auto& v : vs)
        if (v.size() != d) throw Error(ErrorKind::DimensionMismatch, "vectors of different dimension");

    struct Row {
        Vector v;
        std::size_t pivot;
    };
    std::vector<Row> basis; // echelon rows, pivot entries normalized to 1
    basis.reserve(d);
    std::size_t next = 0;
    while (basis.size() < d && next < vs.size()) {
        // Refill the free slots of the working matrix, then reduce only those rows.
        const std::size_t free = d - basis.size();
        const std::size_t end = std::min(vs.size(), next + free);
        for (; next < end; ++next) {
            Vector r = vs[next];
            for (const auto& b : basis) {
                if (sgn(r[b.pivot]) == 0) continue;
                Scalar f = r[b.pivot];
                for (std::size_t j = 0; j < d; ++j) r[j] -= f * b.v[j];
            }
            auto it = std::find_if(r.begin(), r.end(), [](const Scalar& q) { return sgn(q) != 0; });
            if (it == r.end()) continue; // zero row: slot is refilled next round
            std::size_t p = static_cast<std::size_t>(it - r.begin());
            Scalar inv = 1 / r[p];
            for (auto& q : r) q *= inv;
            basis.push_back({std::move(r), p});
            chosen.push_back(next);
        }
    }
    return chosen;
}

/// base_point + span(directions); directions are linearly independent.
struct Flat {
    PointD base_point;
    std::vector<Vector> directions;

    std::size_t dim() const { return directions.size(); }
    std::size_t ambient() const { return base_point.size(); }

    PointD at(std::span<const Scalar> coords) const {
        PointD p = base_point;
        for (std::size_t k = 0; k < directions.size(); ++k)
            for (std::size_t i = 0; i < p.size(); ++i) p[i] += coords[k] * directions[k][i];
        return p;
    }
};

inline Flat whole_space(std::size_t d) {
    Flat f{Vector(d, Scalar(0)), {}};
    for (std::size_t i = 0; i < d; ++i) {
        Vector e(d, Scalar(0));
        e[i] = 1;
        f.directions.push_back(std::move(e));
    }
    return f;
}

inline Flat flat_of(const HyperplaneD& h) {
    const auto& n = h.normal();
    const std::size_t d = n.size();
    std::size_t j = 0;
    while (sgn(n[j]) == 0) ++j;
    Flat f{Vector(d, Scalar(0)), {}};
    f.base_point[j] = h.offset() / n[j];
    for (std::size_t i = 0; i < d; ++i) {
        if (i == j) continue;
        Vector dir(d, Scalar(0));
        dir[i] = 1;
        dir[j] = -n[i] / n[j];
        f.directions.push_back(std::move(dir));
    }
    return f;
}

/// Affine intersection; a point comes back as a Flat with no directions.
inline std::optional<Flat> intersect_flats(const Flat& f1, const Flat& f2) {
    const std::size_t d = f1.ambient();
    if (f2.ambient() != d) throw Error(ErrorKind::DimensionMismatch, "flats in different ambient spaces");
    const std::size_t k1 = f1.dim(), k2 = f2.dim();
    // f1.base + D1 s = f2.base + D2 t
    std::vector<Vector> rows(d, Vector(k1 + k2));
    Vector rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t a = 0; a < k1; ++a) rows[i][a] = f1.directions[a][i];
        for (std::size_t b = 0; b < k2; ++b) rows[i][k1 + b] = -f2.directions[b][i];
        rhs[i] = f2.base_point[i] - f1.base_point[i];
    }
    auto sol = solve_system(std::move(rows), std::move(rhs), k1 + k2);
    if (!sol) return std::nullopt;
    Flat out{f1.at(std::span<const Scalar>(sol->particular.data(), k1)), {}};
    // Null vectors project injectively onto their s-part since D1 and D2 have independent columns.
    for (const auto& nv : sol->nullspace) {
        Vector dir(d, Scalar(0));
        for (std::size_t a = 0; a < k1; ++a)
            for (std::size_t i = 0; i < d; ++i) dir[i] += nv[a] * f1.directions[a][i];
        out.directions.push_back(std::move(dir));
    }
    return out;
}

/// Solves for affine coordinates of p in f.
inline bool flat_contains(const Flat& f, const PointD& p) {
    const std::size_t d = f.ambient();
    std::vector<Vector> rows(d, Vector(f.dim()));
    Vector rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < f.dim(); ++k) rows[i][k] = f.directions[k][i];
        rhs[i] = p[i] - f.base_point[i];
    }
    return solve_system(std::move(rows), std::move(rhs), f.dim()).has_value();
}

} // namespace ordinary
