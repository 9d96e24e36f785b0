#pragma once

// Seeded arrangement generators. Degenerate features (bundles, parallel
// families, concurrent traces, biased colorings) are built in directly so the
// algorithms' rarer branches get guaranteed coverage.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordinary/arrangement2d.hpp"
#include "ordinary/errors.hpp"
#include "ordinary/hyperplanes.hpp"
#include "ordinary/oracle.hpp"
#include "ordinary/plane.hpp"
#include "ordinary/pseudolines.hpp"
#include "ordinary/space.hpp"

namespace ordinary {

/// SplitMix64 (Steele, Lea, Flood): 64-bit state advanced by the golden-ratio
/// increment, output through two xor-shift-multiply rounds. Bounded draws use
/// rejection so results do not depend on the standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// true with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <class T>
    void shuffle(std::vector<T>& v, std::size_t from = 0) {
        for (std::size_t i = v.size(); i > from + 1; --i) {
            std::size_t j = from + static_cast<std::size_t>(below(i - from));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

enum class GenKind { Random, Grid, NearPencil, PencilPlus, WiringDiagram, Bichromatic, Biased };
enum class GenTarget { Auto, Lines, Hyperplanes, Pseudolines };

inline std::string_view to_string(GenKind k) {
    switch (k) {
    case GenKind::Random: return "random";
    case GenKind::Grid: return "grid";
    case GenKind::NearPencil: return "near_pencil";
    case GenKind::PencilPlus: return "pencil_plus";
    case GenKind::WiringDiagram: return "wiring_diagram";
    case GenKind::Bichromatic: return "bichromatic";
    case GenKind::Biased: return "biased";
    }
    return "?";
}

inline GenKind parse_gen_kind(std::string_view s) {
    for (auto k : {GenKind::Random, GenKind::Grid, GenKind::NearPencil, GenKind::PencilPlus, GenKind::WiringDiagram,
                   GenKind::Bichromatic, GenKind::Biased})
        if (to_string(k) == s) return k;
    throw Error(ErrorKind::Parse, "unknown generator kind '" + std::string(s) + "'");
}

struct GenSpec {
    GenKind kind = GenKind::Random;
    std::size_t n = 8;
    std::size_t d = 2;
    std::uint64_t seed = 0;
    std::size_t max_bundle_size = 4;       // largest injected concurrency
    std::size_t parallel_family_count = 0; // injected parallel families / base-parallel lines
    double color_bias = 0.5;               // fraction of red pseudolines; biased: minority color has no mono points
    std::size_t normal_rank = 0;           // hyperplanes: cap on the rank of the normals (0 = full)
    std::int64_t lattice = 64;             // coordinate bound for random draws
    bool straight = false;                 // bichromatic/biased: straight-line realization
    GenTarget target = GenTarget::Auto;
};

using Arrangement = std::variant<std::vector<Line2>, std::vector<HyperplaneD>, std::vector<Pseudoline>>;

namespace gen_detail {

inline void infeasible(const std::string& why) { throw Error(ErrorKind::SpecInfeasible, why); }

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

/// Random primitive direction (p, q), q > 0, i.e. never horizontal.
inline std::pair<std::int64_t, std::int64_t> direction(SplitMix64& rng, std::int64_t bound) {
    for (;;) {
        std::int64_t p = rng.range(-bound, bound);
        std::int64_t q = rng.range(1, bound);
        if (gcd64(p, q) == 1) return {p, q};
    }
}

/// Collects distinct lines, ignoring repeats.
class LineSet {
public:
    bool add(Line2 l) {
        auto key = std::make_tuple(l.a(), l.b(), l.c());
        if (!seen_.insert(key).second) return false;
        lines_.push_back(std::move(l));
        return true;
    }
    std::size_t size() const { return lines_.size(); }
    std::vector<Line2>& lines() { return lines_; }

private:
    struct Less {
        bool operator()(const std::tuple<Scalar, Scalar, Scalar>& x, const std::tuple<Scalar, Scalar, Scalar>& y) const {
            if (int c = ::cmp(std::get<0>(x), std::get<0>(y)); c != 0) return c < 0;
            if (int c = ::cmp(std::get<1>(x), std::get<1>(y)); c != 0) return c < 0;
            return ::cmp(std::get<2>(x), std::get<2>(y)) < 0;
        }
    };
    std::set<std::tuple<Scalar, Scalar, Scalar>, Less> seen_;
    std::vector<Line2> lines_;
};

inline Line2 through(std::int64_t px, std::int64_t py, std::pair<std::int64_t, std::int64_t> dir) {
    auto [p, q] = dir;
    return canonical_line(Scalar(q), Scalar(-p), Scalar(q * px - p * py));
}

inline void renumber(std::vector<Line2>& ls) {
    for (std::size_t i = 0; i < ls.size(); ++i) ls[i].set_id(i);
}

inline std::vector<Line2> random_lines(const GenSpec& s, SplitMix64& rng) {
    if (s.n < 3) infeasible("random line arrangement needs n >= 3");
    const std::int64_t L = std::max<std::int64_t>(s.lattice, 2);
    LineSet set;
    const std::size_t bundle = std::max<std::size_t>(s.max_bundle_size, 2);
    if (bundle >= 3) {
        const std::size_t count = std::max<std::size_t>(1, s.n / (2 * bundle));
        for (std::size_t b = 0; b < count && set.size() + 3 <= s.n; ++b) {
            std::int64_t px = rng.range(-L, L), py = rng.range(-L, L);
            std::size_t k = static_cast<std::size_t>(rng.range(3, static_cast<std::int64_t>(bundle)));
            for (std::size_t i = 0; i < k && set.size() < s.n; ++i) set.add(through(px, py, direction(rng, L)));
        }
    }
    for (std::size_t f = 0; f < s.parallel_family_count && set.size() + 2 <= s.n; ++f) {
        auto dir = rng.chance(1, 4) ? std::pair<std::int64_t, std::int64_t>{1, 0} : direction(rng, L);
        std::size_t k = static_cast<std::size_t>(
            rng.range(2, std::max<std::int64_t>(2, static_cast<std::int64_t>(s.n / (2 * s.parallel_family_count)))));
        for (std::size_t i = 0; i < k && set.size() < s.n; ++i) set.add(through(0, rng.range(-L, L), dir));
    }
    while (set.size() < s.n) {
        std::int64_t a = rng.range(-L, L), b = rng.range(-L, L);
        if (a == 0 && b == 0) continue;
        set.add(canonical_line(Scalar(a), Scalar(b), Scalar(rng.range(-L * L, L * L))));
    }
    auto out = std::move(set.lines());
    rng.shuffle(out);
    return out;
}

inline std::vector<Line2> grid_lines(const GenSpec& s) {
    if (s.n < 2) infeasible("grid needs n >= 2");
    std::vector<Line2> out;
    const std::size_t vertical = (s.n + 1) / 2;
    for (std::size_t i = 0; i < vertical; ++i) out.push_back(canonical_line(1, 0, Scalar(static_cast<long>(i))));
    for (std::size_t i = 0; i < s.n - vertical; ++i) out.push_back(canonical_line(0, 1, Scalar(static_cast<long>(i))));
    return out;
}

/// Slopes 1, -1, 2, -2, ... through the origin, then y = 1.
inline std::vector<Line2> near_pencil_lines(const GenSpec& s) {
    if (s.n < 3) infeasible("near pencil needs n >= 3");
    std::vector<Line2> out;
    for (std::size_t i = 0; i + 1 < s.n; ++i) {
        long m = static_cast<long>(i / 2 + 1) * (i % 2 == 0 ? 1 : -1);
        out.push_back(canonical_line(Scalar(m), Scalar(-1), Scalar(0)));
    }
    out.push_back(canonical_line(0, 1, 1));
    return out;
}

/// Base y = 0 at index 0, every other non-parallel line in a bundle of size >= 2
/// on the base, plus `parallel_family_count` base-parallel lines. The first two
/// of those pass through the lowest crossing above and the highest below.
inline std::vector<Line2> pencil_plus_lines(const GenSpec& s, SplitMix64& rng) {
    const std::size_t parallels = s.parallel_family_count;
    if (s.n < 5 + parallels) infeasible("pencil_plus needs n >= 5 + parallel_family_count");
    const std::size_t budget = s.n - 1 - parallels;
    const std::size_t bmax = std::max<std::size_t>(2, s.max_bundle_size);
    std::vector<std::size_t> sizes;
    std::size_t used = 0;
    while (used < budget) {
        std::size_t k = static_cast<std::size_t>(rng.range(2, static_cast<std::int64_t>(bmax)));
        if (budget - used < k + 2) k = budget - used;
        sizes.push_back(k);
        used += k;
    }
    if (sizes.size() < 2) {
        std::size_t half = sizes[0] / 2;
        sizes = {half, sizes[0] - half};
    }
    const std::int64_t L = std::max<std::int64_t>(s.lattice, static_cast<std::int64_t>(2 * sizes.size()));
    std::set<std::int64_t> xs;
    while (xs.size() < sizes.size()) xs.insert(rng.range(-L, L));

    LineSet set;
    set.add(canonical_line(0, 1, 0));
    auto xit = xs.begin();
    for (std::size_t b = 0; b < sizes.size(); ++b, ++xit) {
        std::size_t added = 0;
        while (added < sizes[b])
            if (set.add(through(*xit, 0, direction(rng, std::max<std::int64_t>(4, static_cast<std::int64_t>(sizes[b]))))))
                ++added;
    }
    std::optional<Scalar> low_above, high_below;
    const auto& ls = set.lines();
    for (std::size_t i = 1; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j) {
            auto p = intersect_lines(ls[i], ls[j]);
            if (!p) continue;
            if (sgn(p->y) > 0 && (!low_above || ::cmp(p->y, *low_above) < 0)) low_above = p->y;
            if (sgn(p->y) < 0 && (!high_below || ::cmp(p->y, *high_below) > 0)) high_below = p->y;
        }
    std::vector<Scalar> heights;
    if (parallels >= 1 && low_above) heights.push_back(*low_above);
    if (parallels >= 2 && high_below) heights.push_back(*high_below);
    std::size_t tries = 0;
    while (heights.size() < parallels) {
        Scalar h(rng.range(-L, L), static_cast<unsigned long>(rng.range(1, 4)));
        h.canonicalize();
        if (sgn(h) == 0 || std::find(heights.begin(), heights.end(), h) != heights.end()) continue;
        if (++tries > 100000) infeasible("could not place base-parallel lines");
        heights.push_back(h);
    }
    for (const auto& h : heights) set.add(canonical_line(0, 1, h));
    auto out = std::move(set.lines());
    if (out.size() != s.n) infeasible("pencil_plus produced a different line count");
    rng.shuffle(out, 1);
    return out;
}

inline bool lines_ok(std::span<const Line2> ls) {
    auto ts = search_triple(ls);
    return ts.triple || ts.failure == TripleFailure::TwoFamilies;
}

// ---- hyperplanes ----

inline Vector random_normal(SplitMix64& rng, std::size_t d, std::int64_t L, bool lead_positive) {
    for (;;) {
        Vector v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = rng.range(-L, L);
        if (lead_positive) v[0] = rng.range(1, L);
        if (!is_zero(v)) return v;
    }
}

inline void renumber(std::vector<HyperplaneD>& hs) {
    for (std::size_t i = 0; i < hs.size(); ++i) hs[i].set_id(i);
}

/// Rejects repeats by canonical form.
class HyperplaneSet {
public:
    bool add(HyperplaneD h) {
        Vector key = h.normal();
        key.push_back(h.offset());
        if (!seen_.insert(key).second) return false;
        hs_.push_back(std::move(h));
        return true;
    }
    std::size_t size() const { return hs_.size(); }
    std::vector<HyperplaneD>& items() { return hs_; }

private:
    std::set<Vector, oracle::VectorLess> seen_;
    std::vector<HyperplaneD> hs_;
};

inline std::vector<HyperplaneD> random_hyperplanes(const GenSpec& s, SplitMix64& rng) {
    const std::size_t d = s.d;
    const std::int64_t L = std::max<std::int64_t>(s.lattice, 2);
    const std::size_t rank = s.normal_rank == 0 ? d : std::min(s.normal_rank, d);
    std::vector<Vector> span_basis;
    for (std::size_t i = 0; i < rank; ++i) span_basis.push_back(random_normal(rng, d, L, false));
    auto draw_normal = [&]() {
        if (rank == d) return random_normal(rng, d, L, false);
        for (;;) {
            Vector v(d, Scalar(0));
            for (const auto& b : span_basis) {
                Scalar c(rng.range(-3, 3));
                for (std::size_t i = 0; i < d; ++i) v[i] += c * b[i];
            }
            if (!is_zero(v)) return v;
        }
    };
    HyperplaneSet set;
    for (std::size_t f = 0; f < s.parallel_family_count && set.size() + 2 <= s.n; ++f) {
        Vector nrm = draw_normal();
        std::size_t k = static_cast<std::size_t>(rng.range(2, std::max<std::int64_t>(2, static_cast<std::int64_t>(s.max_bundle_size))));
        for (std::size_t i = 0; i < k && set.size() < s.n; ++i) set.add(canonical_hyperplane(nrm, Scalar(rng.range(-L, L))));
    }
    while (set.size() < s.n) set.add(canonical_hyperplane(draw_normal(), Scalar(rng.range(-L * L, L * L))));
    auto out = std::move(set.items());
    rng.shuffle(out);
    return out;
}

inline std::vector<HyperplaneD> grid_hyperplanes(const GenSpec& s) {
    const std::size_t d = s.d;
    const std::size_t axes = s.normal_rank == 0 ? d : std::min(s.normal_rank, d);
    std::vector<HyperplaneD> out;
    for (std::size_t i = 0; i < s.n; ++i) {
        Vector nrm(d, Scalar(0));
        nrm[i % axes] = 1;
        out.push_back(canonical_hyperplane(nrm, Scalar(static_cast<long>(i / axes))));
    }
    return out;
}

/// All but one hyperplane through a common point p; the extra one translates
/// the hyperplane with the lexicographically smallest normal. The first 2-flat
/// then carries concurrent traces and the search must move to its translate.
inline std::vector<HyperplaneD> near_pencil_hyperplanes(const GenSpec& s, SplitMix64& rng) {
    const std::size_t d = s.d;
    if (s.n < d + 2) infeasible("near_pencil hyperplanes need n >= d + 2");
    const std::int64_t L = std::max<std::int64_t>(s.lattice, 2);
    Vector p(d);
    for (auto& c : p) c = rng.range(-L, L);
    HyperplaneSet set;
    while (set.size() < s.n - 1) {
        Vector nrm = random_normal(rng, d, L, false);
        set.add(canonical_hyperplane(nrm, dot(nrm, p)));
    }
    auto out = std::move(set.items());
    rng.shuffle(out);
    std::size_t lo = 0;
    for (std::size_t i = 1; i < out.size(); ++i)
        if (lex_less(out[i].direction(), out[lo].direction())) lo = i;
    Scalar shift(rng.range(1, L));
    out.push_back(canonical_hyperplane(out[lo].normal(), Scalar(out[lo].offset() + shift)));
    return out;
}

/// d >= 4: the 2-flat comes from unit normals e_d, e_{d-1}, ...; hyperplanes
/// whose normals are sums of two of those miss it and must be skipped.
inline std::vector<HyperplaneD> pencil_plus_hyperplanes(const GenSpec& s, SplitMix64& rng) {
    const std::size_t d = s.d;
    const std::int64_t L = std::max<std::int64_t>(s.lattice, 2);
    if (d < 4) {
        GenSpec t = s;
        t.parallel_family_count = std::max<std::size_t>(1, s.parallel_family_count);
        return random_hyperplanes(t, rng);
    }
    const std::size_t k = d - 2;
    const std::size_t skips = std::max<std::size_t>(1, s.parallel_family_count);
    if (s.n < k + skips + 2) infeasible("pencil_plus hyperplanes need n >= d + skips");
    auto unit = [&](std::size_t axis) {
        Vector e(d, Scalar(0));
        e[axis] = 1;
        return e;
    };
    HyperplaneSet set;
    std::vector<Scalar> offsets;
    for (std::size_t t = 0; t < k; ++t) {
        offsets.emplace_back(rng.range(-L, L));
        set.add(canonical_hyperplane(unit(d - 1 - t), offsets.back()));
    }
    std::size_t made = 0;
    while (made < skips) {
        std::size_t i = static_cast<std::size_t>(rng.below(k)), j = static_cast<std::size_t>(rng.below(k));
        if (i == j) continue;
        Vector nrm = unit(d - 1 - i);
        nrm[d - 1 - j] = 1;
        Scalar off = offsets[i] + offsets[j] + Scalar(rng.range(1, L)) * (rng.chance(1, 2) ? 1 : -1);
        if (set.add(canonical_hyperplane(nrm, off))) ++made;
        if (set.size() >= s.n) break;
    }
    while (set.size() < s.n) set.add(canonical_hyperplane(random_normal(rng, d, L, true), Scalar(rng.range(-L * L, L * L))));
    auto out = std::move(set.items());
    // Keep the constituents ahead of anything parallel to them; shuffle the rest.
    rng.shuffle(out, k);
    return out;
}

inline bool hyperplanes_ok(std::span<const HyperplaneD> hs, std::uint64_t verify_cap) {
    if (oracle::binomial(hs.size(), hs.front().dim()) > verify_cap) return true;
    return oracle::check_hypotheses_nd(hs, 1).all_hold();
}

// ---- pseudolines ----

/// Wiring diagram. Wires sit on integer tracks at integer layer boundaries;
/// between boundaries each chosen block of tracks is reversed, so all of its
/// wires cross at the block's midpoint. A block may only be reversed while its
/// wires are still in their original order, so every pair crosses exactly once.
/// `first_block` forces a reversal of tracks [0, first_block) in layer 0.
inline std::vector<Pseudoline> wiring_diagram(std::size_t n, std::size_t max_block, SplitMix64& rng,
                                              std::size_t first_block = 0) {
    if (n < 3) infeasible("wiring diagram needs n >= 3");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<std::int64_t>> track(n); // track[w][t]
    for (std::size_t w = 0; w < n; ++w) track[w].push_back(static_cast<std::int64_t>(w));
    auto done = [&] {
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (perm[j] < perm[j + 1]) return false;
        return true;
    };
    const std::size_t bmax = std::max<std::size_t>(2, max_block);
    bool first = true;
    while (!done()) {
        bool any = false;
        std::size_t j = 0;
        if (first && first_block >= 2) {
            std::reverse(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(first_block));
            j = first_block;
            any = true;
        }
        first = false;
        while (j + 1 < n) {
            if (perm[j] < perm[j + 1] && !rng.chance(1, 10)) {
                std::size_t m = 2;
                while (m < bmax && j + m < n && perm[j + m - 1] < perm[j + m]) ++m;
                // Pairs are most common; larger blocks make high-degree crossings.
                std::size_t size = rng.chance(2, 3) ? 2 : static_cast<std::size_t>(rng.range(2, static_cast<std::int64_t>(m)));
                std::reverse(perm.begin() + static_cast<std::ptrdiff_t>(j), perm.begin() + static_cast<std::ptrdiff_t>(j + size));
                j += size;
                any = true;
            } else {
                ++j;
            }
        }
        if (!any) {
            std::size_t k = 0;
            while (perm[k] > perm[k + 1]) ++k;
            std::swap(perm[k], perm[k + 1]);
        }
        for (std::size_t t = 0; t < n; ++t) track[perm[t]].push_back(static_cast<std::int64_t>(t));
    }
    std::vector<Pseudoline> out(n);
    for (std::size_t w = 0; w < n; ++w) {
        const auto& y = track[w];
        const std::size_t T = y.size();
        std::vector<Point2> verts;
        for (std::size_t t = 0; t < T; ++t) {
            std::int64_t before = t == 0 ? 0 : y[t] - y[t - 1];
            std::int64_t after = t + 1 == T ? 0 : y[t + 1] - y[t];
            if (before != after) verts.push_back({Scalar(static_cast<long>(t)), Scalar(static_cast<long>(y[t]))});
        }
        if (verts.empty()) verts.push_back({Scalar(0), Scalar(static_cast<long>(y[0]))});
        out[w] = Pseudoline{std::move(verts), Scalar(0), Scalar(0), std::nullopt, w};
    }
    return out;
}

/// Straight non-vertical lines with pairwise distinct slopes, some forced
/// through common points. `dense` puts nearly every line into a bundle and
/// starts the input with two lines of one bundle, so the first crossing
/// examined is not ordinary.
inline std::vector<Pseudoline> straight_pseudolines(const GenSpec& s, SplitMix64& rng, bool dense = false) {
    if (s.n < 3) infeasible("need n >= 3 pseudolines");
    const std::int64_t L = std::max<std::int64_t>(s.lattice, static_cast<std::int64_t>(s.n));
    std::set<Scalar> slopes;
    auto fresh_slope = [&]() {
        for (;;) {
            Scalar m(rng.range(-L, L), static_cast<unsigned long>(rng.range(1, 8)));
            m.canonicalize();
            if (slopes.insert(m).second) return m;
        }
    };
    std::vector<Pseudoline> out;
    const std::size_t bundle = std::max<std::size_t>(2, s.max_bundle_size);
    if (bundle >= 3) {
        const std::size_t count = std::max<std::size_t>(1, dense ? s.n / bundle : s.n / (2 * bundle));
        for (std::size_t b = 0; b < count && out.size() + 4 <= s.n; ++b) {
            Point2 c{Scalar(rng.range(-L, L)), Scalar(rng.range(-L, L))};
            std::size_t k = static_cast<std::size_t>(rng.range(3, static_cast<std::int64_t>(bundle)));
            k = std::min(k, s.n - 1 - out.size()); // never a full pencil
            for (std::size_t i = 0; i < k; ++i) out.push_back(straight_pseudoline(fresh_slope(), c));
        }
    }
    const std::size_t bundled = out.size();
    while (out.size() < s.n) {
        Point2 c{Scalar(0), Scalar(rng.range(-L * L, L * L))};
        out.push_back(straight_pseudoline(fresh_slope(), c));
    }
    if (dense && bundled >= 3) {
        // out[0], out[1] share the first bundle; move them to positions 1, 2.
        std::vector<Pseudoline> head{out[0], out[1]};
        out.erase(out.begin(), out.begin() + 2);
        rng.shuffle(out);
        std::size_t far = 0;
        while (far < out.size() && on_pseudoline(out[far], head[0].vertices.front())) ++far;
        std::swap(out[0], out[far]);
        out.insert(out.begin() + 1, head.begin(), head.end());
        return out;
    }
    rng.shuffle(out);
    return out;
}

inline void renumber(std::vector<Pseudoline>& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) ps[i].id = i;
}

} // namespace gen_detail

inline std::vector<Line2> generate_lines(const GenSpec& s) {
    SplitMix64 rng(s.seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Line2> out;
        switch (s.kind) {
        case GenKind::Random: out = gen_detail::random_lines(s, rng); break;
        case GenKind::Grid: out = gen_detail::grid_lines(s); break;
        case GenKind::NearPencil: out = gen_detail::near_pencil_lines(s); break;
        case GenKind::PencilPlus: out = gen_detail::pencil_plus_lines(s, rng); break;
        default: gen_detail::infeasible("kind " + std::string(to_string(s.kind)) + " does not produce lines");
        }
        if (gen_detail::lines_ok(out)) {
            gen_detail::renumber(out);
            return out;
        }
    }
    gen_detail::infeasible("could not draw a valid line arrangement");
    return {};
}

/// Hypotheses are verified with the oracle whenever C(n, d) <= verify_cap.
inline std::vector<HyperplaneD> generate_hyperplanes(const GenSpec& s, std::uint64_t verify_cap = 200'000) {
    if (s.d < 2) gen_detail::infeasible("hyperplanes need d >= 2");
    check_dimension(s.d);
    if (s.n < s.d) gen_detail::infeasible("hyperplanes need n >= d");
    SplitMix64 rng(s.seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<HyperplaneD> out;
        switch (s.kind) {
        case GenKind::Random: out = gen_detail::random_hyperplanes(s, rng); break;
        case GenKind::Grid: out = gen_detail::grid_hyperplanes(s); break;
        case GenKind::NearPencil: out = gen_detail::near_pencil_hyperplanes(s, rng); break;
        case GenKind::PencilPlus: out = gen_detail::pencil_plus_hyperplanes(s, rng); break;
        default: gen_detail::infeasible("kind " + std::string(to_string(s.kind)) + " does not produce hyperplanes");
        }
        if (gen_detail::hyperplanes_ok(out, verify_cap)) {
            gen_detail::renumber(out);
            return out;
        }
        if (s.kind == GenKind::Grid) break;
    }
    gen_detail::infeasible("could not draw hyperplanes satisfying the hypotheses");
    return {};
}

inline std::vector<Pseudoline> generate_pseudolines(const GenSpec& s) {
    SplitMix64 rng(s.seed);
    const std::size_t n = s.n;
    std::vector<Pseudoline> out;
    auto red_count = [&](std::size_t total) {
        auto r = static_cast<std::size_t>(s.color_bias * static_cast<double>(total) + 0.5);
        return std::clamp<std::size_t>(r, 1, total - 1);
    };
    switch (s.kind) {
    case GenKind::WiringDiagram: out = gen_detail::wiring_diagram(n, s.max_bundle_size, rng); break;
    case GenKind::Random: out = gen_detail::straight_pseudolines(s, rng); break;
    case GenKind::PencilPlus: out = gen_detail::straight_pseudolines(s, rng, true); break;
    case GenKind::NearPencil: {
        for (const auto& l : gen_detail::near_pencil_lines(s)) out.push_back(*as_pseudoline(l));
        break;
    }
    case GenKind::Grid: gen_detail::infeasible("a grid has parallel lines and is not a pseudoline arrangement");
    case GenKind::Bichromatic: {
        if (n < 3) gen_detail::infeasible("bichromatic needs n >= 3");
        out = s.straight ? gen_detail::straight_pseudolines(s, rng) : gen_detail::wiring_diagram(n, s.max_bundle_size, rng);
        std::vector<Color> colors(n, Color::Blue);
        for (std::size_t i = 0; i < red_count(n); ++i) colors[i] = Color::Red;
        rng.shuffle(colors);
        for (std::size_t i = 0; i < n; ++i) out[i].color = colors[i];
        break;
    }
    case GenKind::Biased: {
        if (n < 4) gen_detail::infeasible("biased needs n >= 4");
        // The minority color forms a pencil that also contains one majority
        // pseudoline, so it has no monochromatic crossing at all.
        const Color pencil = s.color_bias < 0.5 ? Color::Red : Color::Blue;
        const std::size_t minority = std::clamp<std::size_t>(
            static_cast<std::size_t>(std::min(s.color_bias, 1.0 - s.color_bias) * static_cast<double>(n) + 0.5), 2, n - 2);
        if (s.straight) {
            std::set<Scalar> slopes;
            for (std::size_t i = 0; i <= minority; ++i) {
                long m = static_cast<long>(i / 2 + 1) * (i % 2 == 0 ? 1 : -1);
                Scalar slope = i == minority ? Scalar(0) : Scalar(m);
                slopes.insert(slope);
                out.push_back(straight_pseudoline(slope, {Scalar(0), Scalar(0)}, i == minority ? opposite(pencil) : pencil));
            }
            const std::int64_t L = std::max<std::int64_t>(s.lattice, static_cast<std::int64_t>(n));
            while (out.size() < n) {
                Scalar m(rng.range(-L, L), static_cast<unsigned long>(rng.range(1, 5)));
                m.canonicalize();
                std::int64_t c = rng.range(-L, L);
                if (c == 0 || !slopes.insert(m).second) continue;
                out.push_back(straight_pseudoline(m, {Scalar(0), Scalar(c)}, opposite(pencil)));
            }
        } else {
            out = gen_detail::wiring_diagram(n, s.max_bundle_size, rng, minority + 1);
            for (std::size_t i = 0; i < n; ++i) out[i].color = i < minority ? pencil : opposite(pencil);
        }
        rng.shuffle(out);
        break;
    }
    }
    gen_detail::renumber(out);
    return out;
}

inline Arrangement generate(const GenSpec& s) {
    GenTarget t = s.target;
    if (t == GenTarget::Auto) {
        if (s.kind == GenKind::WiringDiagram || s.kind == GenKind::Bichromatic || s.kind == GenKind::Biased)
            t = GenTarget::Pseudolines;
        else
            t = s.d >= 3 ? GenTarget::Hyperplanes : GenTarget::Lines;
    }
    switch (t) {
    case GenTarget::Lines: return generate_lines(s);
    case GenTarget::Hyperplanes: return generate_hyperplanes(s);
    default: return generate_pseudolines(s);
    }
}

} // namespace ordinary
