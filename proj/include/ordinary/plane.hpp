#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include "ordinary/errors.hpp"
#include "ordinary/scalar.hpp"

namespace ordinary {

enum class Color { Red, Blue };

inline std::string_view to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

inline Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

inline Color parse_color(std::string_view s) {
    if (s == "red") return Color::Red;
    if (s == "blue") return Color::Blue;
    throw Error(ErrorKind::Parse, "unknown color '" + std::string(s) + "'");
}

inline std::strong_ordering cmp(const Scalar& a, const Scalar& b) {
    int c = ::cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

struct Point2 {
    Scalar x;
    Scalar y;

    friend bool operator==(const Point2& p, const Point2& q) { return p.x == q.x && p.y == q.y; }
    friend std::strong_ordering operator<=>(const Point2& p, const Point2& q) {
        if (auto c = cmp(p.x, q.x); c != 0) return c;
        return cmp(p.y, q.y);
    }
};

/// The locus a*x + b*y = c in canonical form: (a, b, c) is a primitive integer
/// triple and the first nonzero of (a, b) is positive. Build with canonical_line().
class Line2 {
public:
    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }
    const Scalar& c() const { return c_; }
    const std::optional<Color>& color() const { return color_; }
    std::size_t id() const { return id_; }

    void set_color(std::optional<Color> c) { color_ = c; }
    void set_id(std::size_t id) { id_ = id; }

    /// Direction parts agree up to scale; (a, b) alone need not be primitive.
    bool parallel_to(const Line2& o) const { return a_ * o.b_ == b_ * o.a_; }

    /// Same locus; color and id are ignored.
    bool same_locus(const Line2& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }

    friend std::strong_ordering locus_order(const Line2& l, const Line2& m) {
        if (auto c = cmp(l.a_, m.a_); c != 0) return c;
        if (auto c = cmp(l.b_, m.b_); c != 0) return c;
        return cmp(l.c_, m.c_);
    }

private:
    friend Line2 canonical_line(const Scalar&, const Scalar&, const Scalar&, std::optional<Color>, std::size_t);
    Line2() = default;

    Scalar a_, b_, c_;
    std::optional<Color> color_;
    std::size_t id_ = 0;
};

inline Line2 canonical_line(const Scalar& a, const Scalar& b, const Scalar& c,
                            std::optional<Color> color = std::nullopt, std::size_t id = 0) {
    if (sgn(a) == 0 && sgn(b) == 0) throw Error(ErrorKind::DegenerateLine, "line with (a, b) = (0, 0)");
    auto v = primitive_integer_vector({a, b, c});
    if (v[0] < 0 || (v[0] == 0 && v[1] < 0))
        for (auto& z : v) z = -z;
    Line2 l;
    l.a_ = Scalar(v[0]);
    l.b_ = Scalar(v[1]);
    l.c_ = Scalar(v[2]);
    l.color_ = color;
    l.id_ = id;
    return l;
}

/// Line through two distinct points.
inline Line2 line_through(const Point2& p, const Point2& q, std::optional<Color> color = std::nullopt,
                          std::size_t id = 0) {
    Scalar a = q.y - p.y;
    Scalar b = p.x - q.x;
    return canonical_line(a, b, Scalar(a * p.x + b * p.y), color, id);
}

/// Unique intersection point, or nullopt when parallel.
inline std::optional<Point2> intersect_lines(const Line2& l1, const Line2& l2) {
    if (l1.same_locus(l2)) throw Error(ErrorKind::IdenticalLines, "intersecting a line with itself");
    Scalar det = l1.a() * l2.b() - l2.a() * l1.b();
    if (sgn(det) == 0) return std::nullopt;
    return Point2{Scalar((l1.c() * l2.b() - l2.c() * l1.b()) / det),
                  Scalar((l1.a() * l2.c() - l2.a() * l1.c()) / det)};
}

enum class Side { Negative = -1, On = 0, Positive = 1 };

inline Side side_of_line(const Line2& l, const Point2& p) {
    return static_cast<Side>(sgn(l.a() * p.x + l.b() * p.y - l.c()));
}

inline bool on_line(const Line2& l, const Point2& p) { return side_of_line(l, p) == Side::On; }

/// q = M p + t with exact inverse.
class AffineMap2 {
public:
    AffineMap2() : m_{Scalar(1), Scalar(0), Scalar(0), Scalar(1)}, t_{Scalar(0), Scalar(0)} {}
    AffineMap2(std::array<Scalar, 4> m, std::array<Scalar, 2> t) : m_(std::move(m)), t_(std::move(t)) {
        if (sgn(det()) == 0) throw Error(ErrorKind::DegenerateLine, "singular affine map");
    }

    Scalar det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    Point2 apply(const Point2& p) const {
        return {Scalar(m_[0] * p.x + m_[1] * p.y + t_[0]), Scalar(m_[2] * p.x + m_[3] * p.y + t_[1])};
    }

    AffineMap2 inverse() const {
        Scalar d = det();
        std::array<Scalar, 4> mi{Scalar(m_[3] / d), Scalar(-m_[1] / d), Scalar(-m_[2] / d), Scalar(m_[0] / d)};
        std::array<Scalar, 2> ti{Scalar(-(mi[0] * t_[0] + mi[1] * t_[1])),
                                 Scalar(-(mi[2] * t_[0] + mi[3] * t_[1]))};
        return AffineMap2(std::move(mi), std::move(ti));
    }

    /// Image of a line: the locus {apply(p) : p on l}. Keeps color and id.
    Line2 apply(const Line2& l) const {
        // p = Minv (q - t); a.p = c  =>  (a^T Minv) q = c + (a^T Minv) t
        Scalar d = det();
        Scalar na = (l.a() * m_[3] - l.b() * m_[2]) / d;
        Scalar nb = (-l.a() * m_[1] + l.b() * m_[0]) / d;
        return canonical_line(na, nb, Scalar(l.c() + na * t_[0] + nb * t_[1]), l.color(), l.id());
    }

    const std::array<Scalar, 4>& matrix() const { return m_; }
    const std::array<Scalar, 2>& translation() const { return t_; }

    friend bool operator==(const AffineMap2&, const AffineMap2&) = default;

private:
    std::array<Scalar, 4> m_;
    std::array<Scalar, 2> t_;
};

/// Affine frame in which `base` is the x-axis and `witness` has positive y.
/// u = b*x - a*y, v = s*(a*x + b*y - c) with s the side of the witness.
inline AffineMap2 base_frame(const Line2& base, const Point2& witness) {
    Side side = side_of_line(base, witness);
    if (side == Side::On) throw Error(ErrorKind::WitnessOnLine, "frame witness lies on the base line");
    Scalar s(static_cast<int>(side));
    return AffineMap2({base.b(), Scalar(-base.a()), Scalar(s * base.a()), Scalar(s * base.b())},
                      {Scalar(0), Scalar(-s * base.c())});
}

} // namespace ordinary
