#pragma once

// SVG drawing of planar arrangements. Coordinates become doubles only here,
// for display.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ordinary/oracle.hpp"
#include "ordinary/plane.hpp"
#include "ordinary/pseudolines.hpp"

namespace ordinary::svg {

struct Box {
    double xmin, xmax, ymin, ymax;
};

/// Bounding box of the given points with a 10% margin on every side.
inline Box viewport(const std::vector<Point2>& pts) {
    if (pts.empty()) return {-1, 1, -1, 1};
    Box b{pts[0].x.get_d(), pts[0].x.get_d(), pts[0].y.get_d(), pts[0].y.get_d()};
    for (const auto& p : pts) {
        b.xmin = std::min(b.xmin, p.x.get_d());
        b.xmax = std::max(b.xmax, p.x.get_d());
        b.ymin = std::min(b.ymin, p.y.get_d());
        b.ymax = std::max(b.ymax, p.y.get_d());
    }
    double w = std::max(b.xmax - b.xmin, 1.0), h = std::max(b.ymax - b.ymin, 1.0);
    double cx = (b.xmin + b.xmax) / 2, cy = (b.ymin + b.ymax) / 2;
    w *= 1.2;
    h *= 1.2;
    return {cx - w / 2, cx + w / 2, cy - h / 2, cy + h / 2};
}

class Canvas {
public:
    explicit Canvas(Box box, double width = 800) : box_(box), width_(width) {
        height_ = width_ * (box.ymax - box.ymin) / (box.xmax - box.xmin);
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke) {
        body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : pts) body_ << sx(x) << ',' << sy(y) << ' ';
        body_ << "\"/>\n";
    }

    void dot(double x, double y, double r, const std::string& fill) {
        body_ << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"" << r << "\" fill=\"" << fill
              << "\"/>\n";
    }

    /// Circle whose radius is 1% of the viewport width.
    void highlight(double x, double y) {
        body_ << "<circle class=\"highlight\" cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"" << 0.01 * width_
              << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    }

    const Box& box() const { return box_; }

    std::string str() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\"" << height_
            << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n"
            << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

private:
    double sx(double x) const { return (x - box_.xmin) / (box_.xmax - box_.xmin) * width_; }
    double sy(double y) const { return (box_.ymax - y) / (box_.ymax - box_.ymin) * height_; } // y up

    Box box_;
    double width_, height_;
    std::ostringstream body_;
};

inline std::string stroke_for(const std::optional<Color>& c) {
    if (!c) return "#444444";
    return *c == Color::Red ? "#c0392b" : "#2e64c9";
}

/// Clips a*x + b*y = c to the box.
inline std::optional<std::vector<std::pair<double, double>>> clip(const Line2& l, const Box& b) {
    const double a = l.a().get_d(), bb = l.b().get_d(), c = l.c().get_d();
    std::vector<std::pair<double, double>> hits;
    auto add = [&](double x, double y) {
        if (x >= b.xmin - 1e-9 && x <= b.xmax + 1e-9 && y >= b.ymin - 1e-9 && y <= b.ymax + 1e-9) hits.push_back({x, y});
    };
    if (bb != 0) {
        add(b.xmin, (c - a * b.xmin) / bb);
        add(b.xmax, (c - a * b.xmax) / bb);
    }
    if (a != 0) {
        add((c - bb * b.ymin) / a, b.ymin);
        add((c - bb * b.ymax) / a, b.ymax);
    }
    if (hits.size() < 2) return std::nullopt;
    auto far = std::max_element(hits.begin(), hits.end(), [&](const auto& p, const auto& q) {
        return std::hypot(p.first - hits[0].first, p.second - hits[0].second) <
               std::hypot(q.first - hits[0].first, q.second - hits[0].second);
    });
    return std::vector<std::pair<double, double>>{hits[0], *far};
}

inline void draw_vertices(Canvas& cv, const oracle::IncidenceMap2& map) {
    for (const auto& e : map) cv.dot(e.point.x.get_d(), e.point.y.get_d(), e.incident.size() == 2 ? 2.0 : 3.5, "#111111");
}

inline std::string render_lines(std::span<const Line2> lines, std::optional<Point2> highlight = std::nullopt) {
    auto map = oracle::enumerate_2d(lines);
    std::vector<Point2> pts;
    for (const auto& e : map) pts.push_back(e.point);
    if (highlight) pts.push_back(*highlight);
    if (pts.empty())
        for (const auto& l : lines) pts.push_back(sgn(l.a()) == 0 ? Point2{Scalar(0), Scalar(l.c() / l.b())}
                                                                  : Point2{Scalar(l.c() / l.a()), Scalar(0)});
    Canvas cv(viewport(pts));
    for (const auto& l : lines)
        if (auto seg = clip(l, cv.box())) cv.polyline(*seg, stroke_for(l.color()));
    draw_vertices(cv, map);
    if (highlight) cv.highlight(highlight->x.get_d(), highlight->y.get_d());
    return cv.str();
}

inline std::string render_pseudolines(std::span<const Pseudoline> ps, std::optional<Point2> highlight = std::nullopt) {
    auto map = oracle::enumerate_2d(ps);
    std::vector<Point2> pts;
    for (const auto& e : map) pts.push_back(e.point);
    for (const auto& p : ps) pts.insert(pts.end(), p.vertices.begin(), p.vertices.end());
    if (highlight) pts.push_back(*highlight);
    Canvas cv(viewport(pts));
    const Box& b = cv.box();
    for (const auto& p : ps) {
        std::vector<std::pair<double, double>> poly;
        const auto& v = p.vertices;
        poly.push_back({b.xmin, v.front().y.get_d() + p.left_slope.get_d() * (b.xmin - v.front().x.get_d())});
        for (const auto& q : v) poly.push_back({q.x.get_d(), q.y.get_d()});
        poly.push_back({b.xmax, v.back().y.get_d() + p.right_slope.get_d() * (b.xmax - v.back().x.get_d())});
        cv.polyline(poly, stroke_for(p.color));
    }
    draw_vertices(cv, map);
    if (highlight) cv.highlight(highlight->x.get_d(), highlight->y.get_d());
    return cv.str();
}

} // namespace ordinary::svg
