#pragma once

// JSON formats. Scalars are written as "p/q" strings; integers are also accepted on input.
//
//   {"lines": [{"a": "1", "b": "-2", "c": "3/2", "color": "red"}]}
//   {"d": 4, "hyperplanes": [{"normal": ["1", "0", "0", "0"], "offset": "0"}]}
//   {"pseudolines": [{"vertices": [["0", "0"], ["1", "1"]], "left_slope": "-1", "right_slope": "0"}]}

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ordinary/errors.hpp"
#include "ordinary/generators.hpp"
#include "ordinary/plane.hpp"
#include "ordinary/pseudolines.hpp"
#include "ordinary/scalar.hpp"
#include "ordinary/space.hpp"

namespace ordinary::io {

using json = nlohmann::ordered_json;

inline Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return parse_scalar(j.dump());
    throw Error(ErrorKind::Parse, "expected a rational as string or integer, got " + j.dump());
}

inline json scalar_to_json(const Scalar& q) { return to_string(q); }

inline std::optional<Color> color_from_json(const json& obj) {
    auto it = obj.find("color");
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw Error(ErrorKind::Parse, "color must be a string");
    return parse_color(it->get<std::string>());
}

inline const json& field(const json& obj, const char* key) {
    if (!obj.is_object()) throw Error(ErrorKind::Parse, std::string("expected an object with '") + key + "'");
    auto it = obj.find(key);
    if (it == obj.end()) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
    return *it;
}

inline const json& array_field(const json& obj, const char* key) {
    const json& a = field(obj, key);
    if (!a.is_array()) throw Error(ErrorKind::Parse, std::string("field '") + key + "' must be an array");
    return a;
}

inline json point_to_json(const Point2& p) { return json::array({scalar_to_json(p.x), scalar_to_json(p.y)}); }

inline json point_to_json(const PointD& p) {
    json a = json::array();
    for (const auto& c : p) a.push_back(scalar_to_json(c));
    return a;
}

inline PointD point_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, "point must be an array");
    PointD p;
    for (const auto& c : j) p.push_back(scalar_from_json(c));
    return p;
}

// ---- lines ----

inline std::vector<Line2> lines_from_json(const json& doc) {
    std::vector<Line2> out;
    const json& arr = array_field(doc, "lines");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& l = arr[i];
        out.push_back(canonical_line(scalar_from_json(field(l, "a")), scalar_from_json(field(l, "b")),
                                     scalar_from_json(field(l, "c")), color_from_json(l), i));
    }
    return out;
}

inline json lines_to_json(std::span<const Line2> lines) {
    json arr = json::array();
    for (const auto& l : lines) {
        json o{{"a", scalar_to_json(l.a())}, {"b", scalar_to_json(l.b())}, {"c", scalar_to_json(l.c())}};
        if (l.color()) o["color"] = std::string(to_string(*l.color()));
        arr.push_back(std::move(o));
    }
    return json{{"lines", std::move(arr)}};
}

// ---- hyperplanes ----

inline std::vector<HyperplaneD> hyperplanes_from_json(const json& doc) {
    const json& arr = array_field(doc, "hyperplanes");
    std::optional<std::size_t> d;
    if (auto it = doc.find("d"); it != doc.end()) {
        if (!it->is_number_unsigned()) throw Error(ErrorKind::Parse, "'d' must be a positive integer");
        d = it->get<std::size_t>();
    }
    std::vector<HyperplaneD> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& h = arr[i];
        Vector normal = point_from_json(array_field(h, "normal"));
        if (!d) d = normal.size();
        if (normal.size() != *d)
            throw Error(ErrorKind::DimensionMismatch, "hyperplane " + std::to_string(i) + " has " +
                                                          std::to_string(normal.size()) + " coordinates, expected " +
                                                          std::to_string(*d));
        out.push_back(canonical_hyperplane(normal, scalar_from_json(field(h, "offset")), i));
    }
    return out;
}

inline json hyperplanes_to_json(std::span<const HyperplaneD> hs) {
    json arr = json::array();
    for (const auto& h : hs) arr.push_back(json{{"normal", point_to_json(h.normal())}, {"offset", scalar_to_json(h.offset())}});
    json doc;
    doc["d"] = hs.empty() ? 0 : hs.front().dim();
    doc["hyperplanes"] = std::move(arr);
    return doc;
}

// ---- pseudolines ----

inline std::vector<Pseudoline> pseudolines_from_json(const json& doc) {
    const json& arr = array_field(doc, "pseudolines");
    std::vector<Pseudoline> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& p = arr[i];
        Pseudoline pl;
        for (const auto& v : array_field(p, "vertices")) {
            PointD xy = point_from_json(v);
            if (xy.size() != 2) throw Error(ErrorKind::Parse, "pseudoline vertex must have two coordinates");
            pl.vertices.push_back({xy[0], xy[1]});
        }
        pl.left_slope = scalar_from_json(field(p, "left_slope"));
        pl.right_slope = scalar_from_json(field(p, "right_slope"));
        pl.color = color_from_json(p);
        pl.id = i;
        out.push_back(std::move(pl));
    }
    return out;
}

inline json pseudolines_to_json(std::span<const Pseudoline> ps) {
    json arr = json::array();
    for (const auto& p : ps) {
        json verts = json::array();
        for (const auto& v : p.vertices) verts.push_back(point_to_json(v));
        json o{{"vertices", std::move(verts)},
               {"left_slope", scalar_to_json(p.left_slope)},
               {"right_slope", scalar_to_json(p.right_slope)}};
        if (p.color) o["color"] = std::string(to_string(*p.color));
        arr.push_back(std::move(o));
    }
    return json{{"pseudolines", std::move(arr)}};
}

// ---- documents ----

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

inline Arrangement arrangement_from_json(const json& doc) {
    if (!doc.is_object()) throw Error(ErrorKind::Parse, "arrangement document must be an object");
    try {
        if (doc.contains("lines")) return lines_from_json(doc);
        if (doc.contains("hyperplanes")) return hyperplanes_from_json(doc);
        if (doc.contains("pseudolines")) return pseudolines_from_json(doc);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    throw Error(ErrorKind::Parse, "expected 'lines', 'hyperplanes' or 'pseudolines'");
}

inline json arrangement_to_json(const Arrangement& a) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::vector<Line2>>)
                return lines_to_json(v);
            else if constexpr (std::is_same_v<T, std::vector<HyperplaneD>>)
                return hyperplanes_to_json(v);
            else
                return pseudolines_to_json(v);
        },
        a);
}

} // namespace ordinary::io
