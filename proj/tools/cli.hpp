#pragma once

// Command-line front end. `run_cli` is the whole program; main() only forwards.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ordinary.hpp>

namespace ordinary::cli {

using io::json;

enum Exit { kOk = 0, kRefuted = 1, kHypothesis = 2, kUsage = 3 };

inline int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::AllParallel:
    case ErrorKind::AllConcurrent:
    case ErrorKind::HypothesisViolated: return kHypothesis;
    case ErrorKind::SpecInfeasible: return kUsage;
    default: return kRefuted;
    }
}

struct Globals {
    bool no_validate = false;
    bool trace = false;
    bool json_out = false;
};

inline std::size_t smax_from_env() {
    const char* v = std::getenv("ORDINARY_SMAX");
    if (!v || !*v) return kDefaultMaxSegments;
    try {
        std::size_t pos = 0;
        unsigned long long x = std::stoull(v, &pos);
        if (pos != std::string(v).size() || x < 2) throw std::invalid_argument("");
        return static_cast<std::size_t>(x);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, std::string("ORDINARY_SMAX must be an integer >= 2, got '") + v + "'");
    }
}

class Stopwatch {
public:
    std::int64_t lap() {
        auto now = std::chrono::steady_clock::now();
        auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(now - last_).count();
        last_ = now;
        return std::max<std::int64_t>(ns, 0);
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline std::vector<Line2> as_lines(const Arrangement& a) {
    if (auto* ls = std::get_if<std::vector<Line2>>(&a)) return *ls;
    if (auto* hs = std::get_if<std::vector<HyperplaneD>>(&a)) {
        std::vector<Line2> out;
        for (const auto& h : *hs) {
            if (h.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "expected planar input (d = 2)");
            out.push_back(canonical_line(h.normal()[0], h.normal()[1], h.offset(), std::nullopt, h.id()));
        }
        return out;
    }
    throw Error(ErrorKind::Parse, "expected a line arrangement");
}

inline std::vector<HyperplaneD> as_hyperplanes(const Arrangement& a) {
    if (auto* hs = std::get_if<std::vector<HyperplaneD>>(&a)) return *hs;
    if (auto* ls = std::get_if<std::vector<Line2>>(&a)) {
        std::vector<HyperplaneD> out;
        for (const auto& l : *ls) out.push_back(canonical_hyperplane({l.a(), l.b()}, l.c(), l.id()));
        return out;
    }
    throw Error(ErrorKind::Parse, "expected a hyperplane arrangement");
}

inline std::vector<Pseudoline> as_pseudolines(const Arrangement& a) {
    if (auto* ps = std::get_if<std::vector<Pseudoline>>(&a)) return *ps;
    if (auto* ls = std::get_if<std::vector<Line2>>(&a)) {
        std::vector<Pseudoline> out;
        for (const auto& l : *ls) {
            auto p = as_pseudoline(l);
            if (!p) throw Error(ErrorKind::InvalidArrangement, "line " + std::to_string(l.id()) + " is vertical");
            out.push_back(std::move(*p));
        }
        return out;
    }
    throw Error(ErrorKind::Parse, "expected a pseudoline arrangement");
}

inline json indices(std::span<const std::size_t> v) { return json(std::vector<std::size_t>(v.begin(), v.end())); }

inline json trace_to_json(const std::vector<TriangleState>& trace) {
    json out = json::array();
    for (const auto& st : trace) {
        json s{{"step", st.step},
               {"apex", io::point_to_json(st.apex)},
               {"left_pt", io::point_to_json(st.left_pt)},
               {"mid_pt", io::point_to_json(st.mid_pt)},
               {"right_pt", io::point_to_json(st.right_pt)},
               {"base", st.base},
               {"left_side", st.left_side},
               {"mid_side", st.mid_side},
               {"right_side", st.right_side}};
        s["divider"] = st.divider ? json(*st.divider) : json(nullptr);
        s["expected_color"] = st.expected_color ? json(std::string(to_string(*st.expected_color))) : json(nullptr);
        out.push_back(std::move(s));
    }
    return out;
}

inline std::string point_text(const json& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].get<std::string>();
    return s + ")";
}

/// Incident element count at `point`, recomputed directly.
inline std::vector<std::size_t> incident_to(const Arrangement& a, const PointD& point) {
    return std::visit(
        [&](const auto& v) -> std::vector<std::size_t> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::vector<HyperplaneD>>) {
                if (!v.empty() && v.front().dim() != point.size())
                    throw Error(ErrorKind::DimensionMismatch, "claimed point has the wrong dimension");
                return oracle::incident_hyperplanes(v, point);
            } else {
                if (point.size() != 2) throw Error(ErrorKind::DimensionMismatch, "claimed point must be planar");
                const Point2 p{point[0], point[1]};
                if constexpr (std::is_same_v<T, std::vector<Line2>>)
                    return oracle::incident_lines(v, p);
                else
                    return pseudolines_through(v, p);
            }
        },
        a);
}

inline std::size_t dimension_of(const Arrangement& a) {
    if (auto* hs = std::get_if<std::vector<HyperplaneD>>(&a)) return hs->empty() ? 0 : hs->front().dim();
    return 2;
}

inline std::size_t size_of(const Arrangement& a) {
    return std::visit([](const auto& v) { return v.size(); }, a);
}

inline std::string kind_of(const Arrangement& a) {
    if (std::holds_alternative<std::vector<Line2>>(a)) return "lines";
    if (std::holds_alternative<std::vector<HyperplaneD>>(a)) return "hyperplanes";
    return "pseudolines";
}

inline std::optional<Color> color_at(const Arrangement& a, std::size_t i) {
    if (auto* ls = std::get_if<std::vector<Line2>>(&a)) return (*ls)[i].color();
    if (auto* ps = std::get_if<std::vector<Pseudoline>>(&a)) return (*ps)[i].color;
    return std::nullopt;
}

struct Outcome {
    json report;
    int code = kOk;
};

/// Runs one algorithm over a parsed arrangement. `task` is the subcommand name.
inline Outcome solve(const std::string& task, const Arrangement& arr, const Globals& g, Stopwatch& clock,
                     json timings) {
    Outcome o;
    json result;
    json verification;
    if (task == "ordinary2d") {
        auto lines = as_lines(arr);
        timings["convert"] = clock.lap();
        auto r = find_ordinary_point_2d(lines);
        timings["solve"] = clock.lap();
        result = {{"point", io::point_to_json(r.point)},
                  {"witnesses", json::array({r.witnesses[0], r.witnesses[1]})},
                  {"provenance", std::string(to_string(r.provenance))}};
        auto inc = oracle::incident_lines(lines, r.point);
        verification = {{"incident", inc.size()}, {"ok", inc.size() == 2}};
    } else if (task == "ordinary-nd") {
        auto hs = as_hyperplanes(arr);
        timings["convert"] = clock.lap();
        auto out = find_ordinary_point_nd(hs);
        timings["solve"] = clock.lap();
        if (auto* none = std::get_if<NoIntersectionPoint>(&out)) {
            result = {{"verdict", "no_intersection_point"}, {"normal_rank", none->normal_rank}};
            std::vector<Vector> normals;
            for (const auto& h : hs) normals.push_back(h.normal());
            const std::size_t rank = oracle::rank_by_elimination(normals);
            verification = {{"normal_rank", rank}, {"ok", rank < hs.front().dim()}};
        } else {
            const auto& r = std::get<OrdinaryResultND>(out);
            result = {{"point", io::point_to_json(r.point)},
                      {"witnesses", indices(r.witnesses)},
                      {"provenance", std::string(to_string(r.provenance))},
                      {"skipped_empty_traces", r.skipped_empty_traces}};
            auto inc = oracle::incident_hyperplanes(hs, r.point);
            verification = {{"incident", inc.size()}, {"ok", inc.size() == hs.front().dim()}};
        }
    } else {
        auto ps = as_pseudolines(arr);
        timings["convert"] = clock.lap();
        PseudolineOptions opt{!g.no_validate, smax_from_env()};
        if (opt.validate) {
            require_valid(ps, opt.max_segments);
            timings["validate"] = clock.lap();
            opt.validate = false;
        }
        std::vector<TriangleState> trace;
        if (task == "ordinary-pseudo") {
            auto r = find_ordinary_pseudoline(ps, opt);
            timings["solve"] = clock.lap();
            trace = std::move(r.trace);
            result = {{"point", io::point_to_json(r.point)},
                      {"witnesses", json::array({r.witnesses[0], r.witnesses[1]})},
                      {"steps", trace.size()}};
            auto inc = pseudolines_through(ps, r.point);
            verification = {{"incident", inc.size()}, {"ok", inc.size() == 2}};
        } else {
            auto r = find_monochromatic(ps, opt);
            timings["solve"] = clock.lap();
            trace = std::move(r.trace);
            result = {{"point", io::point_to_json(r.point)},
                      {"color", std::string(to_string(r.color))},
                      {"witnesses", indices(r.witnesses)},
                      {"steps", trace.size()}};
            auto inc = pseudolines_through(ps, r.point);
            bool mono = inc.size() >= 2 &&
                        std::all_of(inc.begin(), inc.end(), [&](std::size_t i) { return ps[i].color == r.color; });
            verification = {{"incident", inc.size()}, {"ok", mono}};
        }
        if (g.trace) o.report["trace"] = trace_to_json(trace);
    }
    timings["verify"] = clock.lap();
    json rep{{"kind", kind_of(arr)}, {"task", task}, {"n", size_of(arr)}, {"d", dimension_of(arr)},
             {"result", std::move(result)}, {"timings_ns", std::move(timings)}};
    if (o.report.contains("trace")) rep["trace"] = std::move(o.report["trace"]);
    rep["verification"] = std::move(verification);
    o.report = std::move(rep);
    if (!o.report["verification"]["ok"].get<bool>()) o.code = kRefuted;
    return o;
}

inline void print_report(std::ostream& out, const json& rep, bool as_json) {
    if (as_json) {
        out << rep.dump(2) << '\n';
        return;
    }
    const json& r = rep["result"];
    if (r.contains("verdict")) {
        out << "no intersection point: normals have rank " << r["normal_rank"].get<std::size_t>() << " < d\n";
        return;
    }
    out << "point " << point_text(r["point"]);
    if (r.contains("color")) out << " color " << r["color"].get<std::string>();
    out << " witnesses";
    for (const auto& w : r["witnesses"]) out << ' ' << w.get<std::size_t>();
    if (r.contains("provenance")) out << " via " << r["provenance"].get<std::string>();
    out << '\n';
    if (rep.contains("trace"))
        for (const auto& st : rep["trace"]) {
            out << "  step " << st["step"].get<std::size_t>() << " R=" << point_text(st["mid_pt"]);
            if (!st["divider"].is_null()) out << " divider " << st["divider"].get<std::size_t>();
            if (!st["expected_color"].is_null()) out << " expect " << st["expected_color"].get<std::string>();
            out << '\n';
        }
}

/// Claim: a RunReport, or {"point": [...], "color"?: "red"}, or {"verdict": "no_intersection_point"}.
inline int verify_claim(const Arrangement& arr, const json& claim, std::ostream& out) {
    const json& r = claim.contains("result") ? claim["result"] : claim;
    if (r.contains("verdict")) {
        auto hs = as_hyperplanes(arr);
        std::vector<Vector> normals;
        for (const auto& h : hs) normals.push_back(h.normal());
        const std::size_t rank = oracle::rank_by_elimination(normals);
        const bool ok = !hs.empty() && rank < hs.front().dim();
        out << (ok ? "confirmed" : "refuted") << ": normal rank " << rank << '\n';
        return ok ? kOk : kRefuted;
    }
    const PointD p = io::point_from_json(io::field(r, "point"));
    auto inc = incident_to(arr, p);
    if (r.contains("color")) {
        const Color c = parse_color(r["color"].get<std::string>());
        bool ok = inc.size() >= 2 && std::all_of(inc.begin(), inc.end(), [&](std::size_t i) { return color_at(arr, i) == c; });
        out << (ok ? "confirmed" : "refuted") << ": " << inc.size() << " incident, monochromatic "
            << to_string(c) << (ok ? "" : " fails") << '\n';
        return ok ? kOk : kRefuted;
    }
    const std::size_t want = dimension_of(arr);
    const bool ok = inc.size() == want;
    out << (ok ? "confirmed" : "refuted") << ": " << inc.size() << " incident, ordinary needs " << want << '\n';
    return ok ? kOk : kRefuted;
}

inline std::optional<Point2> parse_highlight(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto comma = s.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::Parse, "--highlight expects x,y");
    return Point2{parse_scalar(s.substr(0, comma)), parse_scalar(s.substr(comma + 1))};
}

inline std::string task_for_bench(GenKind k, std::size_t d) {
    if (k == GenKind::WiringDiagram) return "ordinary-pseudo";
    if (k == GenKind::Bichromatic || k == GenKind::Biased) return "mono-pseudo";
    return d >= 3 ? "ordinary-nd" : "ordinary2d";
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Ordinary and monochromatic intersection points of arrangements"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--no-validate", g.no_validate, "skip the pseudoline arrangement check");
    app.add_flag("--trace", g.trace, "include the recursion trace");
    app.add_flag("--json", g.json_out, "print a JSON report");

    std::string file, claim_file, out_file, highlight, sizes_text;
    GenSpec spec;
    std::string kind_text = "random", target_text = "auto";
    std::size_t runs = 5;

    std::vector<CLI::App*> solvers;
    for (const char* name : {"ordinary2d", "ordinary-nd", "ordinary-pseudo", "mono-pseudo"}) {
        auto* sc = app.add_subcommand(name, std::string("run ") + name + " on an arrangement file");
        sc->add_option("FILE", file, "arrangement JSON")->required();
        solvers.push_back(sc);
    }
    auto* verify = app.add_subcommand("verify", "check a claimed result against the oracle");
    verify->add_option("FILE", file, "arrangement JSON")->required();
    verify->add_option("--claim", claim_file, "claimed result JSON")->required();

    auto add_gen_options = [&](CLI::App* sc) {
        sc->add_option("--kind", kind_text, "random|grid|near_pencil|pencil_plus|wiring_diagram|bichromatic|biased")
            ->required();
        sc->add_option("--seed", spec.seed, "seed");
        sc->add_option("--d", spec.d, "dimension for hyperplanes")->check(CLI::Range(2, 16));
        sc->add_option("--max-bundle", spec.max_bundle_size, "largest injected concurrency");
        sc->add_option("--parallel", spec.parallel_family_count, "parallel families to inject");
        sc->add_option("--color-bias", spec.color_bias, "fraction of red pseudolines")->check(CLI::Range(0.0, 1.0));
        sc->add_option("--normal-rank", spec.normal_rank, "cap on the rank of hyperplane normals");
        sc->add_option("--lattice", spec.lattice, "coordinate bound")->check(CLI::PositiveNumber);
        sc->add_flag("--straight", spec.straight, "straight-line realization for colored pseudolines");
        sc->add_option("--target", target_text, "auto|lines|hyperplanes|pseudolines");
    };
    auto* generate = app.add_subcommand("generate", "emit a generated arrangement as JSON");
    add_gen_options(generate);
    generate->add_option("--n", spec.n, "number of elements")->required();
    generate->add_option("--out", out_file, "output file (default stdout)");

    auto* render = app.add_subcommand("render", "draw a planar arrangement as SVG");
    render->add_option("FILE", file, "arrangement JSON")->required();
    render->add_option("--out", out_file, "SVG file")->required();
    render->add_option("--highlight", highlight, "point x,y to circle");

    auto* bench = app.add_subcommand("bench", "time the matching algorithm over growing sizes");
    add_gen_options(bench);
    bench->add_option("--sizes", sizes_text, "comma-separated sizes")->required();
    bench->add_option("--runs", runs, "runs per size; the median is reported")->check(CLI::Range(1, 1000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    auto gen_spec = [&] {
        spec.kind = parse_gen_kind(kind_text);
        if (target_text == "auto") spec.target = GenTarget::Auto;
        else if (target_text == "lines") spec.target = GenTarget::Lines;
        else if (target_text == "hyperplanes") spec.target = GenTarget::Hyperplanes;
        else if (target_text == "pseudolines") spec.target = GenTarget::Pseudolines;
        else throw Error(ErrorKind::SpecInfeasible, "unknown target '" + target_text + "'");
        return spec;
    };

    try {
        for (auto* sc : solvers) {
            if (!sc->parsed()) continue;
            Stopwatch clock;
            json timings;
            Arrangement arr = io::arrangement_from_json(io::read_json_file(file));
            timings["parse"] = clock.lap();
            Outcome o = solve(sc->get_name(), arr, g, clock, std::move(timings));
            print_report(out, o.report, g.json_out);
            if (o.code != kOk) err << "error: result failed verification\n";
            return o.code;
        }
        if (verify->parsed()) {
            Arrangement arr = io::arrangement_from_json(io::read_json_file(file));
            return verify_claim(arr, io::read_json_file(claim_file), out);
        }
        if (generate->parsed()) {
            json doc = io::arrangement_to_json(ordinary::generate(gen_spec()));
            if (out_file.empty()) {
                out << doc.dump(2) << '\n';
            } else {
                std::ofstream f(out_file);
                if (!f) throw Error(ErrorKind::Parse, "cannot write " + out_file);
                f << doc.dump(2) << '\n';
            }
            return kOk;
        }
        if (render->parsed()) {
            Arrangement arr = io::arrangement_from_json(io::read_json_file(file));
            auto hl = parse_highlight(highlight);
            std::string svg_text = std::holds_alternative<std::vector<Pseudoline>>(arr)
                                       ? svg::render_pseudolines(std::get<std::vector<Pseudoline>>(arr), hl)
                                       : svg::render_lines(as_lines(arr), hl);
            std::ofstream f(out_file);
            if (!f) throw Error(ErrorKind::Parse, "cannot write " + out_file);
            f << svg_text;
            return kOk;
        }
        if (bench->parsed()) {
            GenSpec base = gen_spec();
            std::vector<std::size_t> sizes;
            std::stringstream ss(sizes_text);
            for (std::string tok; std::getline(ss, tok, ',');) {
                try {
                    sizes.push_back(std::stoull(tok));
                } catch (const std::exception&) {
                    err << "error: bad size '" << tok << "'\n";
                    return kUsage;
                }
            }
            const std::string task = task_for_bench(base.kind, base.d);
            json rows = json::array();
            std::optional<double> prev;
            for (std::size_t n : sizes) {
                GenSpec s = base;
                s.n = n;
                Arrangement arr = s.d >= 3 && s.target == GenTarget::Auto ? Arrangement(generate_hyperplanes(s, 0))
                                                                          : ordinary::generate(s);
                std::vector<std::int64_t> samples;
                Globals quiet = g;
                quiet.trace = false;
                for (std::size_t r = 0; r < runs; ++r) {
                    Stopwatch clock;
                    Outcome o = solve(task, arr, quiet, clock, json::object());
                    samples.push_back(o.report["timings_ns"]["solve"].get<std::int64_t>());
                }
                std::sort(samples.begin(), samples.end());
                const double median = static_cast<double>(samples[samples.size() / 2]);
                json row{{"n", n}, {"median_ns", samples[samples.size() / 2]}};
                row["ratio"] = prev && *prev > 0 ? json(median / *prev) : json(nullptr);
                prev = median;
                rows.push_back(std::move(row));
            }
            json rep{{"task", task}, {"kind", kind_text}, {"runs", runs}, {"rows", std::move(rows)}};
            if (g.json_out) {
                out << rep.dump(2) << '\n';
            } else {
                for (const auto& row : rep["rows"]) {
                    out << "n=" << row["n"].get<std::size_t>() << " median_ns=" << row["median_ns"].get<std::int64_t>();
                    if (!row["ratio"].is_null()) out << " ratio=" << row["ratio"].get<double>();
                    out << '\n';
                }
            }
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }
    return kUsage;
}

} // namespace ordinary::cli
