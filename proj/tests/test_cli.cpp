#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "support.hpp"

using namespace ordinary;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ordinary");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Files : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("ordinary_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        auto p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

const char* kTriangle = R"({"lines": [{"a": "1", "b": "0", "c": "0"}, {"a": "0", "b": "1", "c": "0"}, {"a": "1", "b": "1", "c": "1"}]})";
const char* kPencil = R"({"lines": [{"a": 1, "b": -1, "c": 0}, {"a": 1, "b": 1, "c": 0}, {"a": 2, "b": -1, "c": 0}]})";

} // namespace

TEST(Io, RoundTripsAllFormats) {
    GenSpec s;
    s.n = 10;
    s.seed = 2;
    auto ls = generate_lines(s);
    auto back = io::lines_from_json(io::lines_to_json(ls));
    ASSERT_EQ(back.size(), ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i) EXPECT_TRUE(back[i].same_locus(ls[i]));

    s.d = 4;
    auto hs = generate_hyperplanes(s);
    auto hback = io::hyperplanes_from_json(io::hyperplanes_to_json(hs));
    for (std::size_t i = 0; i < hs.size(); ++i) EXPECT_TRUE(hback[i].same_locus(hs[i]));

    GenSpec p;
    p.kind = GenKind::Bichromatic;
    p.n = 9;
    auto ps = generate_pseudolines(p);
    EXPECT_EQ(io::pseudolines_to_json(io::pseudolines_from_json(io::pseudolines_to_json(ps))).dump(),
              io::pseudolines_to_json(ps).dump());
}

TEST(Io, RejectsMalformedInput) {
    EXPECT_THROW(io::arrangement_from_json(io::parse_json_text(R"({"lines": [{"a": "1/0", "b": "1", "c": "0"}]})")), Error);
    EXPECT_THROW(io::arrangement_from_json(io::parse_json_text(R"({"lines": [{"a": "1", "c": "0"}]})")), Error);
    EXPECT_THROW(io::arrangement_from_json(io::parse_json_text(R"({"points": []})")), Error);
    EXPECT_THROW(io::parse_json_text("{"), Error);
    EXPECT_THROW(io::arrangement_from_json(io::parse_json_text(
                     R"({"d": 3, "hyperplanes": [{"normal": ["1", "0"], "offset": "0"}]})")),
                 Error);
    EXPECT_THROW(io::arrangement_from_json(io::parse_json_text(R"({"lines": [{"a": 1.5, "b": 1, "c": 0}]})")), Error);
}

TEST_F(Files, TriangleJsonReport) {
    auto f = write("triangle.json", kTriangle);
    auto r = run({"ordinary2d", f, "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rep = io::json::parse(r.out);
    EXPECT_EQ(rep["task"], "ordinary2d");
    EXPECT_EQ(rep["n"], 3);
    EXPECT_EQ(rep["result"]["witnesses"].size(), 2u);
    EXPECT_TRUE(rep["verification"]["ok"].get<bool>());
    for (auto& [k, v] : rep["timings_ns"].items()) EXPECT_GE(v.get<std::int64_t>(), 0) << k;
}

TEST_F(Files, PencilIsAHypothesisViolation) {
    auto f = write("pencil.json", kPencil);
    auto r = run({"ordinary2d", f});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("all lines concurrent"), std::string::npos);
}

TEST_F(Files, UsageAndInputErrors) {
    EXPECT_EQ(run({}).code, 3);
    EXPECT_EQ(run({"frobnicate"}).code, 3);
    EXPECT_EQ(run({"generate", "--kind", "grid"}).code, 3); // --n missing
    EXPECT_EQ(run({"generate", "--kind", "nope", "--n", "5"}).code, 1);
    EXPECT_EQ(run({"ordinary2d", path("missing.json")}).code, 1);
    auto bad = write("bad.json", R"({"lines": [{"a": "x", "b": "1", "c": "0"}]})");
    EXPECT_EQ(run({"ordinary2d", bad}).code, 1);
    auto dup = write("dup.json", R"({"lines": [{"a": 1, "b": 0, "c": 0}, {"a": 2, "b": 0, "c": 0}, {"a": 0, "b": 1, "c": 0}]})");
    EXPECT_EQ(run({"ordinary2d", dup}).code, 1);
}

TEST_F(Files, JsonReportRoundTripsThroughVerify) {
    auto arr = path("wiring.json");
    ASSERT_EQ(run({"generate", "--kind", "wiring_diagram", "--n", "12", "--seed", "3", "--out", arr}).code, 0);
    auto r = run({"ordinary-pseudo", arr, "--json", "--trace"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rep = io::json::parse(r.out);
    ASSERT_TRUE(rep.contains("trace"));
    auto claim = write("claim.json", r.out);
    EXPECT_EQ(run({"verify", arr, "--claim", claim}).code, 0);
    // Re-serializing the parsed report gives the same document.
    EXPECT_EQ(io::json::parse(rep.dump()), rep);
}

TEST_F(Files, VerifyRefutesPerturbedClaims) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto arr = path("a.json");
        ASSERT_EQ(run({"generate", "--kind", "random", "--n", "12", "--seed", std::to_string(seed), "--out", arr}).code, 0);
        auto r = run({"ordinary2d", arr, "--json"});
        ASSERT_EQ(r.code, 0) << r.err;
        auto rep = io::json::parse(r.out);
        EXPECT_EQ(run({"verify", arr, "--claim", write("ok.json", r.out)}).code, 0);
        auto x = parse_scalar(rep["result"]["point"][0].get<std::string>());
        rep["result"]["point"][0] = to_string(Scalar(x + Scalar(1, 7)));
        EXPECT_EQ(run({"verify", arr, "--claim", write("bad.json", rep.dump())}).code, 1);
    }
}

TEST_F(Files, MonoPseudoOnBiasedInput) {
    auto arr = path("biased.json");
    ASSERT_EQ(run({"generate", "--kind", "biased", "--n", "10", "--seed", "1", "--color-bias", "0.3", "--out", arr}).code, 0);
    auto r = run({"mono-pseudo", arr});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("color blue"), std::string::npos);
    // Matches the oracle: only blue monochromatic crossings exist.
    auto ps = io::pseudolines_from_json(io::read_json_file(arr));
    auto cls = oracle::classify(oracle::enumerate_2d(ps), 2, oracle::colors_of<Pseudoline>(ps));
    EXPECT_TRUE(cls.monochromatic_red.empty());
    EXPECT_FALSE(cls.monochromatic_blue.empty());
    auto claim = write("claim.json", R"({"point": ["0", "0"], "color": "red"})");
    EXPECT_EQ(run({"verify", arr, "--claim", claim}).code, 1);
}

TEST_F(Files, OrdinaryNdAndVerdicts) {
    auto arr = write("h.json", R"({"d": 3, "hyperplanes": [
        {"normal": ["1","0","0"], "offset": "0"}, {"normal": ["0","1","0"], "offset": "0"},
        {"normal": ["0","0","1"], "offset": "0"}, {"normal": ["1","1","1"], "offset": "1"}]})");
    auto r = run({"ordinary-nd", arr, "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(io::json::parse(r.out)["result"]["witnesses"].size(), 3u);

    auto flat = write("flat.json", R"({"d": 3, "hyperplanes": [
        {"normal": ["1","0","0"], "offset": "0"}, {"normal": ["1","0","0"], "offset": "1"},
        {"normal": ["0","1","0"], "offset": "0"}, {"normal": ["0","1","0"], "offset": "1"}]})");
    r = run({"ordinary-nd", flat, "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rep = io::json::parse(r.out);
    EXPECT_EQ(rep["result"]["verdict"], "no_intersection_point");
    EXPECT_EQ(run({"verify", flat, "--claim", write("v.json", r.out)}).code, 0);
    EXPECT_EQ(run({"verify", arr, "--claim", write("w.json", r.out)}).code, 1);
}

TEST_F(Files, SegmentCapFromEnvironment) {
    auto arr = path("w.json");
    ASSERT_EQ(run({"generate", "--kind", "wiring_diagram", "--n", "120", "--seed", "1", "--out", arr}).code, 0);
    EXPECT_EQ(run({"ordinary-pseudo", arr}).code, 1);
    ::setenv("ORDINARY_SMAX", "100000", 1);
    EXPECT_EQ(run({"ordinary-pseudo", arr}).code, 0);
    EXPECT_EQ(run({"--no-validate", "ordinary-pseudo", arr}).code, 0);
    ::setenv("ORDINARY_SMAX", "lots", 1);
    EXPECT_EQ(run({"ordinary-pseudo", arr}).code, 1);
    ::unsetenv("ORDINARY_SMAX");
}

TEST_F(Files, RenderWritesSvg) {
    auto arr = write("triangle.json", kTriangle);
    auto svg = path("t.svg");
    ASSERT_EQ(run({"render", arr, "--out", svg, "--highlight", "0,1"}).code, 0);
    std::ifstream in(svg);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    EXPECT_EQ(text.rfind("<svg", 0), 0u);
    EXPECT_NE(text.find("class=\"highlight\""), std::string::npos);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n') > 3, true);

    auto ps = path("p.json");
    ASSERT_EQ(run({"generate", "--kind", "bichromatic", "--n", "6", "--out", ps}).code, 0);
    EXPECT_EQ(run({"render", ps, "--out", path("p.svg")}).code, 0);
}

TEST_F(Files, BenchReportsRatios) {
    auto r = run({"bench", "--kind", "random", "--sizes", "64,128", "--seed", "1", "--runs", "3", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rep = io::json::parse(r.out);
    ASSERT_EQ(rep["rows"].size(), 2u);
    EXPECT_TRUE(rep["rows"][0]["ratio"].is_null());
    EXPECT_GT(rep["rows"][1]["ratio"].get<double>(), 0.0);
    EXPECT_EQ(run({"bench", "--kind", "random", "--sizes", "64,x", "--seed", "1"}).code, 3);
}

TEST(Svg, ViewportHasMarginAndHighlightRadius) {
    auto box = svg::viewport({P(0, 0), P(10, 10)});
    EXPECT_DOUBLE_EQ(box.xmin, -1.0);
    EXPECT_DOUBLE_EQ(box.xmax, 11.0);
    svg::Canvas c(box, 500);
    c.highlight(5, 5);
    EXPECT_NE(c.str().find("r=\"5\""), std::string::npos);
}
