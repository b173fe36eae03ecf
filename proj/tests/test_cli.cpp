#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tropkit/bivariate.hpp"
#include "tropkit/cli.hpp"
#include "tropkit/error.hpp"
#include "tropkit/json_io.hpp"
#include "tropkit/svg.hpp"

using namespace tropkit;
using json_io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("tropkit_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, RootsOfSquare) {
  auto r = run({"roots", "0 + x^2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out), json::parse(R"([{"root":"0","order":2}])"));
}

TEST(Cli, FloorInvariant) {
  auto r = run({"floor", "invariant", "3", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q^-1 + 10 + q\n");
  EXPECT_EQ(run({"floor", "invariant", "4", "0", "--at", "q=-1"}).out, "240\n");
  EXPECT_EQ(run({"floor", "invariant", "4", "2", "--at", "q=1"}).out, "27\n");
}

TEST(Cli, FanIntersectBothSpellings) {
  auto L = temp_file("L.json", R"({"n":3,"rays":[{"dir":[1,1,0],"w":1},{"dir":[-1,-1,0],"w":1}]})");
  auto C = temp_file("C.json", R"({"n":3,"rays":[{"dir":[-2,-3,0],"w":1},{"dir":[0,1,1],"w":1},{"dir":[2,2,-1],"w":1}]})");
  EXPECT_EQ(run({"fan", "intersect", "--plane", "3", L, C}).out, "-1\n");
  EXPECT_EQ(run({"fan", "intersect", "3", C, C}).out, "-4\n");
  EXPECT_EQ(run({"fan", "degree", C}).out, "3\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"roots", "x + +"}).code, 2);
  EXPECT_EQ(run({"roots", "0 + x", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  auto r = run({"patchwork", "0 + x + y", "--twists", "e0"});
  EXPECT_EQ(r.code, 1);
  auto err = json::parse(r.err);
  EXPECT_EQ(err["error"], "precondition");
  EXPECT_EQ(run({"intersect", "0 + x + y", "1 + x + y"}).code, 1);
  EXPECT_EQ(run({"intersect", "0 + x + y", "1 + x + y", "--perturb"}).code, 0);
  auto bad = temp_file("bad.json", "{not json");
  EXPECT_EQ(run({"fan", "degree", bad}).code, 2);
}

TEST(Cli, ReproducePaper) {
  auto r = run({"reproduce", "paper"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  for (const auto& row : cli::golden_checks()) EXPECT_TRUE(row.pass()) << row.name;
}

TEST(Cli, GraphCommands) {
  auto line = temp_file("line.json",
                        R"({"vertices":[{"inf":false},{"inf":true},{"inf":true},{"inf":true}],
                            "edges":[{"a":0,"b":1,"len":"inf"},{"a":0,"b":2,"len":"inf"},{"a":0,"b":3,"len":"inf"}],
                            "removed":[1]})");
  auto h = json::parse(run({"graph", "cohomology", line}).out);
  EXPECT_EQ(h["cohomology"]["h00"], 1);
  EXPECT_EQ(h["cohomology"]["h11"], 0);
  EXPECT_EQ(json::parse(run({"graph", "genus", line}).out)["genus"], 0);
  auto mod = run({"graph", "modify", line, "--vertex", "0"});
  ASSERT_EQ(mod.code, 0) << mod.err;
  auto g = json_io::graph_from_json(json::parse(mod.out));
  EXPECT_EQ(g.graph.vertices.size(), 5u);
  EXPECT_EQ(g.removed, std::set<int>{1});
}

TEST(Cli, MatroidFan) {
  auto m = temp_file("braid.json", R"({"type":"braid"})");
  auto r = json::parse(run({"matroid", "fan", m, "--check-balancing", "--link"}).out);
  EXPECT_EQ(r["balanced"], true);
  EXPECT_EQ(r["link"]["vertices"], 10);
  EXPECT_EQ(r["link_girth"], 5);
  auto u = temp_file("u.json", R"({"n":3,"type":"uniform","rank":3})");
  EXPECT_EQ(json::parse(run({"matroid", "fan", u, "--check-balancing"}).out)["balanced"], true);
}

TEST(Cli, Dequant) {
  auto r = json::parse(run({"dequant", "--samples", "10000"}).out);
  EXPECT_EQ(r["violations"], 0);
  EXPECT_EQ(json::parse(run({"dequant", "1", "1", "2"}).out)["within"], true);
}

TEST(JsonRoundTrip, EveryEmittedValueReparses) {
  for (const char* text : {"0 + x + y", "1 + 2*x + 2*y + (-3)*x^2 + x*y + (-3)*y^2", "0 + x^2", "0 + 1/2*x*y + x^3 + y^2"}) {
    auto p = BivariatePoly::parse(text);
    auto c = tropical_curve(p);
    auto j = json_io::to_json(c);
    EXPECT_EQ(json_io::to_json(json_io::plane_curve_from_json(j)), j);
    auto s = json_io::to_json(*c.dual);
    EXPECT_EQ(json_io::to_json(json_io::subdivision_from_json(s)), s);
    auto report = json::parse(run({"curve", text}).out);
    EXPECT_EQ(json_io::to_json(json_io::plane_curve_from_json(report["curve"])), report["curve"]);
  }
  auto pw = json::parse(run({"patchwork", "0 + x + y + (-1)*x^2 + 1*x*y + (-1)*y^2"}).out)["result"];
  EXPECT_EQ(json_io::to_json(json_io::patchwork_from_json(pw)), pw);
  auto inter = json::parse(run({"intersect", "0 + x + y", "5 + 2*x + 1*y + (-3)*x^2 + x*y + (-4)*y^2"}).out);
  EXPECT_EQ(json_io::to_json(json_io::intersection_from_json(inter)), inter);
  auto roots = json::parse(run({"roots", "x + 1*x^3 + (-2)*x^5"}).out);
  EXPECT_EQ(json_io::to_json(json_io::roots_from_json(roots)), roots);
  auto fac = json::parse(run({"factor", "x + 1*x^3 + (-2)*x^5"}).out);
  fac.erase("text");
  EXPECT_EQ(json_io::to_json(json_io::factorization_from_json(fac)), fac);
  auto diagrams = json::parse(run({"floor", "enumerate", "4", "1", "--json"}).out);
  for (const auto& d : diagrams) {
    EXPECT_EQ(json_io::to_json(json_io::floor_diagram_from_json(d["diagram"])), d["diagram"]);
    EXPECT_EQ(json_io::to_json(json_io::laurent_from_json(d["multiplicity"]["G"])), d["multiplicity"]["G"]);
  }
  auto inv = json::parse(run({"floor", "invariant", "4", "0", "--json"}).out);
  EXPECT_EQ(json_io::laurent_from_json(inv["G"]).to_string(), inv["G_text"]);
  auto m = json_io::to_json(Matroid::braid());
  EXPECT_EQ(json_io::to_json(json_io::matroid_from_json(m)), m);
  auto fan = json_io::to_json(matroid_fan(Matroid::braid()));
  EXPECT_EQ(json_io::to_json(json_io::polyhedral_fan_from_json(fan)), fan);
  auto link = json_io::to_json(fan_link(matroid_fan(Matroid::braid())));
  EXPECT_EQ(json_io::to_json(json_io::link_graph_from_json(link)), link);
  FanCurve fc{3, {{{1, 1, 0}, 2}, {{-1, -1, 0}, 2}}};
  EXPECT_EQ(json_io::to_json(json_io::fan_curve_from_json(json_io::to_json(fc))), json_io::to_json(fc));
  SignDistribution s{{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, 1}};
  EXPECT_EQ(json_io::signs_from_json(json_io::to_json(s)), s);
  MetricGraph g;
  g.vertices = {{false}, {false}, {true}};
  g.edges = {{0, 1, make_rational(3, 2)}, {0, 1, Rational(2)}, {1, 2, std::nullopt}};
  auto gj = json_io::to_json(g, {2});
  auto back = json_io::graph_from_json(gj);
  EXPECT_EQ(json_io::to_json(back.graph, back.removed), gj);
  auto h = json_io::to_json(curve_cohomology(g));
  EXPECT_EQ(json_io::to_json(json_io::cohomology_from_json(h)), h);
}

TEST(JsonRoundTrip, MalformedInputIsAParseError) {
  EXPECT_THROW(json_io::plane_curve_from_json(json::parse(R"({"vertices":[["0","0"]],"edges":[{"v":[0,5],"w":1}]})")),
               ParseError);
  EXPECT_THROW(json_io::plane_curve_from_json(json::parse(R"({"vertices":[],"edges":[{"line":{"p":["0","0"],"dir":[2,0]},"w":1}]})")),
               ParseError);
  EXPECT_THROW(json_io::floor_diagram_from_json(json::parse(R"({"d":2,"g":0,"edges":[{"s":1,"t":3,"w":1}],"legs":[1,2]})")),
               ParseError);
  EXPECT_THROW(json_io::laurent_from_json(json::parse(R"({"x":1})")), ParseError);
  EXPECT_THROW(json_io::graph_from_json(json::parse(R"({"vertices":[{"inf":1}],"edges":[]})")), ParseError);
  EXPECT_THROW(json_io::parse_text("[1,"), ParseError);
}

TEST(Svg, DeterministicOutput) {
  auto c = tropical_curve(BivariatePoly::parse("0 + x^2 + 1*x*y + y^2 + (-1)*x + 2*y"));
  auto a = curve_svg(c), b = curve_svg(tropical_curve(BivariatePoly::parse("0 + x^2 + 1*x*y + y^2 + (-1)*x + 2*y")));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<?xml", 0), 0u);
  EXPECT_NE(a.find("<svg"), std::string::npos);
  auto line = tropical_curve(BivariatePoly::parse("0 + x + y"));
  auto p = patchwork_svg(line, patchwork(line, {}));
  EXPECT_EQ(p, patchwork_svg(line, patchwork(line, {})));
  EXPECT_NE(curve_svg(tropical_curve(BivariatePoly::parse("0 + x^2"))).find(">2</text>"), std::string::npos);
}
