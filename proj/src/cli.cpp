#include "tropkit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "tropkit/bivariate.hpp"
#include "tropkit/error.hpp"
#include "tropkit/json_io.hpp"
#include "tropkit/svg.hpp"

namespace tropkit::cli {

using json_io::json;
using json_io::to_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const std::string& path) { return json_io::parse_text(read_file(path)); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text;
}

// "e3,e7" or "3,7" -> {3, 7}
TwistSet parse_twists(const std::string& text) {
  TwistSet t;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty()) continue;
    std::string digits = item[0] == 'e' ? item.substr(1) : item;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw ParseError("bad edge name '" + item + "'");
    }
    t.push_back(std::stoi(digits));
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

json multiplicities_json(long long m_C, long long m_R, const LaurentQ& G) {
  return {{"m_C", m_C}, {"m_R", m_R}, {"G", to_json(G)}, {"G_text", G.to_string()}};
}

json curve_report(const BivariatePoly& p) {
  PlaneCurve c = tropical_curve(p);
  json o = {{"curve", to_json(c)}, {"balanced", check_balanced(c)}, {"nonsingular", is_nonsingular(c)},
            {"betti", first_betti_number(c)}, {"degree", curve_degree(c)}};
  try {
    auto np = nodal_profile(c, p.degree());
    o["nodal"] = {{"is_nodal", np.is_nodal}};
    if (np.delta) o["nodal"]["delta"] = *np.delta;
    if (np.genus) o["nodal"]["genus"] = *np.genus;
  } catch (const PreconditionError&) {
    o["nodal"] = nullptr;
  }
  try {
    auto m = curve_multiplicities(c);
    o["multiplicities"] = multiplicities_json(m.m_C, m.m_R, m.G);
  } catch (const PreconditionError&) {
    o["multiplicities"] = nullptr;
  }
  return o;
}

FanCurve fan_curve(std::initializer_list<IntVec> dirs) {
  FanCurve c{3, {}};
  for (const auto& d : dirs) c.rays.push_back({d, 1});
  return c;
}

std::string join(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::string diamond(const CurveCohomology& h) {
  return std::to_string(h.h00) + "," + std::to_string(h.h01) + "," + std::to_string(h.h10) + "," + std::to_string(h.h11);
}

std::string marking_counts(std::initializer_list<std::pair<int, int>> dg) {
  std::vector<long long> counts;
  for (auto [d, g] : dg) {
    for (const auto& D : enumerate_diagrams(d, g)) counts.push_back(count_markings(D));
  }
  return join(counts);
}

// A star with one finite centre and the given number of infinite leaves.
MetricGraph star(int leaves) {
  MetricGraph g;
  g.vertices.push_back({false});
  for (int k = 0; k < leaves; ++k) {
    g.vertices.push_back({true});
    g.edges.push_back({0, k + 1, std::nullopt});
  }
  return g;
}

// Cycle of three finite vertices, each with an infinite leaf.
MetricGraph triangle_with_leaves() {
  MetricGraph g;
  for (int k = 0; k < 3; ++k) g.vertices.push_back({false});
  for (int k = 0; k < 3; ++k) g.edges.push_back({k, (k + 1) % 3, make_rational(k + 1)});
  for (int k = 0; k < 3; ++k) {
    g.vertices.push_back({true});
    g.edges.push_back({k, 3 + k, std::nullopt});
  }
  return g;
}

MetricGraph theta() {
  MetricGraph g;
  g.vertices = {{false}, {false}};
  for (int k = 0; k < 3; ++k) g.edges.push_back({0, 1, make_rational(k + 1)});
  return g;
}

// Genus 3: K4.
MetricGraph complete4() {
  MetricGraph g;
  g.vertices.assign(4, {false});
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) g.edges.push_back({a, b, make_rational(1)});
  }
  return g;
}

}  // namespace

std::vector<GoldenCheck> golden_checks() {
  std::vector<GoldenCheck> rows;
  auto add = [&](std::string name, std::string expected, std::string actual) {
    rows.push_back({std::move(name), std::move(expected), std::move(actual)});
  };
  auto G = [](int d, int g) { return refined_invariant(d, g); };
  add("G_{3,0}", "q^-1 + 10 + q", G(3, 0).G.to_string());
  add("G_{4,0}", "q^-3 + 13q^-2 + 94q^-1 + 404 + 94q + 13q^2 + q^3", G(4, 0).G.to_string());
  add("G_{4,1}", "3q^-2 + 33q^-1 + 153 + 33q + 3q^2", G(4, 1).G.to_string());
  add("G_{4,2}", "3q^-1 + 21 + 3q", G(4, 2).G.to_string());
  add("G_{4,3}", "1", G(4, 3).G.to_string());
  add("N_{3,0}", "12", std::to_string(G(3, 0).N));
  add("W_{3,0}", "8", std::to_string(G(3, 0).W));
  add("N_{4,0}", "620", std::to_string(G(4, 0).N));
  add("W_{4,0}", "240", std::to_string(G(4, 0).W));
  add("N_{4,1}", "225", std::to_string(G(4, 1).N));
  add("N_{4,2}", "27", std::to_string(G(4, 2).N));

  add("markings d<=3", join({1, 1, 1, 1, 5, 3}), marking_counts({{1, 0}, {2, 0}, {3, 1}, {3, 0}}));
  add("markings d=4 g=3,2", join({1, 7, 2, 5, 1, 3}), marking_counts({{4, 3}, {4, 2}}));
  add("markings d=4 g=1", join({15, 1, 6, 26, 9, 4, 7, 2, 21, 6, 21}), marking_counts({{4, 1}}));
  add("markings d=4 g=0", join({35, 40, 8, 15, 6, 1, 45, 3, 18, 102, 15, 15}), marking_counts({{4, 0}}));

  FanPlane plane;
  FanCurve C = fan_curve({{-2, -3, 0}, {0, 1, 1}, {2, 2, -1}});
  FanCurve L = fan_curve({{1, 1, 0}, {-1, -1, 0}});
  add("(L^2)_0", "-1", std::to_string(local_intersection(plane, L, L)));
  add("(C^2)_0", "-4", std::to_string(local_intersection(plane, C, C)));
  add("(C.L)_0", "-1", std::to_string(local_intersection(plane, C, L)));
  add("deg C", "3", std::to_string(fan_degree(C)));
  add("adjunction C", "-2", std::to_string(adjunction_bound(plane, C)));
  add("approximable C", "false", trivalent_approximable(plane, C) ? "true" : "false");
  add("approximable L", "true", trivalent_approximable(plane, L) ? "true" : "false");

  auto link = fan_link(matroid_fan(Matroid::braid()));
  int max_deg = 0, min_deg = 1 << 30;
  for (int k : link.degrees()) {
    max_deg = std::max(max_deg, k);
    min_deg = std::min(min_deg, k);
  }
  add("braid link", "V=10 E=15 deg=3 girth=5",
      "V=" + std::to_string(link.vertices) + " E=" + std::to_string(link.edges.size()) +
          " deg=" + (min_deg == max_deg ? std::to_string(max_deg) : "mixed") + " girth=" + std::to_string(link.girth()));

  add("diamond L", "1,0,0,0", diamond(curve_cohomology(star(3), {1})));
  add("diamond L'", "1,0,2,0", diamond(curve_cohomology(star(3), {1, 2, 3})));
  add("diamond genus 1", "1,1,1,1", diamond(curve_cohomology(triangle_with_leaves())));
  add("diamond genus 2", "1,2,2,1", diamond(curve_cohomology(theta())));
  add("diamond genus 3", "1,3,3,1", diamond(curve_cohomology(complete4())));
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computational tropical geometry", "tropkit"};
  app.require_subcommand(1, 1);

  std::string poly, poly2, svg_path, twists_text, signs_path, at, file, plane_flag;
  std::vector<std::string> fan_args;
  bool perturb = false, as_json = false, check_balancing = false, link = false;
  int d = 0, g = 0, samples = 0, vertex = -1, edge = -1;
  unsigned seed = 1;
  double tol = 1e-12;
  std::string x_text, y_text, t_text, distance_text = "0";

  auto* roots_cmd = app.add_subcommand("roots", "Roots of a univariate tropical polynomial");
  roots_cmd->add_option("poly", poly)->required();
  auto* factor_cmd = app.add_subcommand("factor", "Factor a univariate tropical polynomial");
  factor_cmd->add_option("poly", poly)->required();

  auto* dequant_cmd = app.add_subcommand("dequant", "Maslov dequantization x +_t y");
  dequant_cmd->add_option("x", x_text);
  dequant_cmd->add_option("y", y_text);
  dequant_cmd->add_option("t", t_text);
  dequant_cmd->add_option("--samples", samples, "Check the bound on random samples instead");
  dequant_cmd->add_option("--seed", seed);
  dequant_cmd->add_option("--tol", tol);

  auto* curve_cmd = app.add_subcommand("curve", "Tropical curve of a bivariate polynomial");
  curve_cmd->add_option("poly", poly)->required();
  curve_cmd->add_option("--svg", svg_path);
  auto* sub_cmd = app.add_subcommand("subdivision", "Dual subdivision of the Newton polygon");
  sub_cmd->add_option("poly", poly)->required();
  auto* inter_cmd = app.add_subcommand("intersect", "Stable intersection of two curves");
  inter_cmd->add_option("poly1", poly)->required();
  inter_cmd->add_option("poly2", poly2)->required();
  inter_cmd->add_flag("--perturb", perturb, "Shift the second curve by (eps, eps^2)");

  auto* patch_cmd = app.add_subcommand("patchwork", "Combinatorial patchworking");
  patch_cmd->add_option("poly", poly)->required();
  auto* twists_opt = patch_cmd->add_option("--twists", twists_text, "Twisted edges, e.g. e3,e7");
  patch_cmd->add_option("--signs", signs_path, "Sign distribution JSON")->excludes(twists_opt);
  patch_cmd->add_option("--svg", svg_path);

  auto* floor_cmd = app.add_subcommand("floor", "Floor diagrams");
  floor_cmd->require_subcommand(1, 1);
  auto* floor_enum = floor_cmd->add_subcommand("enumerate", "List floor diagrams of degree d and genus g");
  floor_enum->add_option("d", d)->required();
  floor_enum->add_option("g", g)->required();
  floor_enum->add_flag("--json", as_json);
  auto* floor_inv = floor_cmd->add_subcommand("invariant", "Refined invariant G_{d,g}");
  floor_inv->add_option("d", d)->required();
  floor_inv->add_option("g", g)->required();
  floor_inv->add_option("--at", at, "q=1 or q=-1");
  floor_inv->add_flag("--json", as_json);

  auto* fan_cmd = app.add_subcommand("fan", "Fan tropical curves in the plane");
  fan_cmd->require_subcommand(1, 1);
  auto* fan_deg = fan_cmd->add_subcommand("degree", "Degree of a fan curve");
  fan_deg->add_option("curve", file)->required();
  auto* fan_int = fan_cmd->add_subcommand("intersect", "Local intersection number at the origin");
  fan_int->add_option("args", fan_args, "[plane-n] c1.json c2.json")->required();
  fan_int->add_option("--plane", plane_flag);
  auto* fan_adj = fan_cmd->add_subcommand("adjunction", "Self-intersection and adjunction bound");
  fan_adj->add_option("curve", file)->required();

  auto* matroid_cmd = app.add_subcommand("matroid", "Matroid fans");
  matroid_cmd->require_subcommand(1, 1);
  auto* matroid_fan_cmd = matroid_cmd->add_subcommand("fan", "Fan of a matroid");
  matroid_fan_cmd->add_option("matroid", file)->required();
  matroid_fan_cmd->add_flag("--check-balancing", check_balancing);
  matroid_fan_cmd->add_flag("--link", link);

  auto* graph_cmd = app.add_subcommand("graph", "Abstract tropical curves");
  graph_cmd->require_subcommand(1, 1);
  auto* graph_genus = graph_cmd->add_subcommand("genus", "Genus of a metric graph");
  graph_genus->add_option("graph", file)->required();
  auto* graph_coh = graph_cmd->add_subcommand("cohomology", "Tropical (co)homology ranks");
  graph_coh->add_option("graph", file)->required();
  auto* graph_mod = graph_cmd->add_subcommand("modify", "Elementary modification");
  graph_mod->add_option("graph", file)->required();
  auto* vertex_opt = graph_mod->add_option("--vertex", vertex);
  graph_mod->add_option("--edge", edge)->excludes(vertex_opt);
  graph_mod->add_option("--at", distance_text, "Distance from the edge's first endpoint");

  auto* repro_cmd = app.add_subcommand("reproduce", "Compare against the golden table");
  repro_cmd->require_subcommand(1, 1);
  auto* repro_paper = repro_cmd->add_subcommand("paper", "Worked examples and marking counts");

  auto fail = [&](const char* kind, const std::string& message, int code) {
    err << json{{"error", kind}, {"message", message}}.dump() << "\n";
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail("parse", e.what(), 2);
  }

  try {
    if (roots_cmd->parsed()) {
      out << to_json(roots(TropicalUnivariatePoly::parse(poly))).dump() << "\n";
    } else if (factor_cmd->parsed()) {
      auto f = factor(TropicalUnivariatePoly::parse(poly));
      json o = to_json(f);
      o["text"] = f.to_string();
      out << o.dump() << "\n";
    } else if (dequant_cmd->parsed()) {
      if (samples > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> coord(-50.0, 50.0), base(1.001, 100.0);
        long long violations = 0;
        for (int k = 0; k < samples; ++k) {
          double x = coord(rng), y = coord(rng), t = base(rng);
          double v = dequantized_add(x, y, t), m = std::max(x, y);
          if (v < m - tol || v > m + std::log(2.0) / std::log(t) + tol) ++violations;
        }
        out << json{{"samples", samples}, {"violations", violations}, {"tolerance", tol}}.dump() << "\n";
      } else {
        if (x_text.empty() || y_text.empty() || t_text.empty()) throw ParseError("dequant needs x y t or --samples");
        Rational x = parse_rational(x_text), y = parse_rational(y_text), t = parse_rational(t_text);
        double v = dequantized_add(x, y, t);
        double m = std::max(x, y).get_d();
        double upper = m + std::log(2.0) / std::log(t.get_d());
        out << json{{"value", v}, {"max", m}, {"upper", upper}, {"within", v >= m - tol && v <= upper + tol}}.dump()
            << "\n";
      }
    } else if (curve_cmd->parsed()) {
      auto p = BivariatePoly::parse(poly);
      json o = curve_report(p);
      if (!svg_path.empty()) write_file(svg_path, curve_svg(tropical_curve(p)));
      out << o.dump() << "\n";
    } else if (sub_cmd->parsed()) {
      out << to_json(dual_subdivision(BivariatePoly::parse(poly))).dump() << "\n";
    } else if (inter_cmd->parsed()) {
      auto a = tropical_curve(BivariatePoly::parse(poly));
      auto b = tropical_curve(BivariatePoly::parse(poly2));
      auto r = stable_intersection(a, b, perturb);
      if (!r.transverse) throw PreconditionError("curves do not intersect transversally; use --perturb");
      out << to_json(r).dump() << "\n";
    } else if (patch_cmd->parsed()) {
      auto c = tropical_curve(BivariatePoly::parse(poly));
      TwistSet t;
      if (!signs_path.empty()) {
        t = twists_from_signs(c, json_io::signs_from_json(read_json(signs_path)));
      } else {
        t = parse_twists(twists_text);
      }
      auto r = patchwork(c, t);
      json names = json::array();
      for (int e : t) names.push_back("e" + std::to_string(e));
      if (!svg_path.empty()) write_file(svg_path, patchwork_svg(c, r));
      out << json{{"twists", names}, {"result", to_json(r)}}.dump() << "\n";
    } else if (floor_enum->parsed()) {
      auto diagrams = enumerate_diagrams(d, g);
      if (as_json) {
        json a = json::array();
        for (const auto& D : diagrams) {
          auto m = diagram_multiplicities(D);
          a.push_back({{"diagram", to_json(D)}, {"markings", count_markings(D)},
                       {"multiplicity", multiplicities_json(m.m_C, m.m_R, m.G)}});
        }
        out << a.dump() << "\n";
      } else {
        for (const auto& D : diagrams) {
          auto m = diagram_multiplicities(D);
          out << to_json(D).dump() << "  markings=" << count_markings(D) << "  G=" << m.G.to_string() << "\n";
        }
      }
    } else if (floor_inv->parsed()) {
      auto inv = refined_invariant(d, g);
      if (as_json) {
        out << json{{"G", to_json(inv.G)}, {"G_text", inv.G.to_string()}, {"N", inv.N}, {"W", inv.W}}.dump() << "\n";
      } else if (at.empty()) {
        out << inv.G.to_string() << "\n";
      } else if (at == "q=1" || at == "1") {
        out << inv.N << "\n";
      } else if (at == "q=-1" || at == "-1") {
        out << inv.W << "\n";
      } else {
        throw ParseError("--at takes q=1 or q=-1");
      }
    } else if (fan_deg->parsed()) {
      out << fan_degree(json_io::fan_curve_from_json(read_json(file))) << "\n";
    } else if (fan_int->parsed()) {
      std::string n_text = plane_flag;
      std::vector<std::string> files = fan_args;
      if (n_text.empty()) {
        if (files.size() != 3) throw ParseError("fan intersect needs <plane-n> <c1.json> <c2.json>");
        n_text = files[0];
        files.erase(files.begin());
      }
      if (files.size() != 2) throw ParseError("fan intersect needs two curve files");
      FanPlane plane;
      try {
        plane.n = std::stoi(n_text);
      } catch (const std::exception&) {
        throw ParseError("bad plane dimension '" + n_text + "'");
      }
      auto c1 = json_io::fan_curve_from_json(read_json(files[0]));
      auto c2 = json_io::fan_curve_from_json(read_json(files[1]));
      if (c1.n != plane.n || c2.n != plane.n) throw PreconditionError("curve and plane dimensions differ");
      out << local_intersection(plane, c1, c2) << "\n";
    } else if (fan_adj->parsed()) {
      auto c = json_io::fan_curve_from_json(read_json(file));
      FanPlane plane;
      plane.n = c.n;
      json o = {{"degree", fan_degree(c)}, {"self_intersection", local_intersection(plane, c, c)},
                {"adjunction", adjunction_bound(plane, c)}};
      if (c.n == 3 && c.rays.size() <= 3) o["trivalent_approximable"] = trivalent_approximable(plane, c);
      out << o.dump() << "\n";
    } else if (matroid_fan_cmd->parsed()) {
      auto m = json_io::matroid_from_json(read_json(file));
      auto f = matroid_fan(m);
      json o = {{"fan", to_json(f)}};
      if (check_balancing) o["balanced"] = verify_balancing(f);
      if (link) {
        auto l = fan_link(f);
        o["link"] = to_json(l);
        o["link_girth"] = l.girth();
        o["link_degrees"] = l.degrees();
      }
      out << o.dump() << "\n";
    } else if (graph_genus->parsed()) {
      auto in = json_io::graph_from_json(read_json(file));
      auto genera = component_genera(in.graph);
      if (genera.size() == 1) {
        out << json{{"genus", genera[0]}}.dump() << "\n";
      } else {
        out << json{{"component_genera", genera}}.dump() << "\n";
      }
    } else if (graph_coh->parsed()) {
      auto in = json_io::graph_from_json(read_json(file));
      out << json{{"cohomology", to_json(curve_cohomology(in.graph, in.removed))},
                  {"homology", to_json(curve_homology(in.graph, in.removed))}}
                 .dump()
          << "\n";
    } else if (graph_mod->parsed()) {
      auto in = json_io::graph_from_json(read_json(file));
      GraphPoint p;
      if (vertex >= 0) {
        p.vertex = vertex;
      } else if (edge >= 0) {
        p.edge = edge;
        p.distance = parse_rational(distance_text);
      } else {
        throw ParseError("graph modify needs --vertex or --edge");
      }
      out << to_json(elementary_modification(in.graph, p), in.removed).dump() << "\n";
    } else if (repro_paper->parsed()) {
      bool all = true;
      for (const auto& row : golden_checks()) {
        all = all && row.pass();
        out << (row.pass() ? "PASS " : "FAIL ") << row.name << ": " << row.actual;
        if (!row.pass()) out << " (expected " << row.expected << ")";
        out << "\n";
      }
      out << (all ? "all golden values reproduced" : "golden table mismatch") << "\n";
      return all ? 0 : 1;
    }
  } catch (const ParseError& e) {
    return fail("parse", e.what(), 2);
  } catch (const PreconditionError& e) {
    return fail("precondition", e.what(), 1);
  }
  return 0;
}

}  // namespace tropkit::cli
