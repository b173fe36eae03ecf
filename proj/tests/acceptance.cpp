// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "tropkit/error.hpp"
#include "tropkit/fan.hpp"
#include "tropkit/floor_diagram.hpp"
#include "tropkit/intersection.hpp"
#include "tropkit/matroid.hpp"
#include "tropkit/metric_graph.hpp"
#include "tropkit/patchwork.hpp"
#include "tropkit/scalar.hpp"

using namespace tropkit;

namespace {

struct Check {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long long binom(long long n, long long k) {
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string sorted_join(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  std::string s;
  for (auto x : v) s += std::to_string(x) + ",";
  return s;
}

std::vector<long long> markings(int d, int g) {
  std::vector<long long> v;
  for (const auto& D : enumerate_diagrams(d, g)) v.push_back(count_markings(D));
  return v;
}

Rational rnd(std::mt19937_64& rng) {
  return make_rational(static_cast<long long>(rng() % 49) - 24, 1 + static_cast<long long>(rng() % 4));
}

BivariatePoly random_poly(std::mt19937_64& rng) {
  for (;;) {
    std::map<Monomial, Rational> t;
    int n = 3 + static_cast<int>(rng() % 8);
    for (int k = 0; k < n; ++k) t[{static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)}] = rnd(rng);
    BivariatePoly p(t);
    if (polygon_dim(p.newton_polygon()) == 2) return p;
  }
}

BivariatePoly unimodular(const std::vector<LatticePoint>& poly, std::mt19937_64& rng) {
  std::map<Monomial, Rational> t;
  for (const auto& p : lattice_points(convex_hull(poly))) {
    t[{static_cast<int>(p.x), static_cast<int>(p.y)}] =
        Rational(static_cast<long>(-(p.x * p.x + p.y * p.y))) + make_rational(static_cast<long long>(rng() % 2000001) - 1000000, 100000000);
  }
  return BivariatePoly(t);
}

std::vector<LatticePoint> sorted(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void refined_invariants(Check& c) {
  struct Row {
    int d, g;
    const char* G;
  };
  for (Row r : {Row{3, 0, "q^-1 + 10 + q"}, Row{4, 2, "3q^-1 + 21 + 3q"}, Row{4, 1, "3q^-2 + 33q^-1 + 153 + 33q + 3q^2"},
                Row{4, 0, "q^-3 + 13q^-2 + 94q^-1 + 404 + 94q + 13q^2 + q^3"}}) {
    auto t0 = std::chrono::steady_clock::now();
    auto inv = refined_invariant(r.d, r.g);
    c.expect(seconds_since(t0) < 1.0, "too slow");
    c.expect(inv.G.to_string() == r.G, "G_{" + std::to_string(r.d) + "," + std::to_string(r.g) + "} = " + inv.G.to_string());
  }
  c.expect(refined_invariant(3, 0).N == 12 && refined_invariant(3, 0).W == 8, "N_3/W_3");
  c.expect(refined_invariant(4, 0).N == 620 && refined_invariant(4, 0).W == 240, "N_4/W_4");
  c.expect(refined_invariant(4, 1).N == 225, "N_{4,1}");
  c.expect(refined_invariant(4, 2).N == 27 && 27 == 3 * (4 - 1) * (4 - 1), "N_{4,2}");
}

void marking_counts(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<long long> small;
  for (auto [d, g] : {std::pair{1, 0}, {2, 0}, {3, 1}, {3, 0}}) {
    auto v = markings(d, g);
    small.insert(small.end(), v.begin(), v.end());
  }
  c.expect(sorted_join(small) == sorted_join({1, 1, 1, 1, 5, 3}), "degree <= 3: " + sorted_join(small));
  auto g32 = markings(4, 3);
  auto g2 = markings(4, 2);
  g32.insert(g32.end(), g2.begin(), g2.end());
  c.expect(sorted_join(g32) == sorted_join({1, 7, 2, 5, 1, 3}), "genus 3/2: " + sorted_join(g32));
  c.expect(sorted_join(markings(4, 1)) == sorted_join({15, 1, 6, 26, 9, 4, 7, 2, 21, 6, 21}), "genus 1");
  c.expect(sorted_join(markings(4, 0)) == sorted_join({35, 40, 8, 15, 6, 1, 45, 3, 18, 102, 15, 15}), "genus 0");
  c.expect(seconds_since(t0) < 10.0, "too slow");
}

void closed_forms(Check& c) {
  for (int d = 3; d <= 5; ++d) {
    int gmax = (d - 1) * (d - 2) / 2;
    c.expect(refined_invariant(d, gmax).G == LaurentQ::constant(1), "G_{d,gmax} != 1");
    LaurentQ expected({{-2, (d - 1) * (d - 2) / 2}, {0, (d - 1) * (2 * d - 1)}, {2, (d - 1) * (d - 2) / 2}});
    c.expect(refined_invariant(d, gmax - 1).G == expected, "G_{d,gmax-1} for d=" + std::to_string(d));
    for (int g = 0; g <= gmax; ++g) {
      auto G = refined_invariant(d, g).G;
      c.expect(!G.is_zero() && G.coeffs().rbegin()->second == binom(gmax, g),
               "top coefficient d=" + std::to_string(d) + " g=" + std::to_string(g));
    }
  }
}

void fan_values(Check& c) {
  FanPlane plane;
  FanCurve C{3, {{{-2, -3, 0}, 1}, {{0, 1, 1}, 1}, {{2, 2, -1}, 1}}};
  FanCurve L{3, {{{1, 1, 0}, 1}, {{-1, -1, 0}, 1}}};
  c.expect(local_intersection(plane, L, L) == -1, "L^2");
  c.expect(local_intersection(plane, C, C) == -4, "C^2");
  c.expect(local_intersection(plane, C, L) == -1, "C.L");
  c.expect(fan_degree(C) == 3, "deg C");
  c.expect(adjunction_bound(plane, C) == -2, "adjunction");
  c.expect(!trivalent_approximable(plane, C), "C approximable");
  c.expect(trivalent_approximable(plane, L), "L not approximable");
}

void matroid_fans(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto f = matroid_fan(Matroid::braid());
  c.expect(verify_balancing(f), "braid fan unbalanced");
  auto link = fan_link(f);
  auto deg = link.degrees();
  c.expect(link.vertices == 10 && link.edges.size() == 15 && link.girth() == 5 &&
               std::all_of(deg.begin(), deg.end(), [](int k) { return k == 3; }),
           "link is not the Petersen graph");
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      c.expect(verify_balancing(matroid_fan(Matroid::uniform(n, k))), "uniform fan unbalanced");
    }
  }
  c.expect(seconds_since(t0) < 5.0, "too slow");
}

void plane_curve_properties(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 200; ++it) {
    auto p = random_poly(rng);
    auto curve = tropical_curve(p);
    c.expect(check_balanced(curve), "unbalanced curve");
    const auto& sub = *curve.dual;
    for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
      c.expect(p.dominant(curve.vertices[v].x, curve.vertices[v].y) == sorted(sub.cells[curve.vertex_cells[v]].support),
               "vertex/2-cell duality");
    }
    for (const auto& e : curve.edges) {
      const auto& cell = sub.cells[e.dual_cell];
      RatPoint m = e.kind == EdgeKind::bounded
                       ? RatPoint{(curve.vertices[e.from].x + curve.vertices[e.to].x) / 2,
                                  (curve.vertices[e.from].y + curve.vertices[e.to].y) / 2}
                   : e.kind == EdgeKind::ray
                       ? RatPoint{curve.vertices[e.from].x + Rational(static_cast<long>(e.dir.x)), curve.vertices[e.from].y + Rational(static_cast<long>(e.dir.y))}
                       : e.anchor;
      c.expect(cell.dim == 1 && p.dominant(m.x, m.y) == sorted(cell.support), "edge/1-cell duality");
      LatticePoint s = cell.vertices[1] - cell.vertices[0];
      c.expect(s.x * e.dir.x + s.y * e.dir.y == 0, "orthogonality");
      c.expect(e.weight == lattice_length(cell.vertices[0], cell.vertices[1]), "weight");
    }
  }
  int transverse = 0, attempts = 0;
  while (transverse < 100 && attempts < 5000) {
    ++attempts;
    auto p = random_poly(rng), q = random_poly(rng);
    auto r = stable_intersection(tropical_curve(p), tropical_curve(q));
    if (!r.transverse) continue;
    ++transverse;
    c.expect(Rational(static_cast<long>(r.total)) == mixed_area(p.newton_polygon(), q.newton_polygon()), "Bernstein");
  }
  c.expect(transverse == 100, "not enough transverse pairs");
  for (long long d = 1; d <= 5; ++d) {
    auto curve = tropical_curve(unimodular(simplex(d), rng));
    c.expect(is_nonsingular(curve) && first_betti_number(curve) == (d - 1) * (d - 2) / 2, "b1 != interior points");
  }
  c.expect(seconds_since(t0) < 30.0, "too slow");
}

std::vector<std::vector<int>> cycle_space(const PlaneCurve& c) {
  auto bounded = c.bounded_edges();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << bounded.size()); ++mask) {
    std::vector<int> deg(c.vertices.size(), 0), z;
    for (std::size_t k = 0; k < bounded.size(); ++k) {
      if (!(mask >> k & 1)) continue;
      ++deg[c.edges[bounded[k]].from];
      ++deg[c.edges[bounded[k]].to];
      z.push_back(bounded[k]);
    }
    if (std::all_of(deg.begin(), deg.end(), [](int x) { return x % 2 == 0; })) out.push_back(z);
  }
  return out;
}

void patchworking(Check& c) {
  std::mt19937_64 rng(7);
  std::vector<std::vector<LatticePoint>> shapes{simplex(1), simplex(2), {{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                                {{0, 0}, {3, 0}, {3, 1}, {0, 1}}, {{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 1}}};
  for (const auto& shape : shapes) {
    auto curve = tropical_curve(unimodular(shape, rng));
    auto pts = lattice_points(convex_hull(shape));
    auto cycles = cycle_space(curve);
    c.expect(is_twist_admissible(curve, {}) && is_maximal_twist(curve, {}), "empty set not admissible/maximal");
    for (unsigned mask = 0; mask < (1u << pts.size()); ++mask) {
      SignDistribution s;
      for (std::size_t k = 0; k < pts.size(); ++k) s[pts[k]] = (mask >> k & 1) ? -1 : 1;
      auto t = twists_from_signs(curve, s);
      c.expect(is_twist_admissible(curve, t), "sign distribution gave an inadmissible twist set");
      bool parity = true;
      for (const auto& z : cycles) {
        int n = 0;
        for (int e : z) n += static_cast<int>(std::count(t.begin(), t.end(), e));
        parity = parity && n % 2 == 0;
      }
      auto r = patchwork(curve, t);
      c.expect(r.type_I == parity && is_type_I(curve, t) == parity, "type I flag disagrees with cycle parity");
    }
  }
  auto line = tropical_curve(BivariatePoly::parse("0 + x + y"));
  auto r = patchwork(line, {});
  std::vector<std::pair<std::vector<LatticePoint>, SignPair>> arcs;
  for (const auto& a : r.arcs) {
    std::vector<LatticePoint> d;
    for (int e : a.edges) d.push_back(line.edges[e].dir);
    arcs.push_back({sorted(d), a.sign});
  }
  std::vector<std::pair<std::vector<LatticePoint>, SignPair>> expected{
      {{{-1, 0}, {1, 1}}, {1, 1}}, {{{-1, 0}, {0, -1}}, {-1, 1}}, {{{0, -1}, {1, 1}}, {-1, -1}}};
  std::sort(expected.begin(), expected.end());
  bool match = false;
  for (SignPair f : {SignPair{1, 1}, SignPair{1, -1}, SignPair{-1, 1}, SignPair{-1, -1}}) {
    auto g = arcs;
    for (auto& a : g) a.second = {a.second.x * f.x, a.second.y * f.y};
    std::sort(g.begin(), g.end());
    match = match || g == expected;
  }
  c.expect(match, "line arcs differ from the reference arcs");
}

MetricGraph star(int leaves) {
  MetricGraph g;
  g.vertices.push_back({false});
  for (int k = 0; k < leaves; ++k) {
    g.vertices.push_back({true});
    g.edges.push_back({0, k + 1, std::nullopt});
  }
  return g;
}

void cohomology(Check& c) {
  auto L = curve_cohomology(star(3), {1});
  c.expect(L.h00 == 1 && L.h01 == 0 && L.h10 == 0 && L.h11 == 0, "compact line diamond");
  c.expect(curve_cohomology(star(3), {1, 2, 3}).h10 == 2, "punctured line h10");
  std::mt19937_64 rng(99);
  for (int it = 0; it < 20; ++it) {
    int genus_target = it % 4;
    MetricGraph g;
    int n = 1 + static_cast<int>(rng() % 4);
    g.vertices.assign(n, {false});
    for (int v = 1; v < n; ++v) g.edges.push_back({static_cast<int>(rng() % v), v, Rational(1 + static_cast<long>(rng() % 5))});
    for (int k = 0; k < genus_target; ++k) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      g.edges.push_back({std::min(a, b), std::max(a, b), Rational(1)});
    }
    for (int v = 0; v < n; ++v) {
      while (g.valence(v) < 3) {
        g.vertices.push_back({true});
        g.edges.push_back({v, static_cast<int>(g.vertices.size()) - 1, std::nullopt});
      }
    }
    auto h = curve_cohomology(g);
    c.expect(genus(g) == genus_target && h.h00 == 1 && h.h01 == genus_target && h.h10 == genus_target && h.h11 == 1,
             "diamond of a genus " + std::to_string(genus_target) + " graph");
    GraphPoint p;
    p.edge = static_cast<int>(rng() % g.edges.size());
    const auto& e = g.edges[p.edge];
    p.distance = e.length ? *e.length / 2 : Rational(1);
    auto m = curve_cohomology(elementary_modification(g, p));
    c.expect(m.h00 == h.h00 && m.h01 == h.h01 && m.h10 == h.h10 && m.h11 == h.h11, "modification changed the diamond");
  }
}

void dequantization(Check& c) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-100, 100), base(1.0001, 1e4);
  for (int k = 0; k < 100000; ++k) {
    double x = coord(rng), y = coord(rng), t = base(rng);
    double v = dequantized_add(x, y, t), m = std::max(x, y);
    if (!(v >= m - 1e-12 && v <= m + std::log(2.0) / std::log(t) + 1e-12)) {
      c.expect(false, "sample outside the sandwich");
      return;
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> criteria{
      {"refined invariants G_{3,0}, G_{4,*} and specializations", refined_invariants},
      {"marking counts of the reference floor diagrams", marking_counts},
      {"closed forms for G_{d,gmax}, G_{d,gmax-1} and top coefficients", closed_forms},
      {"fan intersection values, degree, adjunction, approximability", fan_values},
      {"matroid fans: braid/Petersen link and uniform balancing", matroid_fans},
      {"plane curve properties: balancing, duality, Bernstein, b1", plane_curve_properties},
      {"patchworking: admissibility, maximality, type I, line arcs", patchworking},
      {"tropical (co)homology diamonds and modification invariance", cohomology},
      {"dequantization bound on 1e5 samples", dequantization},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", seconds_since(t0));
    std::cout << (c.ok ? "PASS " : "FAIL ") << cr.name << " (" << buf << ")";
    if (!c.ok) std::cout << ": " << c.why.str();
    std::cout << "\n";
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
