#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "tropkit/error.hpp"
#include "tropkit/plane_curve.hpp"

using namespace tropkit;
using tropkit::test_support::random_bivariate;
using tropkit::test_support::random_rational;

namespace {

std::vector<LatticePoint> sorted(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

RatPoint shift(const RatPoint& p, LatticePoint d, const Rational& t) {
  return {p.x + t * Rational(static_cast<long>(d.x)), p.y + t * Rational(static_cast<long>(d.y))};
}

// A point in the relative interior of edge e.
RatPoint interior_point(const PlaneCurve& c, const CurveEdge& e) {
  switch (e.kind) {
    case EdgeKind::bounded: {
      const auto& a = c.vertices[e.from];
      const auto& b = c.vertices[e.to];
      return {(a.x + b.x) / 2, (a.y + b.y) / 2};
    }
    case EdgeKind::ray:
      return shift(c.vertices[e.from], e.dir, Rational(1));
    case EdgeKind::line:
    default:
      return e.anchor;
  }
}

// Lift with every lattice point of the polygon on the upper hull, perturbed
// to break the square ties: the subdivision is a unimodular triangulation.
BivariatePoly nonsingular_on(const std::vector<LatticePoint>& polygon, std::mt19937_64& rng) {
  std::map<Monomial, Rational> t;
  std::uniform_int_distribution<long long> noise(-1000000, 1000000);
  for (const auto& p : lattice_points(convex_hull(polygon))) {
    t[{static_cast<int>(p.x), static_cast<int>(p.y)}] =
        Rational(static_cast<long>(-(p.x * p.x + p.y * p.y))) + make_rational(noise(rng), 100000000);
  }
  return BivariatePoly(t);
}

}  // namespace

TEST(PlaneCurve, Line) {
  auto c = tropical_curve(BivariatePoly::parse("0 + x + y"));
  ASSERT_EQ(c.vertices.size(), 1u);
  EXPECT_EQ(c.vertices[0], (RatPoint{0, 0}));
  std::vector<LatticePoint> dirs;
  for (const auto& e : c.edges) {
    EXPECT_EQ(e.kind, EdgeKind::ray);
    EXPECT_EQ(e.weight, 1);
    dirs.push_back(e.dir);
  }
  EXPECT_EQ(sorted(dirs), (std::vector<LatticePoint>{{-1, 0}, {0, -1}, {1, 1}}));
  EXPECT_TRUE(is_nonsingular(c));
  EXPECT_EQ(curve_degree(c), 1);
}

TEST(PlaneCurve, DoubledEdgeWeight) {
  // max(0, 2x): a vertical line of weight 2 with no vertices.
  auto c = tropical_curve(BivariatePoly::parse("0 + x^2"));
  ASSERT_TRUE(c.vertices.empty());
  ASSERT_EQ(c.edges.size(), 1u);
  EXPECT_EQ(c.edges[0].kind, EdgeKind::line);
  EXPECT_EQ(c.edges[0].weight, 2);
  EXPECT_FALSE(is_nonsingular(c));
  EXPECT_THROW(tropical_curve(BivariatePoly::parse("3*x*y")), PreconditionError);
}

TEST(PlaneCurve, DualityClausesOnRandomPolynomials) {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 200; ++it) {
    auto p = random_bivariate(rng, 4, 3 + it % 10);
    auto c = tropical_curve(p);
    ASSERT_TRUE(c.dual.has_value());
    const auto& sub = *c.dual;
    EXPECT_EQ(sub.cells_of_dim(2).size(), c.vertices.size());
    EXPECT_EQ(sub.cells_of_dim(1).size(), c.edges.size());
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
      const auto& cell = sub.cells[c.vertex_cells[v]];
      EXPECT_EQ(cell.dim, 2);
      EXPECT_EQ(p.dominant(c.vertices[v].x, c.vertices[v].y), sorted(cell.support));
    }
    for (const auto& e : c.edges) {
      const auto& cell = sub.cells[e.dual_cell];
      ASSERT_EQ(cell.dim, 1);
      RatPoint m = interior_point(c, e);
      EXPECT_EQ(p.dominant(m.x, m.y), sorted(cell.support));
      LatticePoint seg = cell.vertices[1] - cell.vertices[0];
      EXPECT_EQ(seg.x * e.dir.x + seg.y * e.dir.y, 0) << "dual segment not orthogonal";
      EXPECT_EQ(e.weight, lattice_length(cell.vertices[0], cell.vertices[1]));
      // The weight is also the largest gcd over pairs of tied monomials.
      long long best = 0;
      for (const auto& a : cell.support) {
        for (const auto& b : cell.support) best = std::max(best, std::gcd(std::abs(a.x - b.x), std::abs(a.y - b.y)));
      }
      EXPECT_EQ(e.weight, best);
      if (e.kind == EdgeKind::ray) {
        // Rays leave along the outer normal of a boundary segment.
        EXPECT_TRUE(sub.on_boundary(e.dual_cell));
        RatPoint far = shift(c.vertices[e.from], e.dir, Rational(1000));
        EXPECT_EQ(p.dominant(far.x, far.y), sorted(cell.support));
      }
    }
    // Random points off the curve see a single monomial, a 0-cell.
    std::set<LatticePoint> vertices0;
    for (int k : sub.cells_of_dim(0)) vertices0.insert(sub.cells[k].vertices[0]);
    for (int k = 0; k < 20; ++k) {
      auto dom = p.dominant(random_rational(rng, 30, 7), random_rational(rng, 30, 7));
      if (dom.size() == 1) EXPECT_TRUE(vertices0.count(dom[0]));
    }
  }
}

TEST(PlaneCurve, BalancingOnRandomPolynomials) {
  std::mt19937_64 rng(103);
  for (int it = 0; it < 200; ++it) {
    auto c = tropical_curve(random_bivariate(rng));
    EXPECT_TRUE(check_balanced(c));
    std::vector<LatticePoint> sum(c.vertices.size(), {0, 0});
    for (const auto& e : c.edges) {
      LatticePoint w{e.weight * e.dir.x, e.weight * e.dir.y};
      if (e.kind == EdgeKind::line) continue;
      sum[e.from] = sum[e.from] + w;
      if (e.kind == EdgeKind::bounded) sum[e.to] = sum[e.to] - w;
    }
    for (const auto& s : sum) EXPECT_EQ(s, (LatticePoint{0, 0}));
  }
}

TEST(PlaneCurve, UnbalancedCurveDetected) {
  auto c = tropical_curve(BivariatePoly::parse("0 + x + y"));
  c.edges[0].weight = 2;
  EXPECT_FALSE(check_balanced(c));
}

TEST(PlaneCurve, NonsingularBettiNumberIsInteriorPointCount) {
  std::mt19937_64 rng(107);
  struct Shape {
    std::vector<LatticePoint> polygon;
    long long interior;
  };
  std::vector<Shape> shapes;
  for (long long d = 1; d <= 5; ++d) shapes.push_back({simplex(d), (d - 1) * (d - 2) / 2});
  for (long long a = 1; a <= 4; ++a) {
    for (long long b = 1; b <= 3; ++b) shapes.push_back({{{0, 0}, {a, 0}, {a, b}, {0, b}}, (a - 1) * (b - 1)});
  }
  for (const auto& s : shapes) {
    for (int rep = 0; rep < 4; ++rep) {
      auto c = tropical_curve(nonsingular_on(s.polygon, rng));
      ASSERT_TRUE(is_nonsingular(c));
      EXPECT_EQ(first_betti_number(c), s.interior);
      long long bounded = static_cast<long long>(c.bounded_edges().size());
      EXPECT_EQ(bounded - static_cast<long long>(c.vertices.size()) + 1, s.interior);
    }
  }
}

TEST(PlaneCurve, NonsingularNodalProfile) {
  std::mt19937_64 rng(109);
  for (int d = 1; d <= 5; ++d) {
    auto c = tropical_curve(nonsingular_on(simplex(d), rng));
    auto np = nodal_profile(c, d);
    EXPECT_TRUE(np.is_nodal);
    EXPECT_EQ(np.delta, 0);
    EXPECT_EQ(np.genus, (d - 1) * (d - 2) / 2);
    auto m = curve_multiplicities(c);
    EXPECT_EQ(m.m_C, 1);
    EXPECT_EQ(m.m_R, 1);
    EXPECT_EQ(m.G, LaurentQ::constant(1));
  }
}

TEST(PlaneCurve, ReducibleConicHasOneNode) {
  // Two lines crossing: the subdivision has a unit square.
  auto c = tropical_curve(BivariatePoly::parse("(-10)*x^2 + (-10)*y^2 + 0 + x + y + x*y"));
  auto np = nodal_profile(c, 2);
  EXPECT_TRUE(np.is_nodal);
  EXPECT_EQ(np.delta, 1);
  EXPECT_EQ(np.genus, -1);
  EXPECT_FALSE(is_nonsingular(c));
}

TEST(PlaneCurve, RationalCubicWithTwoDoubleVertices) {
  // (1,1) sits on the weight 2 edge from (0,1) to (2,1), shared by two
  // triangles of doubled area 2; every other cell is unimodular.
  auto p = BivariatePoly::parse(
      "(-6) + 1*x + (-1)*x^2 + (-4)*x^3 + 2*y + 2*x*y + 3*x^2*y + 1*y^2 + 2*x*y^2 + (-4)*y^3");
  auto c = tropical_curve(p);
  auto np = nodal_profile(c, 3);
  EXPECT_TRUE(np.is_nodal);
  EXPECT_EQ(np.delta, 1);
  EXPECT_EQ(np.genus, 0);
  auto m = curve_multiplicities(c);
  EXPECT_EQ(m.m_C, 4);
  EXPECT_EQ(m.m_R, 0);
  EXPECT_EQ(m.G.to_string(), "q^-1 + 2 + q");
}

TEST(PlaneCurve, MultiplicitiesAgreeWithDualTriangles) {
  std::mt19937_64 rng(113);
  int tested = 0;
  for (int it = 0; it < 400 && tested < 60; ++it) {
    std::map<Monomial, Rational> t;
    int d = 2 + it % 3;
    std::uniform_int_distribution<long long> noise(-60, 60);
    for (const auto& q : lattice_points(simplex(d))) {
      if (rng() % 4 == 0 && q != LatticePoint{0, 0} && q != LatticePoint{d, 0} && q != LatticePoint{0, d}) continue;
      t[{static_cast<int>(q.x), static_cast<int>(q.y)}] = make_rational(noise(rng), 10);
    }
    auto c = tropical_curve(BivariatePoly(t));
    Multiplicities m;
    try {
      m = curve_multiplicities(c);
    } catch (const PreconditionError&) {
      continue;  // a vertex of valence above three that is not a crossing
    }
    ++tested;
    long long mc = 1, mr = 1;
    LaurentQ G = LaurentQ::constant(1);
    for (int k : c.dual->cells_of_dim(2)) {
      const auto& cell = c.dual->cells[k];
      if (cell.vertices.size() != 3) continue;  // parallelogram
      long long area2 = double_area(cell.vertices);
      long long inner = interior_lattice_points(cell.vertices);
      mc *= area2;
      mr *= area2 % 2 == 0 ? 0 : (inner % 2 == 0 ? 1 : -1);
      G = G * LaurentQ::quantum_integer(static_cast<int>(area2));
    }
    EXPECT_EQ(m.m_C, mc);
    EXPECT_EQ(m.m_R, mr);
    EXPECT_EQ(m.G, G);
    EXPECT_EQ(m.G.at_one(), mc);
    EXPECT_TRUE(m.G.is_palindromic());
  }
  EXPECT_GE(tested, 30);
}

TEST(Polygon, MixedAreaOfSimplices) {
  EXPECT_EQ(mixed_area(simplex(2), simplex(3)), Rational(6));
  EXPECT_EQ(mixed_area(simplex(1), simplex(1)), Rational(1));
  std::vector<LatticePoint> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_EQ(mixed_area(square, square), Rational(2));
  EXPECT_EQ(area(simplex(1)), make_rational(1, 2));
}
