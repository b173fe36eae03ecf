#pragma once

#include <optional>
#include <vector>

#include "tropkit/bivariate.hpp"
#include "tropkit/laurent.hpp"
#include "tropkit/polygon.hpp"

namespace tropkit {

struct DualCell {
  int dim = 0;
  // Polygon vertices: ccw for 2-cells, sorted endpoints for 1-cells.
  std::vector<LatticePoint> vertices;
  // Every exponent whose monomial attains the maximum on the dual face.
  std::vector<LatticePoint> support;
};

// Regular subdivision of the Newton polygon induced by the coefficients.
// Cells are ordered by dimension; 2-cells in the order of their curve vertices.
struct DualSubdivision {
  std::vector<LatticePoint> newton_polygon;
  std::vector<DualCell> cells;
  // cofaces[k] lists the cells of dimension dim+1 having cell k as a face.
  std::vector<std::vector<int>> cofaces;

  int newton_dim() const { return polygon_dim(newton_polygon); }
  std::vector<int> cells_of_dim(int dim) const;
  // A 1-cell on the boundary of the Newton polygon, or a boundary 0-cell.
  bool on_boundary(int cell) const;
};

DualSubdivision dual_subdivision(const BivariatePoly& p);

enum class EdgeKind { bounded, ray, line };

struct CurveEdge {
  EdgeKind kind = EdgeKind::bounded;
  int from = -1;  // bounded: lexicographically smaller endpoint; ray: apex
  int to = -1;    // bounded only
  // Primitive direction: from -> to for bounded edges, outwards for rays.
  LatticePoint dir;
  RatPoint anchor;  // a point of a line edge
  long long weight = 1;
  int dual_cell = -1;
};

struct PlaneCurve {
  std::vector<RatPoint> vertices;
  std::vector<CurveEdge> edges;
  // Present when the curve came from a polynomial.
  std::optional<DualSubdivision> dual;
  // vertex_cells[v] is the 2-cell dual to vertex v (when dual is present).
  std::vector<int> vertex_cells;

  std::vector<int> bounded_edges() const;
};

// Edge germs at a vertex: (edge index, primitive outgoing direction).
std::vector<std::pair<int, LatticePoint>> vertex_germs(const PlaneCurve& c, int v);

// Throws PreconditionError when the Newton polygon is a point.
PlaneCurve tropical_curve(const BivariatePoly& p);

bool check_balanced(const PlaneCurve& c);
// Needs the dual subdivision.
bool is_nonsingular(const PlaneCurve& c);

// First Betti number of the graph formed by vertices and bounded edges.
int first_betti_number(const PlaneCurve& c);

struct NodalProfile {
  bool is_nodal = false;
  std::optional<int> delta;
  std::optional<int> genus;
};

// Needs the dual subdivision and a Newton polygon inside the d-simplex.
NodalProfile nodal_profile(const PlaneCurve& c, int d);
// Degree read from the Newton polygon.
int curve_degree(const PlaneCurve& c);

struct Multiplicities {
  long long m_C = 1;
  long long m_R = 1;
  LaurentQ G = LaurentQ::constant(1);
};

// Products over the trivalent vertices; 4-valent crossings contribute 1.
// Computed from the edge germs, so curves read from JSON work too.
// Throws PreconditionError on vertices that are neither.
Multiplicities curve_multiplicities(const PlaneCurve& c);

}  // namespace tropkit
