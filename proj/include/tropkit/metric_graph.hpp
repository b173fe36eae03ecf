#pragma once

#include <optional>
#include <set>
#include <vector>

#include "tropkit/lattice.hpp"
#include "tropkit/rational.hpp"

namespace tropkit {

struct GraphVertex {
  bool infinite = false;  // one-valent vertex at infinite distance
};

struct GraphEdge {
  int a = 0;
  int b = 0;
  std::optional<Rational> length;  // empty means infinite
};

// Abstract tropical curve: finite graph with a complete metric away from
// its one-valent infinite vertices.
struct MetricGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  int valence(int v) const;
  // Throws PreconditionError on isolated vertices, infinite vertices that
  // are not one-valent, or lengths that do not match the vertex types.
  void validate() const;
};

// Genus of each connected component (first Betti number).
std::vector<int> component_genera(const MetricGraph& g);
// Throws PreconditionError for disconnected graphs.
int genus(const MetricGraph& g);

// A point of the graph: a finite vertex, or a point inside an edge at the
// given distance from its endpoint a.
struct GraphPoint {
  int vertex = -1;
  int edge = -1;
  Rational distance;
};

// Glues an infinite leaf at p. The new infinite vertex is appended last.
MetricGraph elementary_modification(const MetricGraph& g, const GraphPoint& p);

// Map to R^n with integer velocity u(e) along each edge, oriented a -> b.
// Vertices listed in removed are deleted from the source (the open curve);
// they must be infinite.
struct TropicalMorphism {
  MetricGraph source;
  std::set<int> removed;
  int n = 2;
  std::vector<IntVec> velocity;
};

struct MorphismReport {
  bool valid = false;
  std::vector<std::string> problems;
  // Degree of the image, summed over the ends towards removed vertices.
  std::optional<long long> degree;
};

MorphismReport validate_morphism(const TropicalMorphism& m);

struct CurveCohomology {
  int h00 = 0, h01 = 0, h10 = 0, h11 = 0;
  // Dimensions of the cochain groups C^{p,q}.
  int c00 = 0, c01 = 0, c10 = 0, c11 = 0;
};

// Cellular (co)homology with coefficients in the multitangent spaces. The
// removed vertices (infinite, one-valent) are deleted from the graph; edges
// running into them contribute no cells. Throws PreconditionError for
// disconnected graphs or removed vertices that are not infinite.
CurveCohomology curve_cohomology(const MetricGraph& g, const std::set<int>& removed = {});
// The same dimensions from the chain complexes with quotient coordinates.
CurveCohomology curve_homology(const MetricGraph& g, const std::set<int>& removed = {});

}  // namespace tropkit
