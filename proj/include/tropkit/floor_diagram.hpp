#pragma once

#include <compare>
#include <vector>

#include "tropkit/laurent.hpp"

namespace tropkit {

struct FloorEdge {
  int s = 0;  // source vertex
  int t = 0;  // target vertex
  int w = 1;
  friend auto operator<=>(const FloorEdge&, const FloorEdge&) = default;
};

// Vertices 0..d-1, numbered along a topological order (every edge has s < t).
// legs[v] is the number of weight-1 non-compact edges oriented towards v.
struct FloorDiagram {
  int d = 0;
  int g = 0;
  std::vector<FloorEdge> edges;
  std::vector<int> legs;

  friend auto operator<=>(const FloorDiagram&, const FloorDiagram&) = default;
};

// Complete list of diagrams of degree d and genus g up to weighted
// isomorphism, each in its canonical labelling, sorted. Supports 1 <= d <= 6.
std::vector<FloorDiagram> enumerate_diagrams(int d, int g);

// Throws PreconditionError when D violates the floor diagram conditions.
void validate_diagram(const FloorDiagram& D);

// Canonical labelling of D (the smallest relabelling along a topological order).
FloorDiagram canonical_form(const FloorDiagram& D);

// Vertex permutations preserving edges with weights and leg counts.
long long vertex_automorphisms(const FloorDiagram& D);

// Number of linear extensions of the poset on vertices, edges and legs.
// Exact up to 2^127.
unsigned __int128 linear_extensions(const FloorDiagram& D);

// Marked diagrams up to equivalence: linear extensions / |Aut|.
long long count_markings(const FloorDiagram& D);

struct DiagramMultiplicity {
  long long m_C = 1;
  long long m_R = 1;
  LaurentQ G = LaurentQ::constant(1);
};

DiagramMultiplicity diagram_multiplicities(const FloorDiagram& D);

struct RefinedInvariant {
  LaurentQ G;
  long long N = 0;  // value at q = 1
  long long W = 0;  // value at q = -1
};

RefinedInvariant refined_invariant(int d, int g);

}  // namespace tropkit
