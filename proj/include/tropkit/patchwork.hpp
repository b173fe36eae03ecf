#pragma once

#include <map>
#include <vector>

#include "tropkit/plane_curve.hpp"

namespace tropkit {

// Indices into PlaneCurve::edges; every member must be a bounded edge.
using TwistSet = std::vector<int>;
// Sign of the coefficient at each vertex of the dual subdivision.
using SignDistribution = std::map<LatticePoint, int>;

struct SignPair {
  int x = 1;
  int y = 1;
  friend auto operator<=>(const SignPair&, const SignPair&) = default;
};

struct PatchworkArc {
  std::vector<int> edges;  // curve edges the arc runs along, sorted
  SignPair sign;
};

struct PatchworkResult {
  // Pieces of the real curve inside the open quadrants.
  std::vector<PatchworkArc> arcs;
  // The arc signs mapped to the smallest representative under the four
  // axial symmetries, sorted.
  std::vector<SignPair> canonical_signs;
  // Connected components after closing up the arcs across the unbounded edges.
  int component_count = 0;
  bool type_I = false;
  bool orientable_quotient = false;
  bool maximal = false;
  int euler_char_quotient = 0;
};

// Fundamental cycles of the graph of vertices and bounded edges, as edge lists.
std::vector<std::vector<int>> cycle_basis(const PlaneCurve& c);

bool is_twist_admissible(const PlaneCurve& c, const TwistSet& t);
// Every cycle of the curve contains an even number of twisted edges.
bool is_type_I(const PlaneCurve& c, const TwistSet& t);
bool is_maximal_twist(const PlaneCurve& c, const TwistSet& t);
PatchworkResult patchwork(const PlaneCurve& c, const TwistSet& t);
TwistSet twists_from_signs(const PlaneCurve& c, const SignDistribution& s);

}  // namespace tropkit
