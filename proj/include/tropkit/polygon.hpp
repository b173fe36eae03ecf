#pragma once

#include <compare>
#include <vector>

#include "tropkit/rational.hpp"

namespace tropkit {

struct LatticePoint {
  long long x = 0;
  long long y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
};

inline long long cross(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }
inline long long cross(LatticePoint o, LatticePoint a, LatticePoint b) { return cross(a - o, b - o); }

// Counterclockwise hull vertices without collinear points, starting from the
// lexicographically smallest. A segment gives its two endpoints, a point one.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points);

// Dimension (0, 1 or 2) of a hull as returned by convex_hull.
int polygon_dim(const std::vector<LatticePoint>& hull);

// Twice the Euclidean area of a ccw polygon.
long long double_area(const std::vector<LatticePoint>& hull);
Rational area(const std::vector<LatticePoint>& hull);

// Number of lattice points on [a, b] minus one.
long long lattice_length(LatticePoint a, LatticePoint b);

long long boundary_lattice_points(const std::vector<LatticePoint>& hull);
// Interior points of a 2-dimensional polygon (Pick), 0 otherwise.
long long interior_lattice_points(const std::vector<LatticePoint>& hull);

// Closed containment in a ccw hull of any dimension.
bool polygon_contains(const std::vector<LatticePoint>& hull, LatticePoint p);
std::vector<LatticePoint> lattice_points(const std::vector<LatticePoint>& hull);

std::vector<LatticePoint> minkowski_sum(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b);

// Area(A + B) - Area(A) - Area(B).
Rational mixed_area(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b);

// Conv{(0,0), (d,0), (0,d)}.
std::vector<LatticePoint> simplex(long long d);

}  // namespace tropkit
