#include "tropkit/polygon.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "tropkit/error.hpp"

namespace tropkit {

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 || (h.size() > 2 && double_area(h) == 0)) {
    return {pts.front(), pts.back()};
  }
  return h;
}

int polygon_dim(const std::vector<LatticePoint>& hull) {
  if (hull.size() <= 2) return static_cast<int>(hull.size()) - 1;
  return 2;
}

long long double_area(const std::vector<LatticePoint>& hull) {
  long long s = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) s += cross(hull[i], hull[(i + 1) % hull.size()]);
  return s;
}

Rational area(const std::vector<LatticePoint>& hull) { return make_rational(double_area(hull), 2); }

long long lattice_length(LatticePoint a, LatticePoint b) { return std::gcd(std::llabs(b.x - a.x), std::llabs(b.y - a.y)); }

long long boundary_lattice_points(const std::vector<LatticePoint>& hull) {
  if (hull.size() == 1) return 1;
  if (hull.size() == 2) return lattice_length(hull[0], hull[1]) + 1;
  long long b = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) b += lattice_length(hull[i], hull[(i + 1) % hull.size()]);
  return b;
}

long long interior_lattice_points(const std::vector<LatticePoint>& hull) {
  if (polygon_dim(hull) < 2) return 0;
  return (double_area(hull) - boundary_lattice_points(hull) + 2) / 2;
}

bool polygon_contains(const std::vector<LatticePoint>& hull, LatticePoint p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull[0] == p;
  if (hull.size() == 2) {
    if (cross(hull[0], hull[1], p) != 0) return false;
    return std::min(hull[0], hull[1]) <= p && p <= std::max(hull[0], hull[1]);
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (cross(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  }
  return true;
}

std::vector<LatticePoint> lattice_points(const std::vector<LatticePoint>& hull) {
  std::vector<LatticePoint> out;
  if (hull.empty()) return out;
  long long x0 = hull[0].x, x1 = hull[0].x, y0 = hull[0].y, y1 = hull[0].y;
  for (const auto& p : hull) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  for (long long x = x0; x <= x1; ++x) {
    for (long long y = y0; y <= y1; ++y) {
      if (polygon_contains(hull, {x, y})) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<LatticePoint> minkowski_sum(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
  if (a.empty() || b.empty()) throw PreconditionError("Minkowski sum of an empty polygon");
  std::vector<LatticePoint> pts;
  for (const auto& p : a) {
    for (const auto& q : b) pts.push_back(p + q);
  }
  return convex_hull(std::move(pts));
}

Rational mixed_area(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
  auto s = minkowski_sum(a, b);
  return area(s) - area(a) - area(b);
}

std::vector<LatticePoint> simplex(long long d) {
  if (d == 0) return {{0, 0}};
  return {{0, 0}, {d, 0}, {0, d}};
}

}  // namespace tropkit
