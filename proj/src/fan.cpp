#include "tropkit/fan.hpp"

#include <algorithm>

#include "tropkit/error.hpp"

namespace tropkit {

bool is_balanced(const FanCurve& c) {
  IntVec s(c.n, 0);
  for (const auto& r : c.rays) {
    for (int k = 0; k < c.n; ++k) s[k] += r.weight * r.dir[k];
  }
  return std::all_of(s.begin(), s.end(), [](long long x) { return x == 0; });
}

void validate_fan_curve(const FanCurve& c) {
  if (c.n < 1) throw PreconditionError("fan curve needs ambient dimension >= 1");
  for (const auto& r : c.rays) {
    if (static_cast<int>(r.dir.size()) != c.n) throw PreconditionError("ray length does not match the ambient dimension");
    if (gcd_of(r.dir) != 1) throw PreconditionError("ray directions must be primitive");
    if (r.weight < 1) throw PreconditionError("ray weights must be positive");
  }
}

IntVec FanPlane::generator(int i) const {
  if (i < 0 || i > n) throw PreconditionError("plane generator index out of range");
  IntVec v(n, i == 0 ? 1 : 0);
  if (i > 0) v[i - 1] = -1;
  return v;
}

PlaneCoordinates locate_in_plane(const FanPlane& plane, const IntVec& dir) {
  int n = plane.n;
  if (static_cast<int>(dir.size()) != n) throw PreconditionError("ray length does not match the plane");
  // Entries equal to the maximum m: dir = m v_0 - sum_k (m - dir_k) e_k.
  long long m = std::max(0LL, *std::max_element(dir.begin(), dir.end()));
  std::vector<std::pair<int, long long>> terms;  // (generator, coefficient)
  if (m > 0) terms.push_back({0, m});
  for (int k = 0; k < n; ++k) {
    if (m - dir[k] != 0) terms.push_back({k + 1, m - dir[k]});
  }
  // With m = max(0, max dir) all coefficients are >= 0 and at most one
  // extra generator may be used besides the ones forced; the representation
  // is unique once it has at most two terms.
  if (terms.empty() || terms.size() > 2) {
    throw PreconditionError("ray does not lie in a face of the plane");
  }
  PlaneCoordinates out;
  out.i = terms[0].first;
  out.p = terms[0].second;
  if (terms.size() == 2) {
    out.j = terms[1].first;
    out.q = terms[1].second;
  }
  return out;
}

long long fan_degree(const FanCurve& c) {
  validate_fan_curve(c);
  if (!is_balanced(c)) throw PreconditionError("fan curve is not balanced");
  long long d = 0;
  for (const auto& r : c.rays) d += r.weight * std::max(0LL, *std::max_element(r.dir.begin(), r.dir.end()));
  return d;
}

long long corner_intersection(const FanPlane& plane, const FanCurve& c1, const FanCurve& c2, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j > plane.n || i == j) throw PreconditionError("invalid face of the plane");
  auto in_face = [&](const FanCurve& c) {
    std::vector<std::pair<PlaneCoordinates, long long>> out;
    for (const auto& r : c.rays) {
      auto pc = locate_in_plane(plane, r.dir);
      if (pc.j < 0) continue;  // on a 1-face: every corner term vanishes
      if (pc.i == i && pc.j == j) out.push_back({pc, r.weight});
    }
    return out;
  };
  long long total = 0;
  for (const auto& [a, w1] : in_face(c1)) {
    for (const auto& [b, w2] : in_face(c2)) total += w1 * w2 * std::min(a.p * b.q, a.q * b.p);
  }
  return total;
}

long long local_intersection(const FanPlane& plane, const FanCurve& c1, const FanCurve& c2) {
  long long total = fan_degree(c1) * fan_degree(c2);
  for (int i = 0; i <= plane.n; ++i) {
    for (int j = i + 1; j <= plane.n; ++j) total -= corner_intersection(plane, c1, c2, i, j);
  }
  return total;
}

long long adjunction_bound(const FanPlane& plane, const FanCurve& c) {
  long long weights = 0;
  for (const auto& r : c.rays) weights += r.weight;
  return local_intersection(plane, c, c) + (plane.n - 2) * fan_degree(c) - weights + 2;
}

bool trivalent_approximable(const FanPlane& plane, const FanCurve& c) {
  if (plane.n != 3) throw PreconditionError("the trivalent criterion is for planes in R^3");
  if (c.rays.size() > 3) throw PreconditionError("curve has more than three rays");
  long long s = local_intersection(plane, c, c);
  return s == 0 || s == -1;
}

}  // namespace tropkit
