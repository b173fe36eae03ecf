#pragma once

#include <vector>

#include "tropkit/plane_curve.hpp"

namespace tropkit {

struct IntersectionPoint {
  RatPoint location;
  long long multiplicity = 0;
};

struct IntersectionReport {
  std::vector<IntersectionPoint> points;
  bool transverse = true;
  long long total = 0;
};

// Crossings of two plane curves with multiplicity w w' |det(u, u')|.
// Without perturb, a vertex of one curve on the other or overlapping parallel
// edges make the report non-transverse (no points, total 0). With perturb,
// the second curve is shifted by (eps, eps^2) for an infinitesimal eps; the
// reported locations are the limits as eps -> 0, merged when they coincide.
IntersectionReport stable_intersection(const PlaneCurve& a, const PlaneCurve& b, bool perturb = false);

}  // namespace tropkit
