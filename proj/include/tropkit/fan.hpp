#pragma once

#include <optional>
#include <vector>

#include "tropkit/lattice.hpp"

namespace tropkit {

struct FanRay {
  IntVec dir;  // primitive
  long long weight = 1;
};

// One-dimensional fan in R^n.
struct FanCurve {
  int n = 0;
  std::vector<FanRay> rays;
};

// Sum of weighted directions is zero.
bool is_balanced(const FanCurve& c);
// Throws PreconditionError on wrong lengths, non-primitive directions or
// non-positive weights.
void validate_fan_curve(const FanCurve& c);

// The standard tropical plane in R^n: rays v_0 = (1,...,1), v_i = -e_i, and
// one 2-face for every pair {v_i, v_j}.
struct FanPlane {
  int n = 3;
  IntVec generator(int i) const;
};

// Position of a ray in the plane: dir = p v_i + q v_j with p, q >= 0.
// q == 0 when the ray lies on the 1-face of v_i (then j == -1).
struct PlaneCoordinates {
  int i = 0;
  int j = -1;
  long long p = 0;
  long long q = 0;
};

// Throws PreconditionError when dir is not in the plane.
PlaneCoordinates locate_in_plane(const FanPlane& plane, const IntVec& dir);

// sum_e w_e max(0, s_1(e), ..., s_n(e)); rejects unbalanced curves.
long long fan_degree(const FanCurve& c);

// sum over rays of C1 and C2 in the open face (i, j) of w1 w2 min(p1 q2, q1 p2).
long long corner_intersection(const FanPlane& plane, const FanCurve& c1, const FanCurve& c2, int i, int j);

// deg(C1) deg(C2) - sum of all corner terms.
long long local_intersection(const FanPlane& plane, const FanCurve& c1, const FanCurve& c2);

// (C^2)_0 + (n - 2) deg(C) - sum_e w_e + 2; negative means not approximable.
long long adjunction_bound(const FanPlane& plane, const FanCurve& c);

// For curves with at most three rays in R^3: (C^2)_0 is 0 or -1.
bool trivalent_approximable(const FanPlane& plane, const FanCurve& c);

}  // namespace tropkit
