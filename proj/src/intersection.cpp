#include "tropkit/intersection.hpp"

#include <cstdlib>
#include <map>
#include <optional>

#include "tropkit/error.hpp"

namespace tropkit {

namespace {

// c0 + c1 eps + c2 eps^2, compared lexicographically.
struct Eps {
  Rational c[3];

  friend Eps operator+(const Eps& a, const Eps& b) { return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}}; }
  Eps scaled(const Rational& k) const { return {{c[0] * k, c[1] * k, c[2] * k}}; }
  int sign() const {
    for (const auto& x : c) {
      if (x != 0) return sgn(x);
    }
    return 0;
  }
};

int compare(const Eps& a, const Rational& b) {
  Eps d = a;
  d.c[0] -= b;
  return d.sign();
}

struct Param {
  RatPoint base;
  Rational ux, uy;
  LatticePoint dir;
  long long weight;
  bool has_lo, has_hi;  // s >= 0, s <= 1
};

Param param(const PlaneCurve& c, const CurveEdge& e) {
  Param p;
  p.dir = e.dir;
  p.weight = e.weight;
  switch (e.kind) {
    case EdgeKind::bounded: {
      const auto& a = c.vertices[e.from];
      const auto& b = c.vertices[e.to];
      p.base = a;
      p.ux = b.x - a.x;
      p.uy = b.y - a.y;
      p.has_lo = p.has_hi = true;
      break;
    }
    case EdgeKind::ray:
      p.base = c.vertices[e.from];
      p.ux = static_cast<long>(e.dir.x);
      p.uy = static_cast<long>(e.dir.y);
      p.has_lo = true;
      p.has_hi = false;
      break;
    case EdgeKind::line:
      p.base = e.anchor;
      p.ux = static_cast<long>(e.dir.x);
      p.uy = static_cast<long>(e.dir.y);
      p.has_lo = p.has_hi = false;
      break;
  }
  return p;
}

// -1: outside, 0: at an end, 1: strictly inside.
int locate(const Eps& s, const Param& p) {
  int lo = p.has_lo ? compare(s, Rational(0)) : 1;
  int hi = p.has_hi ? -compare(s, Rational(1)) : 1;
  if (lo < 0 || hi < 0) return -1;
  if (lo == 0 || hi == 0) return 0;
  return 1;
}

// Interval of the parameter of e covered by the collinear edge f, and
// whether it meets e's own range.
bool collinear_overlap(const Param& e, const Param& f) {
  // parameter of a point X on e's line: (X - base) . u / |u|^2
  Rational uu = e.ux * e.ux + e.uy * e.uy;
  auto proj = [&](const Rational& x, const Rational& y) -> Rational { return ((x - e.base.x) * e.ux + (y - e.base.y) * e.uy) / uu; };
  Rational s0 = proj(f.base.x, f.base.y);
  Rational s1 = proj(f.base.x + f.ux, f.base.y + f.uy);
  // f covers s0 + t (s1 - s0) for t in its range.
  Rational slope = s1 - s0;
  std::optional<Rational> flo, fhi;
  auto at = [&](int t) -> Rational { return s0 + slope * t; };
  if (f.has_lo) (slope > 0 ? flo : fhi) = at(0);
  if (f.has_hi) (slope > 0 ? fhi : flo) = at(1);
  std::optional<Rational> elo, ehi;
  if (e.has_lo) elo = Rational(0);
  if (e.has_hi) ehi = Rational(1);
  // Max of lows <= min of highs.
  std::optional<Rational> lo = flo, hi = fhi;
  if (elo && (!lo || *elo > *lo)) lo = elo;
  if (ehi && (!hi || *ehi < *hi)) hi = ehi;
  return !lo || !hi || *lo <= *hi;
}

}  // namespace

IntersectionReport stable_intersection(const PlaneCurve& a, const PlaneCurve& b, bool perturb) {
  IntersectionReport report;
  Eps shift_x{{0, perturb ? 1 : 0, 0}};
  Eps shift_y{{0, 0, perturb ? 1 : 0}};
  std::map<RatPoint, long long> merged;
  for (const auto& ea : a.edges) {
    Param e = param(a, ea);
    for (const auto& eb : b.edges) {
      Param f = param(b, eb);
      Rational det = e.ux * f.uy - e.uy * f.ux;
      // w = Q + delta - P
      Eps wx = Eps{{f.base.x - e.base.x, 0, 0}} + shift_x;
      Eps wy = Eps{{f.base.y - e.base.y, 0, 0}} + shift_y;
      if (det == 0) {
        Eps side = wx.scaled(e.uy) + wy.scaled(-e.ux);
        if (side.sign() == 0 && collinear_overlap(e, f)) {
          return IntersectionReport{{}, false, 0};
        }
        continue;
      }
      Eps s = (wx.scaled(f.uy) + wy.scaled(-f.ux)).scaled(1 / det);
      Eps t = (wx.scaled(e.uy) + wy.scaled(-e.ux)).scaled(1 / det);
      int ls = locate(s, e);
      int lt = locate(t, f);
      if (ls < 0 || lt < 0) continue;
      if (ls == 0 || lt == 0) return IntersectionReport{{}, false, 0};
      long long m = e.weight * f.weight * std::llabs(cross(e.dir, f.dir));
      RatPoint loc{e.base.x + s.c[0] * e.ux, e.base.y + s.c[0] * e.uy};
      merged[loc] += m;
    }
  }
  for (const auto& [loc, m] : merged) {
    report.points.push_back({loc, m});
    report.total += m;
  }
  return report;
}

}  // namespace tropkit
