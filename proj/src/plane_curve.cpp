#include "tropkit/plane_curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tropkit/error.hpp"
#include "tropkit/lattice.hpp"
#include "tropkit/univariate.hpp"

namespace tropkit {

namespace {

LatticePoint primitive_dir(const Rational& dx, const Rational& dy) {
  IntVec v = primitive(RatVec{dx, dy});
  return {v[0], v[1]};
}

bool on_segment(LatticePoint a, LatticePoint b, LatticePoint p) {
  return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

Rational value_at(const Rational& c, LatticePoint m, const RatPoint& x) {
  return c + Rational(static_cast<long>(m.x)) * x.x + Rational(static_cast<long>(m.y)) * x.y;
}

struct TwoCell {
  RatPoint apex;
  std::vector<LatticePoint> support;
  std::vector<LatticePoint> hull;
};

// Vertices of the corner locus with the monomials attaining the max there.
std::vector<TwoCell> find_two_cells(const BivariatePoly& p) {
  std::vector<std::pair<LatticePoint, Rational>> pts;
  for (const auto& [m, c] : p.terms()) pts.push_back({{m.first, m.second}, c});
  std::map<RatPoint, TwoCell> found;
  std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        LatticePoint d1 = pts[j].first - pts[i].first;
        LatticePoint d2 = pts[k].first - pts[i].first;
        long long det = cross(d1, d2);
        if (det == 0) continue;
        // d1 . X = a_i - a_j, d2 . X = a_i - a_k
        Rational r1 = pts[i].second - pts[j].second;
        Rational r2 = pts[i].second - pts[k].second;
        Rational dd = Rational(static_cast<long>(det));
        RatPoint x{(r1 * static_cast<long>(d2.y) - r2 * static_cast<long>(d1.y)) / dd,
                   (r2 * static_cast<long>(d1.x) - r1 * static_cast<long>(d2.x)) / dd};
        if (found.count(x)) continue;
        Rational top = value_at(pts[i].second, pts[i].first, x);
        bool ok = true;
        std::vector<LatticePoint> support;
        for (const auto& [m, c] : pts) {
          Rational v = value_at(c, m, x);
          if (v > top) {
            ok = false;
            break;
          }
          if (v == top) support.push_back(m);
        }
        if (!ok) continue;
        TwoCell cell{x, support, convex_hull(support)};
        found.emplace(x, std::move(cell));
      }
    }
  }
  std::vector<TwoCell> out;
  for (auto& [x, cell] : found) out.push_back(std::move(cell));
  return out;
}

struct Built {
  DualSubdivision dual;
  PlaneCurve curve;
};

Built build_two_dim(const BivariatePoly& p) {
  Built b;
  auto two = find_two_cells(p);
  std::set<LatticePoint> zero_cells;
  // 1-cells keyed by sorted endpoints -> (support, list of (2-cell, ccw a, ccw b))
  struct Seg {
    std::vector<LatticePoint> support;
    std::vector<std::tuple<int, LatticePoint, LatticePoint>> sides;
  };
  std::map<std::pair<LatticePoint, LatticePoint>, Seg> segs;
  for (std::size_t c = 0; c < two.size(); ++c) {
    const auto& h = two[c].hull;
    for (std::size_t i = 0; i < h.size(); ++i) {
      LatticePoint a = h[i], bb = h[(i + 1) % h.size()];
      zero_cells.insert(a);
      auto key = std::minmax(a, bb);
      auto& s = segs[{key.first, key.second}];
      if (s.sides.empty()) {
        for (const auto& q : two[c].support) {
          if (on_segment(a, bb, q)) s.support.push_back(q);
        }
        std::sort(s.support.begin(), s.support.end());
      }
      s.sides.emplace_back(static_cast<int>(c), a, bb);
    }
  }

  auto& cells = b.dual.cells;
  std::map<LatticePoint, int> zero_index;
  for (const auto& z : zero_cells) {
    zero_index[z] = static_cast<int>(cells.size());
    cells.push_back({0, {z}, {z}});
  }
  std::map<std::pair<LatticePoint, LatticePoint>, int> seg_index;
  for (const auto& [key, s] : segs) {
    seg_index[key] = static_cast<int>(cells.size());
    cells.push_back({1, {key.first, key.second}, s.support});
  }
  int first_two = static_cast<int>(cells.size());
  for (const auto& t : two) cells.push_back({2, t.hull, t.support});
  b.dual.cofaces.assign(cells.size(), {});
  for (const auto& [key, s] : segs) {
    int si = seg_index[key];
    b.dual.cofaces[zero_index[key.first]].push_back(si);
    b.dual.cofaces[zero_index[key.second]].push_back(si);
    for (const auto& side : s.sides) b.dual.cofaces[si].push_back(first_two + std::get<0>(side));
  }

  auto& curve = b.curve;
  for (std::size_t c = 0; c < two.size(); ++c) {
    curve.vertices.push_back(two[c].apex);
    curve.vertex_cells.push_back(first_two + static_cast<int>(c));
  }
  for (const auto& [key, s] : segs) {
    CurveEdge e;
    e.dual_cell = seg_index[key];
    e.weight = lattice_length(key.first, key.second);
    if (s.sides.size() == 2) {
      int u = std::get<0>(s.sides[0]);
      int v = std::get<0>(s.sides[1]);
      if (two[v].apex < two[u].apex) std::swap(u, v);
      e.kind = EdgeKind::bounded;
      e.from = u;
      e.to = v;
      e.dir = primitive_dir(two[v].apex.x - two[u].apex.x, two[v].apex.y - two[u].apex.y);
    } else if (s.sides.size() == 1) {
      auto [c, a, bb] = s.sides[0];
      LatticePoint d = bb - a;
      e.kind = EdgeKind::ray;
      e.from = c;
      long long g = std::gcd(std::llabs(d.x), std::llabs(d.y));
      e.dir = {d.y / g, -d.x / g};
    } else {
      throw std::logic_error("dual segment with more than two adjacent cells");
    }
    curve.edges.push_back(e);
  }
  return b;
}

Built build_one_dim(const BivariatePoly& p, const std::vector<LatticePoint>& hull) {
  Built b;
  LatticePoint p0 = hull[0];
  LatticePoint span = hull[1] - hull[0];
  long long g = std::gcd(std::llabs(span.x), std::llabs(span.y));
  LatticePoint d{span.x / g, span.y / g};
  std::map<int, Rational> lifted;
  std::map<int, LatticePoint> at;
  for (const auto& [m, c] : p.terms()) {
    LatticePoint q = LatticePoint{m.first, m.second} - p0;
    long long t = d.x != 0 ? q.x / d.x : q.y / d.y;
    lifted.emplace(static_cast<int>(t), c);
    at.emplace(static_cast<int>(t), LatticePoint{m.first, m.second});
  }
  TropicalUnivariatePoly uni(lifted);
  auto env = upper_envelope_degrees(uni);
  auto& cells = b.dual.cells;
  for (int t : env) cells.push_back({0, {at[t]}, {at[t]}});
  int first_one = static_cast<int>(cells.size());
  long long norm2 = d.x * d.x + d.y * d.y;
  for (std::size_t k = 0; k + 1 < env.size(); ++k) {
    int ti = env[k], tj = env[k + 1];
    const Rational& ai = lifted[ti];
    const Rational& aj = lifted[tj];
    DualCell cell{1, {at[ti], at[tj]}, {}};
    for (const auto& [t, a] : lifted) {
      if (t < ti || t > tj) continue;
      if (a == ai + Rational(t - ti) * (aj - ai) / Rational(tj - ti)) cell.support.push_back(at[t]);
    }
    cells.push_back(cell);
    CurveEdge e;
    e.kind = EdgeKind::line;
    e.weight = tj - ti;
    e.dual_cell = first_one + static_cast<int>(k);
    // d . X = (a_i - a_j) / (t_j - t_i)
    Rational c = (ai - aj) / Rational(tj - ti);
    e.anchor = {c * static_cast<long>(d.x) / static_cast<long>(norm2), c * static_cast<long>(d.y) / static_cast<long>(norm2)};
    e.dir = primitive_dir(Rational(static_cast<long>(-d.y)), Rational(static_cast<long>(d.x)));
    b.curve.edges.push_back(e);
  }
  b.dual.cofaces.assign(cells.size(), {});
  for (std::size_t k = 0; k + 1 < env.size(); ++k) {
    b.dual.cofaces[k].push_back(first_one + static_cast<int>(k));
    b.dual.cofaces[k + 1].push_back(first_one + static_cast<int>(k));
  }
  return b;
}

Built build(const BivariatePoly& p) {
  if (p.empty()) throw PreconditionError("empty polynomial");
  auto hull = p.newton_polygon();
  Built b;
  switch (polygon_dim(hull)) {
    case 0: {
      auto s = p.support();
      b.dual.cells.push_back({0, s, s});
      b.dual.cofaces.assign(1, {});
      break;
    }
    case 1:
      b = build_one_dim(p, hull);
      break;
    default:
      b = build_two_dim(p);
  }
  b.dual.newton_polygon = hull;
  return b;
}

}  // namespace

std::vector<int> DualSubdivision::cells_of_dim(int dim) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k].dim == dim) out.push_back(static_cast<int>(k));
  }
  return out;
}

bool DualSubdivision::on_boundary(int cell) const {
  const auto& c = cells[cell];
  if (newton_dim() < 2) return c.dim == 0 && (c.vertices[0] == newton_polygon.front() || c.vertices[0] == newton_polygon.back());
  if (c.dim == 2) return false;
  const auto& h = newton_polygon;
  for (std::size_t i = 0; i < h.size(); ++i) {
    LatticePoint a = h[i], b = h[(i + 1) % h.size()];
    bool all = std::all_of(c.vertices.begin(), c.vertices.end(), [&](LatticePoint p) { return on_segment(a, b, p); });
    if (all) return true;
  }
  return false;
}

DualSubdivision dual_subdivision(const BivariatePoly& p) { return build(p).dual; }

std::vector<int> PlaneCurve::bounded_edges() const {
  std::vector<int> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].kind == EdgeKind::bounded) out.push_back(static_cast<int>(e));
  }
  return out;
}

std::vector<std::pair<int, LatticePoint>> vertex_germs(const PlaneCurve& c, int v) {
  std::vector<std::pair<int, LatticePoint>> out;
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    const auto& edge = c.edges[e];
    if (edge.kind == EdgeKind::line) continue;
    if (edge.from == v) out.push_back({static_cast<int>(e), edge.dir});
    if (edge.kind == EdgeKind::bounded && edge.to == v) out.push_back({static_cast<int>(e), {-edge.dir.x, -edge.dir.y}});
  }
  return out;
}

PlaneCurve tropical_curve(const BivariatePoly& p) {
  Built b = build(p);
  if (b.dual.newton_dim() == 0) throw PreconditionError("a single monomial defines no curve");
  b.curve.dual = std::move(b.dual);
  return b.curve;
}

bool check_balanced(const PlaneCurve& c) {
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    long long sx = 0, sy = 0;
    for (const auto& [e, dir] : vertex_germs(c, static_cast<int>(v))) {
      sx += c.edges[e].weight * dir.x;
      sy += c.edges[e].weight * dir.y;
    }
    if (sx != 0 || sy != 0) return false;
  }
  return true;
}

bool is_nonsingular(const PlaneCurve& c) {
  if (!c.dual) throw PreconditionError("curve carries no dual subdivision");
  const auto& d = *c.dual;
  if (d.newton_dim() < 2) {
    return std::all_of(c.edges.begin(), c.edges.end(), [](const CurveEdge& e) { return e.weight == 1; });
  }
  for (int k : d.cells_of_dim(2)) {
    if (d.cells[k].vertices.size() != 3 || double_area(d.cells[k].vertices) != 1) return false;
  }
  return true;
}

int first_betti_number(const PlaneCurve& c) {
  std::vector<int> parent(c.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = static_cast<int>(c.vertices.size());
  int edges = 0;
  for (const auto& e : c.edges) {
    if (e.kind != EdgeKind::bounded) continue;
    ++edges;
    int a = find(e.from), b = find(e.to);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return edges - static_cast<int>(c.vertices.size()) + components;
}

int curve_degree(const PlaneCurve& c) {
  if (!c.dual) throw PreconditionError("curve carries no dual subdivision");
  long long d = 0;
  for (const auto& p : c.dual->newton_polygon) d = std::max(d, p.x + p.y);
  return static_cast<int>(d);
}

NodalProfile nodal_profile(const PlaneCurve& c, int d) {
  if (!c.dual) throw PreconditionError("curve carries no dual subdivision");
  const auto& dual = *c.dual;
  for (const auto& p : dual.newton_polygon) {
    if (p.x < 0 || p.y < 0 || p.x + p.y > d) throw PreconditionError("Newton polygon is not inside the degree-d simplex");
  }
  NodalProfile out;
  if (dual.newton_dim() < 2) return out;
  int parallelograms = 0;
  for (int k : dual.cells_of_dim(2)) {
    const auto& v = dual.cells[k].vertices;
    if (v.size() == 3) continue;
    if (v.size() == 4 && v[0] + v[2] == v[1] + v[3]) {
      ++parallelograms;
      continue;
    }
    return out;
  }
  for (const auto& e : c.edges) {
    if (e.kind == EdgeKind::ray && e.weight != 1) return out;
  }
  std::set<LatticePoint> zero;
  for (int k : dual.cells_of_dim(0)) zero.insert(dual.cells[k].vertices[0]);
  int missing = 0;
  for (const auto& p : lattice_points(simplex(d))) {
    if (!zero.count(p)) ++missing;
  }
  out.is_nodal = true;
  out.delta = missing + parallelograms;
  out.genus = (d - 1) * (d - 2) / 2 - *out.delta;
  return out;
}

Multiplicities curve_multiplicities(const PlaneCurve& c) {
  Multiplicities out;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    auto germs = vertex_germs(c, static_cast<int>(v));
    auto weighted = [&](std::size_t k) {
      long long w = c.edges[germs[k].first].weight;
      return LatticePoint{w * germs[k].second.x, w * germs[k].second.y};
    };
    if (germs.size() == 4) {
      // A transverse crossing of two edges: opposite germs pair up.
      std::vector<bool> used(4, false);
      int pairs = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4 && !used[i]; ++j) {
          LatticePoint a = weighted(i), b = weighted(j);
          if (!used[j] && a.x == -b.x && a.y == -b.y) {
            used[i] = used[j] = true;
            ++pairs;
          }
        }
      }
      if (pairs == 2 && cross(weighted(0), weighted(1)) != 0) continue;
      throw PreconditionError("vertex is neither trivalent nor a transverse crossing");
    }
    if (germs.size() != 3) throw PreconditionError("vertex is neither trivalent nor a transverse crossing");
    long long m = std::llabs(cross(weighted(0), weighted(1)));
    if (m == 0) throw PreconditionError("degenerate trivalent vertex");
    long long boundary = 0;
    for (std::size_t k = 0; k < 3; ++k) boundary += c.edges[germs[k].first].weight;
    long long interior = (m - boundary + 2) / 2;
    out.m_C *= m;
    out.m_R *= m % 2 == 0 ? 0 : (interior % 2 == 0 ? 1 : -1);
    out.G = out.G * LaurentQ::quantum_integer(static_cast<int>(m));
  }
  return out;
}

}  // namespace tropkit
