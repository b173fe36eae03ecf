#include "tropkit/metric_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tropkit/error.hpp"

namespace tropkit {

namespace {

struct Components {
  std::vector<int> id;
  int count = 0;
};

Components components(const MetricGraph& g) {
  std::vector<int> p(g.vertices.size());
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  for (const auto& e : g.edges) p[find(e.a)] = find(e.b);
  Components c;
  c.id.assign(g.vertices.size(), -1);
  std::vector<int> label(g.vertices.size(), -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    int r = find(static_cast<int>(v));
    if (label[r] < 0) label[r] = c.count++;
    c.id[v] = label[r];
  }
  return c;
}

void check_removed(const MetricGraph& g, const std::set<int>& removed) {
  for (int v : removed) {
    if (v < 0 || v >= static_cast<int>(g.vertices.size()) || !g.vertices[v].infinite) {
      throw PreconditionError("only infinite vertices can be removed");
    }
  }
}

// Germ position of edge e within the edge list of vertex v.
std::vector<std::vector<int>> incidence(const MetricGraph& g) {
  std::vector<std::vector<int>> inc(g.vertices.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    inc[g.edges[e].a].push_back(static_cast<int>(e));
    inc[g.edges[e].b].push_back(static_cast<int>(e));
  }
  return inc;
}

int germ_index(const std::vector<int>& inc, int e, bool second) {
  // A loop appears twice; the second occurrence is its b end.
  bool skip = second;
  for (std::size_t k = 0; k < inc.size(); ++k) {
    if (inc[k] != e) continue;
    if (!skip) return static_cast<int>(k);
    skip = false;
  }
  throw std::logic_error("edge is not incident to vertex");
}


}  // namespace

int MetricGraph::valence(int v) const {
  int k = 0;
  for (const auto& e : edges) k += (e.a == v) + (e.b == v);
  return k;
}

void MetricGraph::validate() const {
  int nv = static_cast<int>(vertices.size());
  for (const auto& e : edges) {
    if (e.a < 0 || e.a >= nv || e.b < 0 || e.b >= nv) throw PreconditionError("edge endpoint out of range");
    bool towards_infinity = vertices[e.a].infinite || vertices[e.b].infinite;
    if (towards_infinity && e.length) throw PreconditionError("edges to infinite vertices must have infinite length");
    if (!towards_infinity && !e.length) throw PreconditionError("edges between finite vertices need a finite length");
    if (e.length && *e.length <= 0) throw PreconditionError("edge lengths must be positive");
    if (vertices[e.a].infinite && vertices[e.b].infinite) throw PreconditionError("an edge cannot join two infinite vertices");
  }
  for (int v = 0; v < nv; ++v) {
    int k = valence(v);
    if (k == 0) throw PreconditionError("isolated vertex " + std::to_string(v));
    if (vertices[v].infinite && k != 1) throw PreconditionError("infinite vertices must be one-valent");
  }
}

std::vector<int> component_genera(const MetricGraph& g) {
  g.validate();
  auto c = components(g);
  std::vector<int> genera(c.count, 1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) --genera[c.id[v]];
  for (const auto& e : g.edges) ++genera[c.id[e.a]];
  return genera;
}

int genus(const MetricGraph& g) {
  auto genera = component_genera(g);
  if (genera.size() != 1) throw PreconditionError("graph is disconnected");
  return genera[0];
}

MetricGraph elementary_modification(const MetricGraph& g, const GraphPoint& p) {
  g.validate();
  MetricGraph out = g;
  int attach;
  if (p.vertex >= 0) {
    if (p.vertex >= static_cast<int>(g.vertices.size())) throw PreconditionError("vertex out of range");
    if (g.vertices[p.vertex].infinite) throw PreconditionError("cannot modify at a one-valent infinite vertex");
    attach = p.vertex;
  } else {
    if (p.edge < 0 || p.edge >= static_cast<int>(g.edges.size())) throw PreconditionError("edge out of range");
    const GraphEdge e = g.edges[p.edge];
    if (p.distance <= 0 || (e.length && p.distance >= *e.length)) {
      throw PreconditionError("point must lie strictly inside the edge");
    }
    if (!e.length && g.vertices[e.a].infinite) throw PreconditionError("measure the distance from the finite end of a leaf");
    attach = static_cast<int>(out.vertices.size());
    out.vertices.push_back({false});
    out.edges[p.edge] = {e.a, attach, p.distance};
    std::optional<Rational> rest;
    if (e.length) rest = *e.length - p.distance;
    out.edges.push_back({attach, e.b, rest});
  }
  int leaf = static_cast<int>(out.vertices.size());
  out.vertices.push_back({true});
  out.edges.push_back({attach, leaf, std::nullopt});
  return out;
}

MorphismReport validate_morphism(const TropicalMorphism& m) {
  MorphismReport r;
  const auto& g = m.source;
  g.validate();
  check_removed(g, m.removed);
  if (m.velocity.size() != g.edges.size()) throw PreconditionError("one velocity per edge is required");
  for (const auto& u : m.velocity) {
    if (static_cast<int>(u.size()) != m.n) throw PreconditionError("velocity length does not match n");
  }
  auto zero = [](const IntVec& u) { return std::all_of(u.begin(), u.end(), [](long long x) { return x == 0; }); };
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].infinite) continue;
    IntVec s(m.n, 0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      int sign = (g.edges[e].a == static_cast<int>(v) ? 1 : 0) - (g.edges[e].b == static_cast<int>(v) ? 1 : 0);
      for (int k = 0; k < m.n; ++k) s[k] += sign * m.velocity[e][k];
    }
    if (!zero(s)) r.problems.push_back("balancing fails at vertex " + std::to_string(v));
  }
  long long degree = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    int inf = g.vertices[edge.b].infinite ? edge.b : (g.vertices[edge.a].infinite ? edge.a : -1);
    if (inf < 0) continue;
    IntVec out = m.velocity[e];
    if (inf == edge.a) {
      for (auto& x : out) x = -x;
    }
    if (m.removed.count(inf)) {
      if (zero(out)) r.problems.push_back("end " + std::to_string(e) + " is contracted but its vertex is removed");
      degree += std::max(0LL, *std::max_element(out.begin(), out.end()));
    } else if (!zero(out)) {
      r.problems.push_back("edge " + std::to_string(e) + " reaches a kept infinite vertex with nonzero velocity");
    }
  }
  r.valid = r.problems.empty();
  if (r.valid) r.degree = degree;
  return r;
}

namespace {

void require_connected(const MetricGraph& g) {
  g.validate();
  if (components(g).count != 1) throw PreconditionError("graph is disconnected");
}

int matrix_rank(const std::vector<RatVec>& rows) { return rows.empty() ? 0 : rational_rank(rows); }

}  // namespace

CurveCohomology curve_cohomology(const MetricGraph& g, const std::set<int>& removed) {
  require_connected(g);
  check_removed(g, removed);
  auto inc = incidence(g);
  auto present = [&](int v) { return !removed.count(v); };
  std::vector<int> closed;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (present(g.edges[e].a) && present(g.edges[e].b)) closed.push_back(static_cast<int>(e));
  }
  CurveCohomology h;

  // p = 0: constant coefficients.
  std::vector<int> vid(g.vertices.size(), -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (present(static_cast<int>(v))) vid[v] = h.c00++;
  }
  h.c01 = static_cast<int>(closed.size());
  {
    std::vector<RatVec> d0;
    for (int e : closed) {
      RatVec row(h.c00, Rational(0));
      row[vid[g.edges[e].b]] += 1;
      row[vid[g.edges[e].a]] -= 1;
      d0.push_back(row);
    }
    int r = matrix_rank(d0);
    h.h00 = h.c00 - r;
    h.h01 = h.c01 - r;
  }

  // p = 1: at a finite vertex of valence k the stalk is {phi in R^k : sum = 0},
  // coordinates phi_1..phi_{k-1} with phi_k = -(phi_1 + ... + phi_{k-1}).
  std::vector<int> offset(g.vertices.size(), -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (!present(static_cast<int>(v)) || g.vertices[v].infinite) continue;
    int k = static_cast<int>(inc[v].size());
    if (k - 1 <= 0) continue;
    offset[v] = h.c10;
    h.c10 += k - 1;
  }
  h.c11 = static_cast<int>(closed.size());
  {
    std::vector<RatVec> d1;
    auto restrict = [&](RatVec& row, int v, int e, bool second, int sign) {
      if (offset[v] < 0) return;
      int k = static_cast<int>(inc[v].size());
      int gi = germ_index(inc[v], e, second);
      if (gi < k - 1) {
        row[offset[v] + gi] += sign;
      } else {
        for (int t = 0; t < k - 1; ++t) row[offset[v] + t] -= sign;
      }
    };
    for (int e : closed) {
      RatVec row(h.c10, Rational(0));
      // rho_b(phi_b) - rho_a(phi_a), with rho_a = phi_a[germ], rho_b = -phi_b[germ].
      bool loop = g.edges[e].a == g.edges[e].b;
      restrict(row, g.edges[e].b, e, loop, -1);
      restrict(row, g.edges[e].a, e, false, -1);
      d1.push_back(row);
    }
    int r = matrix_rank(d1);
    h.h10 = h.c10 - r;
    h.h11 = h.c11 - r;
  }
  return h;
}

CurveCohomology curve_homology(const MetricGraph& g, const std::set<int>& removed) {
  require_connected(g);
  check_removed(g, removed);
  auto inc = incidence(g);
  auto present = [&](int v) { return !removed.count(v); };
  std::vector<int> closed;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (present(g.edges[e].a) && present(g.edges[e].b)) closed.push_back(static_cast<int>(e));
  }
  CurveCohomology h;
  // Boundary matrices as columns indexed by edges; rank via the transpose
  // of the column list (rank is unaffected).
  std::vector<int> vid(g.vertices.size(), -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (present(static_cast<int>(v))) vid[v] = h.c00++;
  }
  h.c01 = static_cast<int>(closed.size());
  {
    std::vector<RatVec> cols;
    for (int e : closed) {
      RatVec col(h.c00, Rational(0));
      col[vid[g.edges[e].b]] += 1;
      col[vid[g.edges[e].a]] -= 1;
      cols.push_back(col);
    }
    int r = matrix_rank(cols);
    h.h00 = h.c00 - r;
    h.h01 = h.c01 - r;
  }
  // F_1 at a finite vertex: R^k / (1, ..., 1), basis the classes of the
  // first k-1 germs; the last germ is minus their sum.
  std::vector<int> offset(g.vertices.size(), -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (!present(static_cast<int>(v)) || g.vertices[v].infinite) continue;
    int k = static_cast<int>(inc[v].size());
    if (k <= 1) continue;
    offset[v] = h.c10;
    h.c10 += k - 1;
  }
  h.c11 = static_cast<int>(closed.size());
  {
    std::vector<RatVec> cols;
    auto include = [&](RatVec& col, int v, int e, bool second, int sign) {
      if (offset[v] < 0) return;
      int k = static_cast<int>(inc[v].size());
      int gi = germ_index(inc[v], e, second);
      if (gi < k - 1) {
        col[offset[v] + gi] += sign;
      } else {
        for (int t = 0; t < k - 1; ++t) col[offset[v] + t] -= sign;
      }
    };
    for (int e : closed) {
      // The edge vector u_e leaves a along its germ and enters b against it.
      RatVec col(h.c10, Rational(0));
      bool loop = g.edges[e].a == g.edges[e].b;
      include(col, g.edges[e].b, e, loop, -1);
      include(col, g.edges[e].a, e, false, -1);
      cols.push_back(col);
    }
    int r = matrix_rank(cols);
    h.h10 = h.c10 - r;
    h.h11 = h.c11 - r;
  }
  return h;
}

}  // namespace tropkit
