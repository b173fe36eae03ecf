#include "tropkit/patchwork.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "tropkit/error.hpp"

namespace tropkit {

namespace {

void require_nonsingular(const PlaneCurve& c) {
  if (c.vertices.empty()) throw PreconditionError("patchworking needs a curve with vertices");
  if (c.dual) {
    if (!is_nonsingular(c)) throw PreconditionError("curve is singular");
    return;
  }
  for (const auto& e : c.edges) {
    if (e.weight != 1) throw PreconditionError("curve is singular");
  }
  if (curve_multiplicities(c).m_C != 1) throw PreconditionError("curve is singular");
}

std::set<int> twist_members(const PlaneCurve& c, const TwistSet& t) {
  std::set<int> out;
  for (int e : t) {
    if (e < 0 || e >= static_cast<int>(c.edges.size()) || c.edges[e].kind != EdgeKind::bounded) {
      throw PreconditionError("twist set contains e" + std::to_string(e) + ", which is not a bounded edge");
    }
    out.insert(e);
  }
  return out;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

bool connected_without(const PlaneCurve& c, const std::set<int>& removed) {
  UnionFind uf(c.vertices.size());
  int comps = static_cast<int>(c.vertices.size());
  for (int e : c.bounded_edges()) {
    if (removed.count(e)) continue;
    if (uf.unite(c.edges[e].from, c.edges[e].to)) --comps;
  }
  return comps <= 1;
}

// Counterclockwise order of primitive directions, starting at angle 0.
bool ccw_less(LatticePoint a, LatticePoint b) {
  auto half = [](LatticePoint p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
  if (half(a) != half(b)) return half(a) < half(b);
  return cross(a, b) > 0;
}

SignPair edge_factor(LatticePoint dir) { return {dir.x % 2 == 0 ? 1 : -1, dir.y % 2 == 0 ? 1 : -1}; }

SignPair operator*(SignPair a, SignPair b) { return {a.x * b.x, a.y * b.y}; }

}  // namespace

std::vector<std::vector<int>> cycle_basis(const PlaneCurve& c) {
  std::size_t n = c.vertices.size();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e : c.bounded_edges()) {
    adj[c.edges[e].from].push_back({c.edges[e].to, e});
    adj[c.edges[e].to].push_back({c.edges[e].from, e});
  }
  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, -1);
  std::set<int> tree;
  for (std::size_t root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(root));
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, e] : adj[v]) {
        if (depth[w] >= 0) continue;
        depth[w] = depth[v] + 1;
        parent[w] = v;
        parent_edge[w] = e;
        tree.insert(e);
        q.push(w);
      }
    }
  }
  std::vector<std::vector<int>> out;
  for (int e : c.bounded_edges()) {
    if (tree.count(e)) continue;
    std::vector<int> cyc{e};
    int a = c.edges[e].from, b = c.edges[e].to;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      cyc.push_back(parent_edge[a]);
      a = parent[a];
    }
    std::sort(cyc.begin(), cyc.end());
    out.push_back(cyc);
  }
  return out;
}

bool is_twist_admissible(const PlaneCurve& c, const TwistSet& t) {
  auto members = twist_members(c, t);
  for (const auto& cyc : cycle_basis(c)) {
    long long sx = 0, sy = 0;
    for (int e : cyc) {
      if (!members.count(e)) continue;
      sx += c.edges[e].dir.x;
      sy += c.edges[e].dir.y;
    }
    if (sx % 2 != 0 || sy % 2 != 0) return false;
  }
  return true;
}

bool is_type_I(const PlaneCurve& c, const TwistSet& t) {
  auto members = twist_members(c, t);
  for (const auto& cyc : cycle_basis(c)) {
    auto k = std::count_if(cyc.begin(), cyc.end(), [&](int e) { return members.count(e) > 0; });
    if (k % 2 != 0) return false;
  }
  return true;
}

bool is_maximal_twist(const PlaneCurve& c, const TwistSet& t) {
  if (!is_twist_admissible(c, t)) throw PreconditionError("twist set is not admissible");
  if (!is_type_I(c, t)) return false;
  auto members = twist_members(c, t);
  for (int e : members) {
    if (!connected_without(c, {e})) continue;
    bool paired = false;
    for (int f : members) {
      if (f == e || !connected_without(c, {f})) continue;
      if (!connected_without(c, {e, f})) {
        paired = true;
        break;
      }
    }
    if (!paired) return false;
  }
  return true;
}

PatchworkResult patchwork(const PlaneCurve& c, const TwistSet& t) {
  require_nonsingular(c);
  if (!is_twist_admissible(c, t)) throw PreconditionError("twist set is not admissible");
  auto members = twist_members(c, t);

  // Germ ids: per vertex, germs in ccw order. Node 2g is the ccw side of
  // germ g, node 2g+1 its cw side.
  struct Germ {
    int vertex;
    int edge;
    LatticePoint dir;
  };
  std::vector<Germ> germs;
  std::map<std::pair<int, int>, int> germ_of;  // (vertex, edge) -> germ id
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    auto gs = vertex_germs(c, static_cast<int>(v));
    std::sort(gs.begin(), gs.end(), [](const auto& a, const auto& b) { return ccw_less(a.second, b.second); });
    for (const auto& [e, dir] : gs) {
      germ_of[{static_cast<int>(v), e}] = static_cast<int>(germs.size());
      germs.push_back({static_cast<int>(v), e, dir});
    }
  }
  std::size_t nodes = 2 * germs.size();
  UnionFind arcs(nodes);
  // Around each vertex: ccw side of one germ meets the cw side of the next.
  for (std::size_t g = 0; g < germs.size();) {
    std::size_t end = g;
    while (end < germs.size() && germs[end].vertex == germs[g].vertex) ++end;
    for (std::size_t k = g; k < end; ++k) {
      std::size_t next = k + 1 == end ? g : k + 1;
      arcs.unite(static_cast<int>(2 * k), static_cast<int>(2 * next + 1));
    }
    g = end;
  }
  for (int e : c.bounded_edges()) {
    int a = germ_of.at({c.edges[e].from, e});
    int b = germ_of.at({c.edges[e].to, e});
    if (members.count(e)) {
      arcs.unite(2 * a, 2 * b);
      arcs.unite(2 * a + 1, 2 * b + 1);
    } else {
      arcs.unite(2 * a, 2 * b + 1);
      arcs.unite(2 * a + 1, 2 * b);
    }
  }

  // Sign propagation: the two sides of a germ differ by the edge factor.
  std::map<int, std::vector<std::pair<int, SignPair>>> constraints;
  for (std::size_t g = 0; g < germs.size(); ++g) {
    int a = arcs.find(static_cast<int>(2 * g));
    int b = arcs.find(static_cast<int>(2 * g + 1));
    SignPair f = edge_factor(germs[g].dir);
    if (a == b) throw PreconditionError("inconsistent sign propagation");
    constraints[a].push_back({b, f});
    constraints[b].push_back({a, f});
  }
  std::map<int, SignPair> sign;
  for (const auto& [root, _] : constraints) {
    if (sign.count(root)) continue;
    sign[root] = {1, 1};
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (auto [y, f] : constraints[x]) {
        SignPair want = sign[x] * f;
        auto it = sign.find(y);
        if (it == sign.end()) {
          sign[y] = want;
          q.push(y);
        } else if (it->second != want) {
          throw PreconditionError("inconsistent sign propagation");
        }
      }
    }
  }

  PatchworkResult out;
  std::map<int, std::set<int>> arc_edges;
  for (std::size_t n = 0; n < nodes; ++n) arc_edges[arcs.find(static_cast<int>(n))].insert(germs[n / 2].edge);
  for (const auto& [root, edges] : arc_edges) {
    out.arcs.push_back({std::vector<int>(edges.begin(), edges.end()), sign.at(root)});
  }
  std::vector<SignPair> best;
  for (SignPair flip : {SignPair{1, 1}, SignPair{-1, 1}, SignPair{1, -1}, SignPair{-1, -1}}) {
    std::vector<SignPair> s;
    for (const auto& a : out.arcs) s.push_back(a.sign * flip);
    std::sort(s.begin(), s.end());
    if (best.empty() || s < best) best = s;
  }
  out.canonical_signs = best;

  UnionFind closed = arcs;
  for (std::size_t g = 0; g < germs.size(); ++g) {
    if (c.edges[germs[g].edge].kind == EdgeKind::ray) closed.unite(static_cast<int>(2 * g), static_cast<int>(2 * g + 1));
  }
  std::set<int> roots;
  for (std::size_t n = 0; n < nodes; ++n) roots.insert(closed.find(static_cast<int>(n)));
  out.component_count = static_cast<int>(roots.size());

  out.type_I = is_type_I(c, t);
  // Two-colour the vertices so that colours differ exactly across twisted edges.
  out.orientable_quotient = true;
  {
    std::vector<int> colour(c.vertices.size(), -1);
    std::vector<std::vector<std::pair<int, int>>> adj(c.vertices.size());
    for (int e : c.bounded_edges()) {
      int flip = members.count(e) ? 1 : 0;
      adj[c.edges[e].from].push_back({c.edges[e].to, flip});
      adj[c.edges[e].to].push_back({c.edges[e].from, flip});
    }
    for (std::size_t r = 0; r < c.vertices.size() && out.orientable_quotient; ++r) {
      if (colour[r] >= 0) continue;
      colour[r] = 0;
      std::queue<int> q;
      q.push(static_cast<int>(r));
      while (!q.empty() && out.orientable_quotient) {
        int v = q.front();
        q.pop();
        for (auto [w, flip] : adj[v]) {
          int want = colour[v] ^ flip;
          if (colour[w] < 0) {
            colour[w] = want;
            q.push(w);
          } else if (colour[w] != want) {
            out.orientable_quotient = false;
            break;
          }
        }
      }
    }
  }
  out.maximal = is_maximal_twist(c, t);
  out.euler_char_quotient = static_cast<int>(c.vertices.size()) - static_cast<int>(c.bounded_edges().size());
  return out;
}

TwistSet twists_from_signs(const PlaneCurve& c, const SignDistribution& s) {
  require_nonsingular(c);
  if (!c.dual) throw PreconditionError("curve carries no dual subdivision");
  const auto& dual = *c.dual;
  for (int k : dual.cells_of_dim(0)) {
    if (!s.count(dual.cells[k].vertices[0])) throw PreconditionError("sign distribution misses a subdivision vertex");
  }
  auto gamma = [&](LatticePoint p) {
    int v = s.at(p);
    if (v != 1 && v != -1) throw PreconditionError("signs must be +1 or -1");
    return v;
  };
  TwistSet out;
  for (int e : c.bounded_edges()) {
    const auto& seg = dual.cells[c.edges[e].dual_cell];
    LatticePoint p1 = seg.vertices[0], p2 = seg.vertices[1];
    std::vector<LatticePoint> apex;
    for (int tri : dual.cofaces[c.edges[e].dual_cell]) {
      for (const auto& q : dual.cells[tri].vertices) {
        if (q != p1 && q != p2) apex.push_back(q);
      }
    }
    if (apex.size() != 2) throw std::logic_error("bounded edge without two adjacent triangles");
    LatticePoint p3 = apex[0], p4 = apex[1];
    bool same_parity = ((p3.x - p4.x) % 2 == 0) && ((p3.y - p4.y) % 2 == 0);
    bool twisted = same_parity ? gamma(p3) * gamma(p4) < 0 : gamma(p1) * gamma(p2) * gamma(p3) * gamma(p4) > 0;
    if (twisted) out.push_back(e);
  }
  return out;
}

}  // namespace tropkit
