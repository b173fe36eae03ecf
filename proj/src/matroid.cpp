#include "tropkit/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>

#include "tropkit/error.hpp"

namespace tropkit {

namespace {

constexpr int kMaxGround = 20;

ElementSet ground_mask(int n) { return (ElementSet{1} << (n + 1)) - 1; }

}  // namespace

Matroid Matroid::from_flats(int n, std::vector<Flat> flats) {
  if (n < 0 || n + 1 > kMaxGround) throw PreconditionError("ground set size out of range");
  ElementSet full = ground_mask(n);
  std::map<ElementSet, int> rank_of;
  for (const auto& f : flats) {
    if ((f.set & ~full) != 0) throw PreconditionError("flat contains elements outside the ground set");
    auto [it, inserted] = rank_of.emplace(f.set, f.rank);
    if (!inserted && it->second != f.rank) throw PreconditionError("flat listed twice with different ranks");
  }
  // The bottom flat is the set of loops; it defaults to the empty set.
  bool has_bottom = std::any_of(rank_of.begin(), rank_of.end(), [](const auto& f) { return f.second == 0; });
  if (!has_bottom) rank_of[0] = 0;
  if (!rank_of.count(full)) {
    int top = 0;
    for (const auto& [s, r] : rank_of) top = std::max(top, r);
    rank_of[full] = top + 1;
  }
  // Geometric lattice checks: intersections of flats are flats, ranks
  // increase strictly along inclusion, and the flats covering any flat F
  // have rank r(F) + 1 and partition the complement of F.
  for (const auto& [a, ra] : rank_of) {
    for (const auto& [b, rb] : rank_of) {
      if (!rank_of.count(a & b)) throw PreconditionError("flats are not closed under intersection");
      if (a != b && (a & b) == a && ra >= rb) throw PreconditionError("flat ranks do not increase along inclusion");
    }
  }
  for (const auto& [f, rf] : rank_of) {
    if (f == full) continue;
    std::vector<ElementSet> covers;
    for (const auto& [g, rg] : rank_of) {
      if (g == f || (g & f) != f) continue;
      bool minimal = true;
      for (const auto& [h, rh] : rank_of) {
        if (h != f && h != g && (h & f) == f && (h & g) == h) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      if (rg != rf + 1) throw PreconditionError("a covering flat does not raise the rank by one");
      covers.push_back(g & ~f);
    }
    ElementSet seen = 0;
    for (auto c : covers) {
      if (seen & c) throw PreconditionError("covering flats overlap outside the flat they cover");
      seen |= c;
    }
    if (seen != (full & ~f)) throw PreconditionError("covering flats do not cover the ground set");
  }
  Matroid m;
  m.n_ = n;
  m.rank_ = rank_of.at(full);
  for (const auto& [s, r] : rank_of) m.flats_.push_back({s, r});
  std::sort(m.flats_.begin(), m.flats_.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.set < b.set;
  });
  return m;
}

Matroid Matroid::from_rank_function(int n, const std::function<int(ElementSet)>& rank) {
  if (n < 0 || n + 1 > kMaxGround) throw PreconditionError("ground set size out of range");
  ElementSet full = ground_mask(n);
  std::vector<Flat> flats;
  for (ElementSet s = 0;; ++s) {
    int r = rank(s);
    bool closed = true;
    for (int e = 0; e <= n && closed; ++e) {
      ElementSet bit = ElementSet{1} << e;
      if (!(s & bit) && rank(s | bit) == r) closed = false;
    }
    if (closed) flats.push_back({s, r});
    if (s == full) break;
  }
  return from_flats(n, flats);
}

Matroid Matroid::from_vectors(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) throw PreconditionError("matroid needs at least one vector");
  int n = static_cast<int>(vectors.size()) - 1;
  return from_rank_function(n, [&](ElementSet s) {
    std::vector<IntVec> rows;
    for (int e = 0; e <= n; ++e) {
      if (s & (ElementSet{1} << e)) rows.push_back(vectors[e]);
    }
    return rows.empty() ? 0 : rational_rank(rows);
  });
}

Matroid Matroid::uniform(int n, int k) {
  if (k < 1 || k > n + 1) throw PreconditionError("uniform matroid needs 1 <= rank <= n + 1");
  return from_rank_function(n, [k](ElementSet s) { return std::min(k, std::popcount(s)); });
}

Matroid Matroid::braid() {
  return from_vectors({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
}

std::vector<Flat> Matroid::proper_flats() const {
  std::vector<Flat> out;
  ElementSet full = ground_mask(n_);
  for (const auto& f : flats_) {
    if (f.set != 0 && f.set != full) out.push_back(f);
  }
  return out;
}

bool Matroid::is_loopless() const { return flats_.front().set == 0; }

PolyhedralFan matroid_fan(const Matroid& m) {
  if (!m.is_loopless()) throw PreconditionError("matroid has loops");
  if (m.rank() < 1) throw PreconditionError("matroid rank must be at least 1");
  PolyhedralFan f;
  f.n = m.n();
  f.dim = m.rank() - 1;
  auto proper = m.proper_flats();
  for (const auto& flat : proper) {
    IntVec v(f.n, 0);
    for (int e = 0; e <= m.n(); ++e) {
      if (!(flat.set & (ElementSet{1} << e))) continue;
      if (e == 0) {
        for (auto& x : v) x += 1;
      } else {
        v[e - 1] -= 1;
      }
    }
    f.rays.push_back(v);
  }
  // Flags F_1 < ... < F_{r-1} with rank(F_k) = k.
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int rank) {
    if (rank == m.rank()) {
      Cone c{chain, 1};
      std::sort(c.rays.begin(), c.rays.end());
      f.cones.push_back(c);
      return;
    }
    for (std::size_t i = 0; i < proper.size(); ++i) {
      if (proper[i].rank != rank) continue;
      if (!chain.empty() && (proper[chain.back()].set & proper[i].set) != proper[chain.back()].set) continue;
      chain.push_back(static_cast<int>(i));
      extend(rank + 1);
      chain.pop_back();
    }
  };
  extend(1);
  return f;
}

bool verify_balancing(const PolyhedralFan& f) {
  for (const auto& c : f.cones) {
    if (static_cast<int>(c.rays.size()) != f.dim) throw PreconditionError("fan is not pure-dimensional");
    std::vector<IntVec> gens;
    for (int r : c.rays) gens.push_back(f.rays.at(r));
    if (rational_rank(gens) != f.dim) throw PreconditionError("fan is not simplicial");
  }
  if (f.dim == 0) return true;
  // codim-1 face (sorted ray set) -> (facet index, extra ray)
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> ridges;
  for (std::size_t k = 0; k < f.cones.size(); ++k) {
    const auto& rays = f.cones[k].rays;
    for (std::size_t drop = 0; drop < rays.size(); ++drop) {
      std::vector<int> face;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (i != drop) face.push_back(rays[i]);
      }
      ridges[face].push_back({static_cast<int>(k), rays[drop]});
    }
  }
  for (const auto& [face, facets] : ridges) {
    std::vector<IntVec> gens;
    for (int r : face) gens.push_back(f.rays[r]);
    IntVec sum(f.n, 0);
    for (const auto& [k, extra] : facets) {
      IntVec u = facet_primitive_normal(gens, f.rays[extra]);
      for (int t = 0; t < f.n; ++t) sum[t] += f.cones[k].weight * u[t];
    }
    if (gens.empty()) {
      if (std::any_of(sum.begin(), sum.end(), [](long long x) { return x != 0; })) return false;
    } else if (!in_span(gens, sum)) {
      return false;
    }
  }
  return true;
}

std::vector<int> LinkGraph::degrees() const {
  std::vector<int> d(vertices, 0);
  for (auto [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

int LinkGraph::girth() const {
  std::vector<std::vector<int>> adj(vertices);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int best = 0;
  for (int s = 0; s < vertices; ++s) {
    std::vector<int> dist(vertices, -1), parent(vertices, -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

LinkGraph fan_link(const PolyhedralFan& f) {
  if (f.dim != 1 && f.dim != 2) throw PreconditionError("fan link needs a fan of dimension 1 or 2");
  int nv = static_cast<int>(f.rays.size());
  if (f.dim == 1) return LinkGraph{nv, {}};
  // Multigraph with edge weights; smoothing may create parallel edges.
  struct E {
    int a, b;
    long long w;
    bool alive;
  };
  std::vector<E> edges;
  for (const auto& c : f.cones) edges.push_back({c.rays[0], c.rays[1], c.weight, true});
  std::vector<bool> removed(nv, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < nv; ++v) {
      if (removed[v]) continue;
      std::vector<int> inc;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (edges[k].alive && (edges[k].a == v || edges[k].b == v)) inc.push_back(static_cast<int>(k));
      }
      if (inc.size() != 2) continue;
      auto other = [&](int k) { return edges[k].a == v ? edges[k].b : edges[k].a; };
      int x = other(inc[0]), y = other(inc[1]);
      if (x == y || edges[inc[0]].w != edges[inc[1]].w) continue;
      if (rational_rank(std::vector<IntVec>{f.rays[v], f.rays[x], f.rays[y]}) != 2) continue;
      edges[inc[0]].alive = edges[inc[1]].alive = false;
      edges.push_back({x, y, edges[inc[0]].w, true});
      removed[v] = true;
      changed = true;
    }
  }
  std::vector<int> index(nv, -1);
  LinkGraph g;
  for (int v = 0; v < nv; ++v) {
    if (!removed[v]) index[v] = g.vertices++;
  }
  for (const auto& e : edges) {
    if (e.alive) g.edges.push_back({std::min(index[e.a], index[e.b]), std::max(index[e.a], index[e.b])});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace tropkit
