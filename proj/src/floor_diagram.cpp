#include "tropkit/floor_diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>

#include "tropkit/error.hpp"
#include "tropkit/parallel.hpp"

namespace tropkit {

namespace {

constexpr int kMaxDegree = 6;

bool is_connected(const FloorDiagram& D) {
  std::vector<int> p(D.d);
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  int comps = D.d;
  for (const auto& e : D.edges) {
    int a = find(e.s), b = find(e.t);
    if (a != b) {
      p[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

FloorDiagram relabel(const FloorDiagram& D, const std::vector<int>& perm) {
  FloorDiagram out{D.d, D.g, {}, std::vector<int>(D.d, 0)};
  for (const auto& e : D.edges) out.edges.push_back({perm[e.s], perm[e.t], e.w});
  for (int v = 0; v < D.d; ++v) out.legs[perm[v]] = D.legs[v];
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

struct Enumerator {
  int d;
  int g;
  int edge_budget;
  std::vector<int> in_weight;
  FloorDiagram cur;
  std::set<FloorDiagram> found;

  void vertex(int v, int legs_left) {
    if (v == d) {
      if (legs_left != 0 || static_cast<int>(cur.edges.size()) != edge_budget) return;
      if (!is_connected(cur)) return;
      found.insert(canonical_form(cur));
      return;
    }
    for (int l = 0; l <= legs_left; ++l) {
      int out = in_weight[v] + l - 1;
      if (out < 0) continue;
      if (v == d - 1 && out != 0) continue;
      cur.legs[v] = l;
      outgoing(v, v + 1, out, 0, legs_left - l);
    }
    cur.legs[v] = 0;
  }

  // Distributes the remaining outgoing weight of v over targets >= t, with
  // weights towards t non-increasing below cap (0 = no cap yet).
  void outgoing(int v, int t, int remaining, int cap, int legs_left) {
    if (remaining == 0) {
      vertex(v + 1, legs_left);
      return;
    }
    if (t >= d || static_cast<int>(cur.edges.size()) >= edge_budget) return;
    // Move on to the next target.
    outgoing(v, t + 1, remaining, 0, legs_left);
    int top = cap == 0 ? remaining : std::min(cap, remaining);
    for (int w = top; w >= 1; --w) {
      cur.edges.push_back({v, t, w});
      in_weight[t] += w;
      outgoing(v, t, remaining - w, w, legs_left);
      in_weight[t] -= w;
      cur.edges.pop_back();
    }
  }
};

}  // namespace

void validate_diagram(const FloorDiagram& D) {
  if (D.d < 1) throw PreconditionError("floor diagram needs at least one vertex");
  if (static_cast<int>(D.legs.size()) != D.d) throw PreconditionError("leg list does not match the vertex count");
  std::vector<int> div(D.d, 0);
  for (int v = 0; v < D.d; ++v) {
    if (D.legs[v] < 0) throw PreconditionError("negative leg count");
    div[v] += D.legs[v];
  }
  for (const auto& e : D.edges) {
    if (e.s < 0 || e.t >= D.d || e.s >= e.t) throw PreconditionError("edges must go from a lower to a higher vertex");
    if (e.w < 1) throw PreconditionError("edge weights must be positive");
    div[e.t] += e.w;
    div[e.s] -= e.w;
  }
  for (int v = 0; v < D.d; ++v) {
    if (div[v] != 1) throw PreconditionError("divergence at vertex " + std::to_string(v + 1) + " is not 1");
  }
  if (static_cast<int>(D.edges.size()) != D.d - 1 + D.g) throw PreconditionError("edge count does not match d - 1 + g");
  if (!is_connected(D)) throw PreconditionError("floor diagram is not connected");
}

FloorDiagram canonical_form(const FloorDiagram& D) {
  std::vector<int> perm(D.d);
  std::iota(perm.begin(), perm.end(), 0);
  FloorDiagram best;
  bool have = false;
  do {
    bool topological = std::all_of(D.edges.begin(), D.edges.end(), [&](const FloorEdge& e) { return perm[e.s] < perm[e.t]; });
    if (!topological) continue;
    FloorDiagram r = relabel(D, perm);
    if (!have || r < best) {
      best = std::move(r);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FloorDiagram> enumerate_diagrams(int d, int g) {
  if (d < 1 || d > kMaxDegree) throw PreconditionError("floor diagrams are supported for 1 <= d <= 6");
  if (g < 0) throw PreconditionError("genus must be non-negative");
  Enumerator en{d, g, d - 1 + g, std::vector<int>(d, 0), FloorDiagram{d, g, {}, std::vector<int>(d, 0)}, {}};
  en.vertex(0, d);
  return {en.found.begin(), en.found.end()};
}

long long vertex_automorphisms(const FloorDiagram& D) {
  FloorDiagram base = relabel(D, [&] {
    std::vector<int> id(D.d);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }());
  std::vector<int> perm(D.d);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    if (relabel(D, perm) == base) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

unsigned __int128 linear_extensions(const FloorDiagram& D) {
  // Elements: vertices 0..d-1, then compact edges, then legs. Identical
  // legs at a vertex and identical parallel edges are chained, and the
  // result is multiplied back by the factorials of the chain lengths.
  int n = D.d + static_cast<int>(D.edges.size());
  for (int l : D.legs) n += l;
  if (n > 32) throw PreconditionError("poset too large for linear extension counting");
  std::vector<std::uint32_t> below(n, 0);  // elements that must come earlier
  unsigned __int128 symmetry = 1;
  auto factorial = [](int k) {
    unsigned __int128 f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  int next = D.d;
  for (std::size_t i = 0; i < D.edges.size(); ++i) {
    const auto& e = D.edges[i];
    int id = next++;
    below[id] |= 1u << e.s;
    below[e.t] |= 1u << id;
    if (i > 0 && D.edges[i - 1] == e) below[id] |= 1u << (id - 1);
  }
  {
    // Chain lengths of identical edges (edges are sorted).
    std::size_t i = 0;
    while (i < D.edges.size()) {
      std::size_t j = i;
      while (j < D.edges.size() && D.edges[j] == D.edges[i]) ++j;
      symmetry *= factorial(static_cast<int>(j - i));
      i = j;
    }
  }
  for (int v = 0; v < D.d; ++v) {
    for (int k = 0; k < D.legs[v]; ++k) {
      int id = next++;
      below[v] |= 1u << id;
      if (k > 0) below[id] |= 1u << (id - 1);
    }
    symmetry *= factorial(D.legs[v]);
  }
  std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  std::unordered_map<std::uint32_t, unsigned __int128> memo;
  std::function<unsigned __int128(std::uint32_t)> count = [&](std::uint32_t mask) -> unsigned __int128 {
    if (mask == full) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    unsigned __int128 total = 0;
    for (int x = 0; x < n; ++x) {
      if (mask & (1u << x)) continue;
      if ((below[x] & ~mask) != 0) continue;
      total += count(mask | (1u << x));
    }
    memo.emplace(mask, total);
    return total;
  };
  return count(0) * symmetry;
}

long long count_markings(const FloorDiagram& D) {
  validate_diagram(D);
  unsigned __int128 ext = linear_extensions(D);
  long long aut = vertex_automorphisms(D);
  // Leg and parallel-edge permutations are automorphisms too; they were
  // already factored into the chained count, so divide them out again.
  unsigned __int128 symmetry = 1;
  for (int l : D.legs) {
    for (int i = 2; i <= l; ++i) symmetry *= i;
  }
  std::size_t i = 0;
  while (i < D.edges.size()) {
    std::size_t j = i;
    while (j < D.edges.size() && D.edges[j] == D.edges[i]) ++j;
    for (std::size_t k = 2; k <= j - i; ++k) symmetry *= k;
    i = j;
  }
  unsigned __int128 group = symmetry * static_cast<unsigned __int128>(aut);
  if (ext % group != 0) throw std::logic_error("automorphism group does not act freely on markings");
  unsigned __int128 m = ext / group;
  if (m > static_cast<unsigned __int128>(std::numeric_limits<long long>::max())) {
    throw PreconditionError("marking count overflows 64 bits");
  }
  return static_cast<long long>(m);
}

DiagramMultiplicity diagram_multiplicities(const FloorDiagram& D) {
  DiagramMultiplicity out;
  for (const auto& e : D.edges) {
    out.m_C *= static_cast<long long>(e.w) * e.w;
    out.m_R *= e.w % 2 == 0 ? 0 : 1;
    LaurentQ qw = LaurentQ::quantum_integer(e.w);
    out.G = out.G * qw * qw;
  }
  return out;
}

RefinedInvariant refined_invariant(int d, int g) {
  auto diagrams = enumerate_diagrams(d, g);
  std::vector<long long> markings(diagrams.size());
  parallel_for(diagrams.size(), [&](std::size_t i) { markings[i] = count_markings(diagrams[i]); });
  RefinedInvariant out;
  for (std::size_t i = 0; i < diagrams.size(); ++i) out.G += markings[i] * diagram_multiplicities(diagrams[i]).G;
  out.N = out.G.at_one();
  out.W = out.G.at_minus_one();
  return out;
}

}  // namespace tropkit
