#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>

#include "tropkit/error.hpp"
#include "tropkit/floor_diagram.hpp"

using namespace tropkit;

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Kontsevich's recursion for rational plane curves through 3d - 1 points.
long long kontsevich(int d) {
  std::vector<long long> N(d + 1, 0);
  N[1] = 1;
  for (int n = 2; n <= d; ++n) {
    long long s = 0;
    for (int a = 1; a < n; ++a) {
      int b = n - a;
      s += N[a] * N[b] * a * a * b * (b * binom(3 * n - 4, 3 * a - 2) - a * binom(3 * n - 4, 3 * a - 1));
    }
    N[n] = s;
  }
  return N[d];
}

// Objects of a diagram: vertices, then bounded edges, then legs.
struct Poset {
  int n = 0;
  std::vector<std::pair<int, int>> less;  // a must come before b
  std::vector<int> kind;                  // 0 vertex, 1 edge, 2 leg
};

Poset poset_of(const FloorDiagram& D) {
  Poset p;
  p.n = D.d;
  p.kind.assign(D.d, 0);
  for (const auto& e : D.edges) {
    int id = p.n++;
    p.kind.push_back(1);
    p.less.push_back({e.s, id});
    p.less.push_back({id, e.t});
  }
  for (int v = 0; v < D.d; ++v) {
    for (int k = 0; k < D.legs[v]; ++k) {
      int id = p.n++;
      p.kind.push_back(2);
      p.less.push_back({id, v});
    }
  }
  return p;
}

// Marked diagrams up to equivalence, counted as orbits of increasing
// bijections under all structure-preserving permutations of the objects.
long long orbit_count(const FloorDiagram& D) {
  Poset P = poset_of(D);
  std::vector<int> edge_key;  // (s, t, w) of each edge object, leg target for legs
  std::vector<std::tuple<int, int, int>> attr(P.n, {-1, -1, -1});
  int id = D.d;
  for (const auto& e : D.edges) attr[id++] = {e.s, e.t, e.w};
  for (int v = 0; v < D.d; ++v) {
    for (int k = 0; k < D.legs[v]; ++k) attr[id++] = {-1, v, 1};
  }
  // Automorphisms: vertex permutations extended to edges and legs.
  std::vector<std::vector<int>> group;
  std::vector<int> perm(P.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int k = 0; k < P.n && ok; ++k) {
      if (P.kind[perm[k]] != P.kind[k]) ok = false;
    }
    for (int k = D.d; k < P.n && ok; ++k) {
      auto [s, t, w] = attr[k];
      auto [s2, t2, w2] = attr[perm[k]];
      int ms = s < 0 ? -1 : perm[s];
      if (ms != s2 || perm[t] != t2 || w != w2) ok = false;
    }
    if (ok) group.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::vector<int>> orbits;
  std::vector<int> order(P.n);
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<int> pos(P.n);
    for (int k = 0; k < P.n; ++k) pos[order[k]] = k;
    bool increasing = std::all_of(P.less.begin(), P.less.end(), [&](auto ab) { return pos[ab.first] < pos[ab.second]; });
    if (!increasing) continue;
    std::vector<int> best;
    for (const auto& g : group) {
      std::vector<int> image(P.n);
      for (int k = 0; k < P.n; ++k) image[k] = g[order[k]];
      if (best.empty() || image < best) best = image;
    }
    orbits.insert(best);
  } while (std::next_permutation(order.begin(), order.end()));
  return static_cast<long long>(orbits.size());
}

std::vector<long long> sorted_markings(int d, int g) {
  std::vector<long long> v;
  for (const auto& D : enumerate_diagrams(d, g)) v.push_back(count_markings(D));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(FloorDiagram, RefinedInvariantsDegreeThreeAndFour) {
  EXPECT_EQ(refined_invariant(3, 0).G.to_string(), "q^-1 + 10 + q");
  EXPECT_EQ(refined_invariant(4, 0).G.to_string(), "q^-3 + 13q^-2 + 94q^-1 + 404 + 94q + 13q^2 + q^3");
  EXPECT_EQ(refined_invariant(4, 1).G.to_string(), "3q^-2 + 33q^-1 + 153 + 33q + 3q^2");
  EXPECT_EQ(refined_invariant(4, 2).G.to_string(), "3q^-1 + 21 + 3q");
  EXPECT_EQ(refined_invariant(4, 3).G.to_string(), "1");
  EXPECT_EQ(refined_invariant(3, 0).W, 8);
  EXPECT_EQ(refined_invariant(4, 0).W, 240);
}

TEST(FloorDiagram, RationalCountsFollowKontsevich) {
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(refined_invariant(d, 0).N, kontsevich(d)) << "d = " << d;
}

TEST(FloorDiagram, SubmaximalGenusClosedForm) {
  for (int d = 3; d <= 6; ++d) {
    int gmax = (d - 1) * (d - 2) / 2;
    EXPECT_EQ(refined_invariant(d, gmax).G, LaurentQ::constant(1));
    // (d-1) [ (d-2)/2 q^-1 + 2d - 1 + (d-2)/2 q ]
    LaurentQ expected({{-2, (d - 1) * (d - 2) / 2}, {0, (d - 1) * (2 * d - 1)}, {2, (d - 1) * (d - 2) / 2}});
    auto inv = refined_invariant(d, gmax - 1);
    EXPECT_EQ(inv.G, expected) << "d = " << d;
    EXPECT_EQ(inv.N, 3 * (d - 1) * (d - 1));
  }
}

TEST(FloorDiagram, TopCoefficientIsBinomial) {
  for (int d = 3; d <= 5; ++d) {
    int gmax = (d - 1) * (d - 2) / 2;
    for (int g = 0; g <= gmax; ++g) {
      auto G = refined_invariant(d, g).G;
      ASSERT_FALSE(G.is_zero());
      EXPECT_EQ(G.coeffs().rbegin()->second, binom(gmax, g)) << "d = " << d << ", g = " << g;
      EXPECT_EQ(G.coeffs().rbegin()->first, 2 * (gmax - g));
      EXPECT_TRUE(G.is_palindromic());
    }
  }
}

TEST(FloorDiagram, MarkingCountsOfReferenceDiagrams) {
  std::vector<long long> small;
  for (auto [d, g] : {std::pair{1, 0}, {2, 0}, {3, 1}, {3, 0}}) {
    auto v = sorted_markings(d, g);
    small.insert(small.end(), v.begin(), v.end());
  }
  std::sort(small.begin(), small.end());
  EXPECT_EQ(small, (std::vector<long long>{1, 1, 1, 1, 3, 5}));
  auto g32 = sorted_markings(4, 3);
  auto g2 = sorted_markings(4, 2);
  g32.insert(g32.end(), g2.begin(), g2.end());
  std::sort(g32.begin(), g32.end());
  EXPECT_EQ(g32, (std::vector<long long>{1, 1, 2, 3, 5, 7}));
  EXPECT_EQ(sorted_markings(4, 1), (std::vector<long long>{1, 2, 4, 6, 6, 7, 9, 15, 21, 21, 26}));
  EXPECT_EQ(sorted_markings(4, 0), (std::vector<long long>{1, 3, 6, 8, 15, 15, 15, 18, 35, 40, 45, 102}));
}

TEST(FloorDiagram, MarkingsMatchOrbitCount) {
  for (int d = 1; d <= 3; ++d) {
    for (int g = 0; g <= (d - 1) * (d - 2) / 2; ++g) {
      for (const auto& D : enumerate_diagrams(d, g)) EXPECT_EQ(count_markings(D), orbit_count(D));
    }
  }
}

TEST(FloorDiagram, DiagramsAreValidAndCanonical) {
  for (int d = 1; d <= 5; ++d) {
    for (int g = 0; g <= (d - 1) * (d - 2) / 2; ++g) {
      auto list = enumerate_diagrams(d, g);
      EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
      EXPECT_EQ(std::adjacent_find(list.begin(), list.end()), list.end());
      for (const auto& D : list) {
        EXPECT_NO_THROW(validate_diagram(D));
        EXPECT_EQ(canonical_form(D), D);
        EXPECT_EQ(static_cast<int>(D.edges.size()), d - 1 + g);
      }
    }
  }
  EXPECT_TRUE(enumerate_diagrams(3, 2).empty());
  EXPECT_TRUE(refined_invariant(3, 2).G.is_zero());
}

TEST(FloorDiagram, CanonicalFormIgnoresLabelling) {
  for (int g = 0; g <= 3; ++g) {
    for (const auto& D : enumerate_diagrams(4, g)) {
      std::vector<int> pi{0, 1, 2, 3};
      do {
        if (!std::all_of(D.edges.begin(), D.edges.end(), [&](const FloorEdge& e) { return pi[e.s] < pi[e.t]; })) {
          continue;
        }
        FloorDiagram R{D.d, D.g, {}, std::vector<int>(D.d, 0)};
        for (const auto& e : D.edges) R.edges.push_back({pi[e.s], pi[e.t], e.w});
        std::sort(R.edges.begin(), R.edges.end());
        for (int v = 0; v < D.d; ++v) R.legs[pi[v]] = D.legs[v];
        EXPECT_EQ(canonical_form(R), D);
        EXPECT_EQ(count_markings(R), count_markings(D));
      } while (std::next_permutation(pi.begin(), pi.end()));
    }
  }
}

TEST(FloorDiagram, ValidationRejectsBrokenDiagrams) {
  auto D = enumerate_diagrams(3, 0).front();
  FloorDiagram missing_leg = D;
  for (auto& l : missing_leg.legs) {
    if (l > 0) {
      --l;
      break;
    }
  }
  EXPECT_THROW(validate_diagram(missing_leg), PreconditionError);
  FloorDiagram reversed = D;
  std::swap(reversed.edges[0].s, reversed.edges[0].t);
  EXPECT_THROW(validate_diagram(reversed), PreconditionError);
  FloorDiagram heavy = D;
  heavy.edges[0].w += 1;
  EXPECT_THROW(validate_diagram(heavy), PreconditionError);
}

TEST(FloorDiagram, MultiplicityIsProductOverEdges) {
  for (const auto& D : enumerate_diagrams(5, 1)) {
    long long mc = 1, mr = 1;
    LaurentQ G = LaurentQ::constant(1);
    for (const auto& e : D.edges) {
      mc *= static_cast<long long>(e.w) * e.w;
      mr *= e.w % 2 == 0 ? 0 : 1;
      G = G * LaurentQ::quantum_integer(e.w) * LaurentQ::quantum_integer(e.w);
    }
    auto m = diagram_multiplicities(D);
    EXPECT_EQ(m.m_C, mc);
    EXPECT_EQ(m.m_R, mr);
    EXPECT_EQ(m.G, G);
  }
}

TEST(FloorDiagram, ThreadCountDoesNotChangeResults) {
  auto reference = refined_invariant(5, 0);
  setenv("TROPKIT_THREADS", "1", 1);
  auto single = refined_invariant(5, 0);
  unsetenv("TROPKIT_THREADS");
  EXPECT_EQ(single.G, reference.G);
}
