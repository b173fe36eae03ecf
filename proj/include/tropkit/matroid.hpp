#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tropkit/lattice.hpp"

namespace tropkit {

using ElementSet = std::uint32_t;  // bitmask over the ground set

struct Flat {
  ElementSet set = 0;
  int rank = 0;
};

// Matroid on the ground set {0, ..., n}, stored through its lattice of flats.
class Matroid {
 public:
  // Every flat with its rank; the empty set and the full ground set are
  // added when missing (the full set one rank above the largest given).
  // Throws PreconditionError unless the flats form a geometric lattice.
  static Matroid from_flats(int n, std::vector<Flat> flats);
  static Matroid from_rank_function(int n, const std::function<int(ElementSet)>& rank);
  // Columns of an integer matrix, one vector per ground element.
  static Matroid from_vectors(const std::vector<IntVec>& vectors);
  // U_{k, n+1}: every set of at most k elements is independent.
  static Matroid uniform(int n, int k);
  // {x, y, z, x - y, x - z, y - z} in that order.
  static Matroid braid();

  int n() const { return n_; }
  int rank() const { return rank_; }
  // All flats sorted by (rank, set), including empty set and ground set.
  const std::vector<Flat>& flats() const { return flats_; }
  std::vector<Flat> proper_flats() const;
  bool is_loopless() const;

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<Flat> flats_;
};

struct Cone {
  std::vector<int> rays;  // indices into PolyhedralFan::rays, sorted
  long long weight = 1;
};

// Simplicial pure-dimensional weighted fan, stored by its top cones.
struct PolyhedralFan {
  int n = 0;  // ambient dimension
  int dim = 0;
  std::vector<IntVec> rays;
  std::vector<Cone> cones;
};

// v_I = sum_{i in I} v_i with v_0 = (1, ..., 1) and v_i = -e_i; one cone per
// flag of proper nonempty flats with rank steps of one; weights 1.
PolyhedralFan matroid_fan(const Matroid& m);

// Balancing at every codimension-one cone, in exact integer arithmetic.
// Throws PreconditionError on non-pure or non-simplicial input.
bool verify_balancing(const PolyhedralFan& f);

struct LinkGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
  // Length of a shortest cycle; 0 for forests.
  int girth() const;
};

// Rays and two-cones of a two-dimensional fan, with every degree-two ray
// smoothed out when its two cones lie in one plane with equal weights.
// A one-dimensional fan gives isolated vertices.
LinkGraph fan_link(const PolyhedralFan& f);

}  // namespace tropkit
