#pragma once

#include <vector>

#include "tropkit/rational.hpp"

namespace tropkit {

using IntVec = std::vector<long long>;
using RatVec = std::vector<Rational>;

long long gcd_of(const IntVec& v);
// v divided by the gcd of its entries; the zero vector is returned as is.
IntVec primitive(const IntVec& v);
// Smallest positive multiple of a rational vector that is integral, made primitive.
IntVec primitive(const RatVec& v);

RatVec to_rational(const IntVec& v);

// Rank over Q of the given row vectors (all of the same length).
int rational_rank(const std::vector<RatVec>& rows);
int rational_rank(const std::vector<IntVec>& rows);

// True iff v is a rational linear combination of gens.
bool in_span(const std::vector<IntVec>& gens, const IntVec& v);

// Basis of the rational orthogonal complement of span(rows) in Q^n,
// each vector scaled to a primitive integer vector.
std::vector<IntVec> orthogonal_complement(const std::vector<IntVec>& rows, int n);

// Integer kernel {x in Z^n : A x = 0} of an integer matrix, as a lattice basis.
// Column Hermite reduction with unimodular tracking, in GMP integers.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& a, int n);

// Lattice basis of span(gens) ∩ Z^n.
std::vector<IntVec> saturated_basis(const std::vector<IntVec>& gens, int n);

// For a cone E spanned by edge_gens and a facet F = E + cone(r), a vector
// u in span(F) ∩ Z^n that together with span(E) ∩ Z^n generates span(F) ∩ Z^n
// and points to the side of r. Defined modulo span(E).
IntVec facet_primitive_normal(const std::vector<IntVec>& edge_gens, const IntVec& r);

// Extended gcd: returns g = gcd(a, b) >= 0 and sets s, t with s a + t b = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

}  // namespace tropkit
