#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropkit/rational.hpp"
#include "tropkit/scalar.hpp"

namespace tropkit {

// Sparse max-plus polynomial in one variable. Terms with coefficient
// -infinity are not stored; the empty polynomial is the constant -infinity.
class TropicalUnivariatePoly {
 public:
  TropicalUnivariatePoly() = default;
  explicit TropicalUnivariatePoly(std::map<int, Rational> terms);

  static TropicalUnivariatePoly parse(std::string_view text);
  static TropicalUnivariatePoly monomial(int degree, Rational coef = Rational(0));

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_neg_inf() const { return terms_.empty(); }
  // Largest degree with a finite coefficient.
  int degree() const;
  // Smallest degree with a finite coefficient.
  int min_degree() const;
  const Rational& leading_coefficient() const;

  TropicalScalar operator()(const TropicalScalar& x) const;
  // Exact evaluation at many finite points. Goes through the batched
  // max-plus kernel when the integer-scaled problem fits in doubles.
  std::vector<Rational> evaluate_batch(std::span<const Rational> xs) const;

  friend TropicalUnivariatePoly operator+(const TropicalUnivariatePoly& a, const TropicalUnivariatePoly& b);
  friend TropicalUnivariatePoly operator*(const TropicalUnivariatePoly& a, const TropicalUnivariatePoly& b);
  TropicalUnivariatePoly pow(int n) const;

  // Equality of the induced functions on R, decided exactly by comparing
  // the upper concave envelopes of the points (i, a_i).
  bool equal_as_functions(const TropicalUnivariatePoly& other) const;
  // Expression equality (same stored terms).
  bool operator==(const TropicalUnivariatePoly& other) const = default;

  std::string to_string() const;

 private:
  std::map<int, Rational> terms_;
};

struct TropicalRoot {
  TropicalScalar location;
  int order = 0;
  bool operator==(const TropicalRoot&) const = default;
};

// Corner locus of P with orders equal to slope jumps, plus -inf with order
// min_degree when positive. Sorted ascending with -inf first.
// Throws PreconditionError for the constant -inf polynomial.
std::vector<TropicalRoot> roots(const TropicalUnivariatePoly& p);

struct Factorization {
  Rational leading;
  std::vector<TropicalRoot> factors;  // (x + r)^k, r = -inf meaning x^k

  // "leading * prod (x + r)^k" expanded back into a polynomial.
  TropicalUnivariatePoly expand() const;
  std::string to_string() const;
};

Factorization factor(const TropicalUnivariatePoly& p);

// Indices of the vertices of the upper concave envelope of {(i, a_i)}.
std::vector<int> upper_envelope_degrees(const TropicalUnivariatePoly& p);

}  // namespace tropkit
