#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tropkit/parse.hpp"
#include "tropkit/polygon.hpp"
#include "tropkit/rational.hpp"

namespace tropkit {

struct RatPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const RatPoint& a, const RatPoint& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

// Sparse max-plus polynomial in x, y with finite rational coefficients.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  explicit BivariatePoly(std::map<Monomial, Rational> terms);

  static BivariatePoly parse(std::string_view text);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::vector<LatticePoint> support() const;
  std::vector<LatticePoint> newton_polygon() const;
  // Smallest d with the Newton polygon inside Conv{(0,0),(d,0),(0,d)}.
  int degree() const;

  Rational operator()(const Rational& x, const Rational& y) const;
  // Exponents whose monomial attains the maximum at (x, y), sorted.
  std::vector<LatticePoint> dominant(const Rational& x, const Rational& y) const;

  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
};

}  // namespace tropkit
