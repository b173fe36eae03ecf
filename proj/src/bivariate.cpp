#include "tropkit/bivariate.hpp"

#include <algorithm>

#include "tropkit/error.hpp"

namespace tropkit {

BivariatePoly::BivariatePoly(std::map<Monomial, Rational> terms) : terms_(std::move(terms)) {
  for (const auto& [m, c] : terms_) {
    if (m.first < 0 || m.second < 0) throw PreconditionError("negative exponent in tropical polynomial");
  }
}

BivariatePoly BivariatePoly::parse(std::string_view text) {
  auto terms = parse_polynomial_terms(text, /*allow_y=*/true);
  if (terms.empty()) throw ParseError("polynomial has no finite terms");
  return BivariatePoly(std::move(terms));
}

std::vector<LatticePoint> BivariatePoly::support() const {
  std::vector<LatticePoint> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({m.first, m.second});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticePoint> BivariatePoly::newton_polygon() const { return convex_hull(support()); }

int BivariatePoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

Rational BivariatePoly::operator()(const Rational& x, const Rational& y) const {
  if (terms_.empty()) throw PreconditionError("evaluating the constant -inf polynomial");
  bool first = true;
  Rational best;
  for (const auto& [m, c] : terms_) {
    Rational v = c + m.first * x + m.second * y;
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

std::vector<LatticePoint> BivariatePoly::dominant(const Rational& x, const Rational& y) const {
  Rational best = (*this)(x, y);
  std::vector<LatticePoint> out;
  for (const auto& [m, c] : terms_) {
    if (c + m.first * x + m.second * y == best) out.push_back({m.first, m.second});
  }
  return out;
}

std::string BivariatePoly::to_string() const { return format_polynomial_terms(terms_); }

}  // namespace tropkit
