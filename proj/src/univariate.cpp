#include "tropkit/univariate.hpp"

#include <algorithm>

#include "tropkit/error.hpp"
#include "tropkit/maxplus_eval.hpp"
#include "tropkit/parse.hpp"

namespace tropkit {

TropicalUnivariatePoly::TropicalUnivariatePoly(std::map<int, Rational> terms) : terms_(std::move(terms)) {
  for (const auto& [deg, coef] : terms_) {
    if (deg < 0) throw PreconditionError("negative degree in tropical polynomial");
  }
}

TropicalUnivariatePoly TropicalUnivariatePoly::parse(std::string_view text) {
  std::map<int, Rational> terms;
  for (auto& [m, c] : parse_polynomial_terms(text, /*allow_y=*/false)) terms.emplace(m.first, c);
  return TropicalUnivariatePoly(std::move(terms));
}

TropicalUnivariatePoly TropicalUnivariatePoly::monomial(int degree, Rational coef) {
  return TropicalUnivariatePoly({{degree, std::move(coef)}});
}

int TropicalUnivariatePoly::degree() const {
  if (terms_.empty()) throw PreconditionError("degree of the constant -inf polynomial");
  return terms_.rbegin()->first;
}

int TropicalUnivariatePoly::min_degree() const {
  if (terms_.empty()) throw PreconditionError("degree of the constant -inf polynomial");
  return terms_.begin()->first;
}

const Rational& TropicalUnivariatePoly::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionError("leading coefficient of the constant -inf polynomial");
  return terms_.rbegin()->second;
}

TropicalScalar TropicalUnivariatePoly::operator()(const TropicalScalar& x) const {
  TropicalScalar acc;
  for (const auto& [deg, coef] : terms_) {
    TropicalScalar term(coef);
    for (int k = 0; k < deg; ++k) term = term * x;
    acc = acc + term;
  }
  return acc;
}

std::vector<Rational> TropicalUnivariatePoly::evaluate_batch(std::span<const Rational> xs) const {
  if (terms_.empty()) throw PreconditionError("evaluating the constant -inf polynomial");
  std::vector<MaxPlusTerm> table;
  table.reserve(terms_.size());
  for (const auto& [deg, coef] : terms_) table.push_back({deg, 0, coef});
  std::vector<Rational> zeros(xs.size());
  return evaluate_maxplus(table, xs, zeros);
}

TropicalUnivariatePoly operator+(const TropicalUnivariatePoly& a, const TropicalUnivariatePoly& b) {
  std::map<int, Rational> out = a.terms_;
  for (const auto& [deg, coef] : b.terms_) {
    auto [it, inserted] = out.emplace(deg, coef);
    if (!inserted && coef > it->second) it->second = coef;
  }
  return TropicalUnivariatePoly(std::move(out));
}

TropicalUnivariatePoly operator*(const TropicalUnivariatePoly& a, const TropicalUnivariatePoly& b) {
  std::map<int, Rational> out;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      Rational c = ca + cb;
      auto [it, inserted] = out.emplace(da + db, c);
      if (!inserted && c > it->second) it->second = c;
    }
  }
  return TropicalUnivariatePoly(std::move(out));
}

TropicalUnivariatePoly TropicalUnivariatePoly::pow(int n) const {
  if (n < 0) throw PreconditionError("negative power");
  TropicalUnivariatePoly acc = monomial(0);
  for (int k = 0; k < n; ++k) acc = acc * *this;
  return acc;
}

std::vector<int> upper_envelope_degrees(const TropicalUnivariatePoly& p) {
  std::vector<int> hull;
  const auto& terms = p.terms();
  auto turn = [&](int o, int a, int b) {
    // cross((a - o), (b - o)) on the points (i, a_i)
    Rational ax = a - o, ay = terms.at(a) - terms.at(o);
    Rational bx = b - o, by = terms.at(b) - terms.at(o);
    return Rational(ax * by - ay * bx);
  };
  for (const auto& [deg, coef] : terms) {
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), deg) >= 0) hull.pop_back();
    hull.push_back(deg);
  }
  return hull;
}

bool TropicalUnivariatePoly::equal_as_functions(const TropicalUnivariatePoly& other) const {
  if (is_neg_inf() || other.is_neg_inf()) return is_neg_inf() == other.is_neg_inf();
  auto a = upper_envelope_degrees(*this);
  auto b = upper_envelope_degrees(other);
  if (a != b) return false;
  for (int deg : a) {
    if (terms_.at(deg) != other.terms_.at(deg)) return false;
  }
  return true;
}

std::string TropicalUnivariatePoly::to_string() const {
  if (terms_.empty()) return "-inf";
  std::map<Monomial, Rational> terms;
  for (const auto& [deg, coef] : terms_) terms.emplace(Monomial{deg, 0}, coef);
  return format_polynomial_terms(terms);
}

std::vector<TropicalRoot> roots(const TropicalUnivariatePoly& p) {
  if (p.is_neg_inf()) throw PreconditionError("roots of the constant -inf polynomial");
  std::vector<TropicalRoot> out;
  if (p.min_degree() > 0) out.push_back({TropicalScalar::neg_inf(), p.min_degree()});
  auto hull = upper_envelope_degrees(p);
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    int i = hull[k];
    int j = hull[k + 1];
    Rational loc = (p.terms().at(i) - p.terms().at(j)) / Rational(j - i);
    out.push_back({TropicalScalar(loc), j - i});
  }
  return out;
}

Factorization factor(const TropicalUnivariatePoly& p) {
  return Factorization{p.leading_coefficient(), roots(p)};
}

TropicalUnivariatePoly Factorization::expand() const {
  TropicalUnivariatePoly acc = TropicalUnivariatePoly::monomial(0, leading);
  for (const auto& r : factors) {
    TropicalUnivariatePoly lin = r.location.is_neg_inf()
                                     ? TropicalUnivariatePoly::monomial(1)
                                     : TropicalUnivariatePoly({{0, r.location.value()}, {1, Rational(0)}});
    acc = acc * lin.pow(r.order);
  }
  return acc;
}

std::string Factorization::to_string() const {
  std::string out = leading < 0 ? "(" + tropkit::to_string(leading) + ")" : tropkit::to_string(leading);
  for (const auto& r : factors) {
    std::string f;
    if (r.location.is_neg_inf()) {
      f = "x";
    } else {
      const Rational& v = r.location.value();
      f = "(x + " + (v < 0 ? "(" + tropkit::to_string(v) + ")" : tropkit::to_string(v)) + ")";
    }
    out += "*" + f;
    if (r.order > 1) out += "^" + std::to_string(r.order);
  }
  return out;
}

}  // namespace tropkit
