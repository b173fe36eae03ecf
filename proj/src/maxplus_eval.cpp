#include "tropkit/maxplus_eval.hpp"

#include <cmath>
#include <stdexcept>

#include "tropkit/kernels/maxplus.hpp"

namespace tropkit {

std::vector<Rational> evaluate_maxplus_exact(std::span<const MaxPlusTerm> terms, std::span<const Rational> xs,
                                             std::span<const Rational> ys) {
  if (terms.empty()) throw std::invalid_argument("evaluate_maxplus: no terms");
  std::vector<Rational> out(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Rational best;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      Rational v = terms[t].coef + terms[t].i * xs[k] + terms[t].j * ys[k];
      if (t == 0 || v > best) best = v;
    }
    out[k] = best;
  }
  return out;
}

std::vector<Rational> evaluate_maxplus(std::span<const MaxPlusTerm> terms, std::span<const Rational> xs,
                                       std::span<const Rational> ys) {
  if (terms.empty()) throw std::invalid_argument("evaluate_maxplus: no terms");
  if (xs.size() != ys.size()) throw std::invalid_argument("evaluate_maxplus: xs/ys size mismatch");
  Integer scale = 1;
  for (const auto& t : terms) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t.coef.get_den_mpz_t());
  for (const auto& x : xs) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  for (const auto& y : ys) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), y.get_den_mpz_t());

  std::vector<double> coef(terms.size()), ex(terms.size()), ey(terms.size());
  double max_c = 0, max_i = 0, max_j = 0, max_x = 0, max_y = 0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    Rational c = terms[t].coef * scale;
    coef[t] = c.get_d();
    ex[t] = terms[t].i;
    ey[t] = terms[t].j;
    max_c = std::max(max_c, std::fabs(coef[t]));
    max_i = std::max(max_i, std::fabs(ex[t]));
    max_j = std::max(max_j, std::fabs(ey[t]));
  }
  std::vector<double> sx(xs.size()), sy(ys.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx[k] = Rational(xs[k] * scale).get_d();
    sy[k] = Rational(ys[k] * scale).get_d();
    max_x = std::max(max_x, std::fabs(sx[k]));
    max_y = std::max(max_y, std::fabs(sy[k]));
  }
  // Conservative bound on every partial sum; doubles above are still exact
  // integers because the scaled inputs are below the same bound.
  if (max_c + max_i * max_x + max_j * max_y >= kernels::kExactLimit / 2) {
    return evaluate_maxplus_exact(terms, xs, ys);
  }
  std::vector<double> out(xs.size());
  kernels::maxplus_eval({coef, ex, ey}, sx, sy, out);
  std::vector<Rational> result(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    result[k] = Rational(Integer(static_cast<long>(out[k])), scale);
    result[k].canonicalize();
  }
  return result;
}

}  // namespace tropkit
