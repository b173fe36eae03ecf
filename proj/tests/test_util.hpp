#pragma once

#include <random>
#include <string>

#include "tropkit/bivariate.hpp"
#include "tropkit/rational.hpp"

namespace tropkit::test_support {

inline Rational random_rational(std::mt19937_64& rng, int range = 6, int den = 4) {
  std::uniform_int_distribution<long long> num(-range * den, range * den);
  std::uniform_int_distribution<long long> d(1, den);
  return make_rational(num(rng), d(rng));
}

// Random polynomial with exponents in [0, max_exp]^2 and at least three
// monomials with affinely independent exponents.
inline BivariatePoly random_bivariate(std::mt19937_64& rng, int max_exp = 4, int terms = 8) {
  std::uniform_int_distribution<int> e(0, max_exp);
  for (;;) {
    std::map<Monomial, Rational> t;
    for (int k = 0; k < terms; ++k) t[{e(rng), e(rng)}] = random_rational(rng);
    BivariatePoly p(t);
    if (polygon_dim(p.newton_polygon()) == 2) return p;
  }
}

}  // namespace tropkit::test_support
