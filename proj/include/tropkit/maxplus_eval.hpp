#pragma once

#include <span>
#include <vector>

#include "tropkit/rational.hpp"

namespace tropkit {

struct MaxPlusTerm {
  int i = 0;
  int j = 0;
  Rational coef;
};

// Exact values of max_t (coef_t + i_t x_k + j_t y_k) for every k.
// Scales everything to a common denominator; if the integer problem fits
// below 2^53 the batched SIMD kernel does the work, otherwise the loop runs
// in exact rationals.
std::vector<Rational> evaluate_maxplus(std::span<const MaxPlusTerm> terms, std::span<const Rational> xs,
                                       std::span<const Rational> ys);

// Same, but always in exact rationals (reference path).
std::vector<Rational> evaluate_maxplus_exact(std::span<const MaxPlusTerm> terms, std::span<const Rational> xs,
                                             std::span<const Rational> ys);

}  // namespace tropkit
