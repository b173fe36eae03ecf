#include <algorithm>
#include <limits>

#include "tropkit/kernels/maxplus.hpp"

namespace tropkit::kernels::scalar {

void maxplus_eval(const TermTable& terms, std::span<const double> xs, std::span<const double> ys,
                  std::span<double> out) {
  const std::size_t n = out.size();
  std::fill(out.begin(), out.end(), -std::numeric_limits<double>::infinity());
  for (std::size_t t = 0; t < terms.coef.size(); ++t) {
    const double c = terms.coef[t];
    const double a = terms.ex[t];
    const double b = terms.ey[t];
    for (std::size_t k = 0; k < n; ++k) {
      out[k] = std::max(out[k], c + a * xs[k] + b * ys[k]);
    }
  }
}

}  // namespace tropkit::kernels::scalar
