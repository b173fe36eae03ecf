#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "tropkit/kernels/maxplus.hpp"

namespace tropkit::kernels::avx2 {

// Points are processed in blocks of 8 (two ymm accumulators) so that the
// term loop stays in registers; the tail falls back to scalar lanes.
void maxplus_eval(const TermTable& terms, std::span<const double> xs, std::span<const double> ys,
                  std::span<double> out) {
  const std::size_t n = out.size();
  const std::size_t nt = terms.coef.size();
  const double neg_inf = -std::numeric_limits<double>::infinity();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const __m256d x0 = _mm256_loadu_pd(xs.data() + k);
    const __m256d x1 = _mm256_loadu_pd(xs.data() + k + 4);
    const __m256d y0 = _mm256_loadu_pd(ys.data() + k);
    const __m256d y1 = _mm256_loadu_pd(ys.data() + k + 4);
    __m256d acc0 = _mm256_set1_pd(neg_inf);
    __m256d acc1 = _mm256_set1_pd(neg_inf);
    for (std::size_t t = 0; t < nt; ++t) {
      const __m256d c = _mm256_set1_pd(terms.coef[t]);
      const __m256d a = _mm256_set1_pd(terms.ex[t]);
      const __m256d b = _mm256_set1_pd(terms.ey[t]);
      acc0 = _mm256_max_pd(acc0, _mm256_fmadd_pd(a, x0, _mm256_fmadd_pd(b, y0, c)));
      acc1 = _mm256_max_pd(acc1, _mm256_fmadd_pd(a, x1, _mm256_fmadd_pd(b, y1, c)));
    }
    _mm256_storeu_pd(out.data() + k, acc0);
    _mm256_storeu_pd(out.data() + k + 4, acc1);
  }
  for (; k < n; ++k) {
    double best = neg_inf;
    for (std::size_t t = 0; t < nt; ++t) {
      best = std::max(best, terms.coef[t] + terms.ex[t] * xs[k] + terms.ey[t] * ys[k]);
    }
    out[k] = best;
  }
}

}  // namespace tropkit::kernels::avx2
