#include "tropkit/kernels/maxplus.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tropkit::kernels {

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(TROPKIT_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  static const Isa chosen = [] {
    if (std::getenv("TROPKIT_FORCE_SCALAR") != nullptr) return Isa::scalar;
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  }();
  return chosen;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void maxplus_eval(const TermTable& terms, std::span<const double> xs, std::span<const double> ys,
                  std::span<double> out, Isa isa) {
  if (terms.ex.size() != terms.coef.size() || terms.ey.size() != terms.coef.size() ||
      xs.size() != out.size() || ys.size() != out.size()) {
    throw std::invalid_argument("maxplus_eval: mismatched spans");
  }
#if defined(TROPKIT_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) {
    avx2::maxplus_eval(terms, xs, ys, out);
    return;
  }
#endif
  scalar::maxplus_eval(terms, xs, ys, out);
}

}  // namespace tropkit::kernels
