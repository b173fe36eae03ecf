#pragma once

// Batched max-plus evaluation kernels.
//
//   out[k] = max_t ( coef[t] + ex[t] * xs[k] + ey[t] * ys[k] )
//
// All inputs are integer-valued doubles. Callers guarantee that every partial
// sum stays below 2^53 in magnitude, which makes every variant exact and
// therefore bit-identical to the scalar reference.

#include <cstddef>
#include <span>

namespace tropkit::kernels {

enum class Isa { scalar, avx2 };

struct TermTable {
  std::span<const double> coef;
  std::span<const double> ex;
  std::span<const double> ey;
};

// Best instruction set supported by this CPU and build. Setting the
// environment variable TROPKIT_FORCE_SCALAR pins the scalar path.
Isa best_isa();
const char* isa_name(Isa isa);
bool isa_available(Isa isa);

void maxplus_eval(const TermTable& terms, std::span<const double> xs, std::span<const double> ys,
                  std::span<double> out, Isa isa);

inline void maxplus_eval(const TermTable& terms, std::span<const double> xs, std::span<const double> ys,
                         std::span<double> out) {
  maxplus_eval(terms, xs, ys, out, best_isa());
}

namespace scalar {
void maxplus_eval(const TermTable& terms, std::span<const double> xs, std::span<const double> ys,
                  std::span<double> out);
}

#if defined(TROPKIT_HAVE_AVX2_KERNELS)
namespace avx2 {
void maxplus_eval(const TermTable& terms, std::span<const double> xs, std::span<const double> ys,
                  std::span<double> out);
}
#endif

// Largest magnitude below which integer arithmetic in doubles is exact.
inline constexpr double kExactLimit = 9007199254740992.0;  // 2^53

}  // namespace tropkit::kernels
