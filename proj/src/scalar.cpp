#include "tropkit/scalar.hpp"

#include <algorithm>
#include <cmath>

#include "tropkit/error.hpp"

namespace tropkit {

const Rational& TropicalScalar::value() const {
  if (!value_) throw PreconditionError("value() of tropical -inf");
  return *value_;
}

TropicalScalar operator+(const TropicalScalar& a, const TropicalScalar& b) {
  if (a.is_neg_inf()) return b;
  if (b.is_neg_inf()) return a;
  return *a.value_ >= *b.value_ ? a : b;
}

TropicalScalar operator*(const TropicalScalar& a, const TropicalScalar& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return TropicalScalar::neg_inf();
  return TropicalScalar(Rational(*a.value_ + *b.value_));
}

bool operator==(const TropicalScalar& a, const TropicalScalar& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return a.is_neg_inf() == b.is_neg_inf();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const TropicalScalar& a, const TropicalScalar& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) {
    if (a.is_neg_inf() && b.is_neg_inf()) return std::strong_ordering::equal;
    return a.is_neg_inf() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int c = cmp(*a.value_, *b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string TropicalScalar::to_string() const {
  return value_ ? tropkit::to_string(*value_) : std::string("-inf");
}

double dequantized_add(double x, double y, double t) {
  if (!(t > 1.0)) throw PreconditionError("dequantized_add requires t > 1");
  double hi = std::max(x, y);
  double lo = std::min(x, y);
  double log_t = std::log(t);
  // log_t(t^hi (1 + t^(lo-hi)))
  return hi + std::log1p(std::exp((lo - hi) * log_t)) / log_t;
}

double dequantized_add(const Rational& x, const Rational& y, const Rational& t) {
  if (t <= 1) throw PreconditionError("dequantized_add requires t > 1");
  return dequantized_add(x.get_d(), y.get_d(), t.get_d());
}

}  // namespace tropkit
