#pragma once

#include <compare>
#include <optional>
#include <string>

#include "tropkit/rational.hpp"

namespace tropkit {

// An element of the max-plus semiring: an exact rational or -infinity.
// operator+ is max, operator* is classical addition.
class TropicalScalar {
 public:
  // Default-constructed value is -infinity, the additive identity.
  TropicalScalar() = default;
  TropicalScalar(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)
  TropicalScalar(long value) : value_(Rational(value)) {}       // NOLINT(implicit)

  static TropicalScalar neg_inf() { return TropicalScalar(); }
  static TropicalScalar one() { return TropicalScalar(0L); }

  bool is_neg_inf() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  // Throws PreconditionError on -infinity.
  const Rational& value() const;

  friend TropicalScalar operator+(const TropicalScalar& a, const TropicalScalar& b);
  friend TropicalScalar operator*(const TropicalScalar& a, const TropicalScalar& b);

  friend bool operator==(const TropicalScalar& a, const TropicalScalar& b);
  friend std::strong_ordering operator<=>(const TropicalScalar& a, const TropicalScalar& b);

  std::string to_string() const;

 private:
  std::optional<Rational> value_;
};

inline TropicalScalar trop_add(const TropicalScalar& x, const TropicalScalar& y) { return x + y; }
inline TropicalScalar trop_mul(const TropicalScalar& x, const TropicalScalar& y) { return x * y; }

// log_t(t^x + t^y), the semiring addition before the t -> infinity limit.
// Satisfies max(x,y) <= result <= max(x,y) + log_t 2 up to rounding.
// Throws PreconditionError unless t > 1.
double dequantized_add(const Rational& x, const Rational& y, const Rational& t);
double dequantized_add(double x, double y, double t);

}  // namespace tropkit
