#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropkit {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "7", "-3/4", "1.25", "-0.5e0" is not supported.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

inline Rational make_rational(long long num, long long den = 1) {
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace tropkit
