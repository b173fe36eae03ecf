#pragma once

#include <map>
#include <string>

namespace tropkit {

// Integer Laurent polynomial in q^{1/2}, stored as doubled exponent ->
// coefficient with zero coefficients dropped.
class LaurentQ {
 public:
  LaurentQ() = default;
  explicit LaurentQ(std::map<int, long long> coeffs);

  static LaurentQ constant(long long c);
  // c * q^{doubled_exponent / 2}
  static LaurentQ monomial(int doubled_exponent, long long c = 1);
  // [m]_q = (q^{m/2} - q^{-m/2}) / (q^{1/2} - q^{-1/2}) for m >= 1.
  static LaurentQ quantum_integer(int m);

  const std::map<int, long long>& coeffs() const { return coeffs_; }
  long long coefficient(int doubled_exponent) const;
  bool is_zero() const { return coeffs_.empty(); }

  // Value at q = 1.
  long long at_one() const;
  // Value at q = -1 with q^{1/2} = i. Throws PreconditionError when the
  // result is not real.
  long long at_minus_one() const;
  // Symmetric under q <-> q^{-1}.
  bool is_palindromic() const;

  LaurentQ& operator+=(const LaurentQ& o);
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator*(long long k, const LaurentQ& a);
  bool operator==(const LaurentQ&) const = default;

  // "q^-1 + 10 + q", "13q^-2", "q^1/2"; the zero polynomial prints "0".
  std::string to_string() const;

 private:
  std::map<int, long long> coeffs_;
};

}  // namespace tropkit
