#include "tropkit/laurent.hpp"

#include <cstdlib>

#include "tropkit/error.hpp"

namespace tropkit {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw PreconditionError("Laurent coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw PreconditionError("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentQ::LaurentQ(std::map<int, long long> coeffs) {
  for (auto& [e, c] : coeffs) {
    if (c != 0) coeffs_.emplace(e, c);
  }
}

LaurentQ LaurentQ::constant(long long c) { return LaurentQ({{0, c}}); }

LaurentQ LaurentQ::monomial(int doubled_exponent, long long c) { return LaurentQ({{doubled_exponent, c}}); }

LaurentQ LaurentQ::quantum_integer(int m) {
  if (m < 1) throw PreconditionError("quantum integer needs m >= 1");
  std::map<int, long long> c;
  for (int k = 0; k < m; ++k) c[m - 1 - 2 * k] = 1;
  return LaurentQ(std::move(c));
}

long long LaurentQ::coefficient(int doubled_exponent) const {
  auto it = coeffs_.find(doubled_exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

long long LaurentQ::at_one() const {
  long long s = 0;
  for (const auto& [e, c] : coeffs_) s = checked_add(s, c);
  return s;
}

long long LaurentQ::at_minus_one() const {
  // q^{e/2} = i^e
  long long re = 0, im = 0;
  for (const auto& [e, c] : coeffs_) {
    switch (((e % 4) + 4) % 4) {
      case 0: re = checked_add(re, c); break;
      case 1: im = checked_add(im, c); break;
      case 2: re = checked_add(re, -c); break;
      default: im = checked_add(im, -c); break;
    }
  }
  if (im != 0) throw PreconditionError("value at q = -1 is not real");
  return re;
}

bool LaurentQ::is_palindromic() const {
  for (const auto& [e, c] : coeffs_) {
    if (coefficient(-e) != c) return false;
  }
  return true;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  for (const auto& [e, c] : o.coeffs_) {
    long long v = checked_add(coefficient(e), c);
    if (v == 0) {
      coeffs_.erase(e);
    } else {
      coeffs_[e] = v;
    }
  }
  return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  std::map<int, long long> out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) out[ea + eb] = checked_add(out[ea + eb], checked_mul(ca, cb));
  }
  return LaurentQ(std::move(out));
}

LaurentQ operator*(long long k, const LaurentQ& a) {
  std::map<int, long long> out;
  for (const auto& [e, c] : a.coeffs_) out[e] = checked_mul(k, c);
  return LaurentQ(std::move(out));
}

std::string LaurentQ::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    long long mag = std::llabs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "q";
    if (e == 2) continue;
    out += "^";
    out += e % 2 == 0 ? std::to_string(e / 2) : std::to_string(e) + "/2";
  }
  return out;
}

}  // namespace tropkit
