#include "tropkit/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "tropkit/error.hpp"

namespace tropkit {

long long gcd_of(const IntVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, std::llabs(x));
  return g;
}

IntVec primitive(const IntVec& v) {
  long long g = gcd_of(v);
  if (g == 0) return v;
  IntVec out(v);
  for (auto& x : out) x /= g;
  return out;
}

IntVec primitive(const RatVec& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
  IntVec out;
  out.reserve(v.size());
  for (const auto& q : v) {
    Integer z = Integer(q.get_num() * (l / q.get_den()));
    if (!z.fits_slong_p()) throw PreconditionError("lattice vector does not fit in 64 bits");
    out.push_back(z.get_si());
  }
  return primitive(out);
}

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(Rational(static_cast<long>(x)));
  return out;
}

namespace {

// Row echelon form in place; returns the pivot columns.
std::vector<int> echelon(std::vector<RatVec>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(static_cast<int>(c));
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::vector<RatVec> to_rational_rows(const std::vector<IntVec>& rows) {
  std::vector<RatVec> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(to_rational(r));
  return out;
}

}  // namespace

int rational_rank(const std::vector<RatVec>& rows) {
  auto m = rows;
  return static_cast<int>(echelon(m).size());
}

int rational_rank(const std::vector<IntVec>& rows) { return rational_rank(to_rational_rows(rows)); }

bool in_span(const std::vector<IntVec>& gens, const IntVec& v) {
  auto rows = gens;
  int before = rational_rank(rows);
  rows.push_back(v);
  return rational_rank(rows) == before;
}

std::vector<IntVec> orthogonal_complement(const std::vector<IntVec>& rows, int n) {
  std::vector<RatVec> m = to_rational_rows(rows);
  for (auto& r : m) {
    if (static_cast<int>(r.size()) != n) throw PreconditionError("vector length mismatch");
  }
  auto pivots = echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<IntVec> out;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(n, Rational(0));
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
    out.push_back(primitive(x));
  }
  return out;
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& a, int n) {
  // Reduce A by column operations A U = [H | 0]; the columns of U facing the
  // zero block span the kernel.
  std::size_t rows = a.size();
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(n));
  for (std::size_t r = 0; r < rows; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = Integer(static_cast<long>(a[r][c]));
  }
  std::vector<std::vector<Integer>> u(n, std::vector<Integer>(n, Integer(0)));
  for (int i = 0; i < n; ++i) u[i][i] = 1;

  auto combine = [&](int c1, int c2, const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
    // (col c1, col c2) <- (p c1 + q c2, r c1 + s c2)
    for (std::size_t k = 0; k < rows; ++k) {
      Integer x = m[k][c1], y = m[k][c2];
      m[k][c1] = p * x + q * y;
      m[k][c2] = r * x + s * y;
    }
    for (int k = 0; k < n; ++k) {
      Integer x = u[k][c1], y = u[k][c2];
      u[k][c1] = p * x + q * y;
      u[k][c2] = r * x + s * y;
    }
  };

  int lead = 0;
  for (std::size_t r = 0; r < rows && lead < n; ++r) {
    for (int c = lead + 1; c < n; ++c) {
      if (m[r][c] == 0) continue;
      Integer x = m[r][lead], y = m[r][c];
      Integer s, t;
      Integer g = ext_gcd(x, y, s, t);
      // unimodular: det [[s, -y/g], [t, x/g]] = (s x + t y)/g = 1
      combine(lead, c, s, t, Integer(-y / g), Integer(x / g));
    }
    if (m[r][lead] != 0) ++lead;
  }
  std::vector<IntVec> out;
  for (int c = lead; c < n; ++c) {
    IntVec v(n);
    for (int k = 0; k < n; ++k) {
      if (!u[k][c].fits_slong_p()) throw PreconditionError("kernel vector does not fit in 64 bits");
      v[k] = u[k][c].get_si();
    }
    out.push_back(v);
  }
  return out;
}

std::vector<IntVec> saturated_basis(const std::vector<IntVec>& gens, int n) {
  auto normals = orthogonal_complement(gens, n);
  if (normals.empty()) {
    std::vector<IntVec> id;
    for (int i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      id.push_back(e);
    }
    return id;
  }
  return integer_kernel(normals, n);
}

IntVec facet_primitive_normal(const std::vector<IntVec>& edge_gens, const IntVec& r) {
  int n = static_cast<int>(r.size());
  // Component of r orthogonal to span(E), as a primitive integer functional.
  auto normals = orthogonal_complement(edge_gens, n);
  RatVec ell(n, Rational(0));
  {
    // r_perp = sum_k c_k n_k where the n_k span span(E)^perp; solve the
    // Gram system so that r - r_perp lies in span(E).
    std::size_t k = normals.size();
    std::vector<RatVec> gram(k, RatVec(k + 1, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        for (int t = 0; t < n; ++t) gram[i][j] += Rational(static_cast<long>(normals[i][t] * normals[j][t]));
      }
      for (int t = 0; t < n; ++t) gram[i][k] += Rational(static_cast<long>(normals[i][t] * r[t]));
    }
    auto piv = echelon(gram);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      for (int t = 0; t < n; ++t) ell[t] += gram[i][k] * Rational(static_cast<long>(normals[piv[i]][t]));
    }
  }
  IntVec l = primitive(ell);
  if (gcd_of(l) == 0) throw PreconditionError("facet ray lies in the span of its face");
  auto gens = edge_gens;
  gens.push_back(r);
  auto basis = saturated_basis(gens, n);
  // Values of the functional on the lattice basis; combine them to reach gcd.
  std::vector<Integer> vals;
  for (const auto& b : basis) {
    Integer s = 0;
    for (int t = 0; t < n; ++t) s += Integer(static_cast<long>(l[t])) * Integer(static_cast<long>(b[t]));
    vals.push_back(s);
  }
  std::vector<Integer> coef(basis.size(), Integer(0));
  Integer g = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Integer s, t;
    Integer ng = ext_gcd(g, vals[i], s, t);
    for (std::size_t j = 0; j < i; ++j) coef[j] *= s;
    coef[i] = t;
    g = ng;
  }
  IntVec out(n, 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (int t = 0; t < n; ++t) {
      Integer v = Integer(static_cast<long>(out[t])) + coef[i] * Integer(static_cast<long>(basis[i][t]));
      if (!v.fits_slong_p()) throw PreconditionError("facet normal does not fit in 64 bits");
      out[t] = v.get_si();
    }
  }
  return out;
}

}  // namespace tropkit
