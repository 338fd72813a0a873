#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lengrp/exactalg/int_matrix.hpp"
#include "lengrp/exactalg/polynomial.hpp"

namespace lengrp {

/// det(xI - A) by the Faddeev-LeVerrier recurrence. Every division by k is
/// exact over Z, so no fractions appear.
inline IntPolynomial char_poly(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Int> c(n + 1);
  c[n] = 1;
  IntMatrix m(n);  // M_0 = 0
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    Int tr = (a * m).trace();
    c[n - k] = -tr / static_cast<long>(k);
  }
  return IntPolynomial(std::move(c));
}

/// Horner evaluation p(A), exact.
inline IntMatrix evaluate_at(const IntPolynomial& p, const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix acc(n);
  const IntMatrix id = IntMatrix::identity(n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it * id;
  return acc;
}

namespace detail {

/// Coefficients c with target = sum_j c_j cols[j], or nullopt when target is
/// outside the span. cols are assumed linearly independent.
inline std::optional<std::vector<Rational>> solve_in_span(const std::vector<IntVector>& cols,
                                                          const IntVector& target) {
  const std::size_t n = target.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = cols[j][i];
    m[i][k] = target[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(k, n);
  for (std::size_t col = 0; col < k && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j <= k; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_row[col] = row++;
  }
  for (std::size_t r = row; r < n; ++r)
    if (m[r][k] != 0) return std::nullopt;
  std::vector<Rational> coeffs(k);
  for (std::size_t col = 0; col < k; ++col)
    if (pivot_row[col] < n) coeffs[col] = m[pivot_row[col]][k];
  return coeffs;
}

}  // namespace detail

/// Monic polynomial of least degree with p(A) = 0: the lcm of the Krylov
/// annihilators of the standard basis vectors.
inline IntPolynomial minimal_poly(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntPolynomial result{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<IntVector> krylov;
    IntVector v(n);
    v[i] = 1;
    while (true) {
      if (auto c = detail::solve_in_span(krylov, v)) {
        // v_k = sum c_j v_j  =>  x^k - sum c_j x^j annihilates e_i.
        std::vector<Rational> poly(krylov.size() + 1);
        for (std::size_t j = 0; j < krylov.size(); ++j) poly[j] = -(*c)[j];
        poly.back() = 1;
        result = lcm(result, IntPolynomial::from_rational(poly));
        break;
      }
      krylov.push_back(v);
      v = a.apply(v);
    }
  }
  return result;
}

/// Diagonalizable over C iff the minimal polynomial is squarefree.
inline bool is_diagonalizable(const IntMatrix& a) { return is_squarefree(minimal_poly(a)); }

}  // namespace lengrp
