#pragma once

// Test-only reference implementations. Nothing here shares code paths with
// the library routines they check.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "lengrp/exactalg/int_matrix.hpp"
#include "lengrp/exactalg/polynomial.hpp"

namespace oracle {

using lengrp::Int;
using lengrp::IntMatrix;
using lengrp::IntPolynomial;
using Coeffs = std::vector<Int>;  // raw, constant term first

inline Coeffs pmul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Coeffs padd(const Coeffs& a, const Coeffs& b, int sign = 1) {
  Coeffs out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
  return out;
}

/// det of a matrix of polynomials by cofactor expansion along the first row.
inline Coeffs laplace_det(const std::vector<std::vector<Coeffs>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Coeffs total;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Coeffs>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Coeffs> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    total = padd(total, pmul(m[0][j], laplace_det(minor)), j % 2 == 0 ? 1 : -1);
  }
  return total;
}

/// det(xI - A) by cofactor expansion, returned as raw coefficients.
inline Coeffs laplace_char_poly(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Coeffs>> m(n, std::vector<Coeffs>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? Coeffs{-a(i, j), 1} : Coeffs{-a(i, j)};
  Coeffs d = laplace_det(m);
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

/// Numeric roots of a polynomial via the eigenvalues of its companion matrix.
inline std::vector<std::complex<double>> numeric_roots(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 1) return {};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  const double lead = p.leading().get_d();
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p[static_cast<std::size_t>(i)].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

inline Eigen::MatrixXd to_eigen(const IntMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
  return m;
}

/// Floating-point unit-circle test on the matrix spectrum. A defective
/// eigenvalue of multiplicity k is scattered by roughly eps^(1/k); averaging
/// each cluster of nearby eigenvalues recovers it to near machine precision.
inline bool numeric_unit_circle(const IntMatrix& a, double tol = 1e-9) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(a), false);
  const auto& ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    std::complex<double> sum = 0;
    int count = 0;
    for (Eigen::Index j = 0; j < ev.size(); ++j)
      if (std::abs(ev[i] - ev[j]) < 1e-3) {
        sum += ev[j];
        ++count;
      }
    if (std::abs(std::abs(sum / static_cast<double>(count)) - 1.0) < tol) return true;
  }
  return false;
}

/// Cyclotomic polynomial Phi_m as x^m - 1 divided by Phi_d for proper d | m.
inline IntPolynomial cyclotomic(unsigned m) {
  lengrp::RatPoly num(std::vector<lengrp::Rational>(m + 1));
  std::vector<lengrp::Rational> c(m + 1);
  c[0] = -1;
  c[m] = 1;
  num = lengrp::RatPoly(c);
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) num = divmod(num, lengrp::RatPoly(cyclotomic(d))).first;
  return num.primitive();
}

/// Random element of GL_n(Z) as a product of elementary matrices and sign flips.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 6) {
  IntMatrix m = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    IntMatrix e = IntMatrix::identity(n);
    if (i == j) {
      if (coef(rng) > 0) e.at(i, i) = -1;
    } else {
      e.at(i, j) = coef(rng);
    }
    m = m * e;
  }
  return m;
}

/// Brute-force search for a monic factor of degree 1..deg/2 of a monic f,
/// coefficients bounded by the per-coefficient Mignotte bound
/// binom(d, i) * ceil(||f||_2).
inline bool brute_force_reducible(const IntPolynomial& f) {
  if (!f.is_monic()) throw std::invalid_argument("brute force oracle needs monic input");
  double norm = 0;
  for (const auto& c : f.coefficients()) norm += c.get_d() * c.get_d();
  const long bound_base = static_cast<long>(std::ceil(std::sqrt(norm)));
  const int n = f.degree();
  for (int d = 1; 2 * d <= n; ++d) {
    std::vector<long> bound(static_cast<std::size_t>(d));
    long binom = 1;
    for (int i = 0; i < d; ++i) {
      bound[static_cast<std::size_t>(i)] = binom * bound_base;
      binom = binom * (d - i) / (i + 1);
    }
    std::vector<long> g(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) g[static_cast<std::size_t>(i)] = -bound[static_cast<std::size_t>(i)];
    while (true) {
      std::vector<Int> gc;
      for (long v : g) gc.emplace_back(v);
      gc.emplace_back(1);
      IntPolynomial cand(gc);
      if (g[0] != 0 && lengrp::divides(cand, f)) return true;
      std::size_t k = 0;
      while (k < g.size() && g[k] == bound[k]) {
        g[k] = -bound[k];
        ++k;
      }
      if (k == g.size()) break;
      ++g[k];
    }
  }
  return false;
}

/// Least d such that I, A, ..., A^d are linearly dependent over Q, by
/// Gaussian elimination on the flattened powers.
inline int power_dependency_degree(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<lengrp::Rational>> basis;  // reduced rows
  std::vector<std::size_t> pivots;
  IntMatrix power = IntMatrix::identity(n);
  for (int d = 0;; ++d) {
    std::vector<lengrp::Rational> v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.emplace_back(power(i, j));
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const lengrp::Rational f = v[pivots[r]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * basis[r][k];
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return d;
    const lengrp::Rational inv = 1 / v[piv];
    for (auto& x : v) x *= inv;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const lengrp::Rational f = basis[r][piv];
      if (f == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) basis[r][k] -= f * v[k];
    }
    basis.push_back(v);
    pivots.push_back(piv);
    power = power * a;
  }
}

}  // namespace oracle
