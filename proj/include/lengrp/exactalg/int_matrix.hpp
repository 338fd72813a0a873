#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lengrp/core/numbers.hpp"
#include "lengrp/exactalg/polynomial.hpp"

namespace lengrp {

/// Dense square matrix over Z, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {
    if (n == 0) throw PreconditionError("matrix dimension must be at least 1");
  }

  explicit IntMatrix(const std::vector<std::vector<Int>>& rows) : IntMatrix(rows.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (rows[i].size() != n_) throw PreconditionError("matrix is not square");
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = rows[i][j];
    }
  }

  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw PreconditionError("matrix is not square");
      std::size_t j = 0;
      for (long v : row) at(i, j++) = v;
      ++i;
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// Companion matrix of a monic polynomial: ones on the subdiagonal and
  /// -c_0 .. -c_{n-1} in the last column.
  static IntMatrix companion(const IntPolynomial& p) {
    if (p.degree() < 1 || !p.is_monic()) throw PreconditionError("companion matrix needs a monic nonconstant polynomial");
    const auto n = static_cast<std::size_t>(p.degree());
    IntMatrix m(n);
    for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = -p[i];
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  std::vector<std::vector<Int>> rows() const {
    std::vector<std::vector<Int>> out(n_, std::vector<Int>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i][j] = at(i, j);
    return out;
  }

  IntVector column(std::size_t j) const {
    IntVector c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = at(i, j);
    return c;
  }

  Int trace() const {
    Int t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  bool is_identity() const { return *this == identity(n_); }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    check_same(x, y);
    IntMatrix out(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const Int& xik = x.at(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) out.at(i, j) += xik * y.at(k, j);
      }
    return out;
  }

  friend IntMatrix operator+(IntMatrix x, const IntMatrix& y) {
    check_same(x, y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }

  friend IntMatrix operator-(IntMatrix x, const IntMatrix& y) {
    check_same(x, y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }

  friend IntMatrix operator*(const Int& s, IntMatrix x) {
    for (auto& v : x.a_) v *= s;
    return x;
  }

  IntVector apply(const IntVector& v) const {
    if (v.size() != n_) throw PreconditionError("vector dimension does not match matrix");
    IntVector out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

  /// Non-negative power by repeated squaring.
  IntMatrix pow(std::uint64_t k) const {
    IntMatrix result = identity(n_);
    IntMatrix base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// Determinant by Bareiss fraction-free elimination.
  Int determinant() const {
    std::vector<Int> m = a_;
    const std::size_t n = n_;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k * n + k] == 0) {
        std::size_t swap = k + 1;
        while (swap < n && m[swap * n + k] == 0) ++swap;
        if (swap == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap * n + j]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
        }
      }
      prev = m[k * n + k];
    }
    return sign * m[(n - 1) * n + (n - 1)];
  }

  bool is_unimodular() const { return abs_int(determinant()) == 1; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j) s += ",";
        s += at(i, j).get_str();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  static void check_same(const IntMatrix& x, const IntMatrix& y) {
    if (x.n_ != y.n_) throw PreconditionError("matrix dimensions differ");
  }

  std::size_t n_;
  std::vector<Int> a_;
};

/// Exact inverse of a matrix with determinant +-1 (Gauss-Jordan over Q).
inline IntMatrix unimodular_inverse(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw PreconditionError("matrix is singular");
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = m[i][n + j];
      if (v.get_den() != 1) throw PreconditionError("matrix is not unimodular");
      out.at(i, j) = v.get_num();
    }
  return out;
}

/// A matrix in GL_n(Z), usable as the twist of Z^n x_A Z. Construction
/// rejects any determinant other than +-1.
class Twist {
 public:
  explicit Twist(IntMatrix a) : a_(std::move(a)), det_(a_.determinant()), inv_(a_.size()) {
    if (abs_int(det_) != 1)
      throw PreconditionError("twist matrix must have determinant +-1, got " + det_.get_str());
    inv_ = unimodular_inverse(a_);
  }

  const IntMatrix& matrix() const noexcept { return a_; }
  const IntMatrix& inverse() const noexcept { return inv_; }
  const Int& determinant() const noexcept { return det_; }
  std::size_t dimension() const noexcept { return a_.size(); }

  /// A^k for any integer k.
  IntMatrix power(std::int64_t k) const {
    return k >= 0 ? a_.pow(static_cast<std::uint64_t>(k)) : inv_.pow(static_cast<std::uint64_t>(-(k + 1)) + 1);
  }

  friend bool operator==(const Twist& x, const Twist& y) { return x.a_ == y.a_; }

 private:
  IntMatrix a_;
  Int det_;
  IntMatrix inv_;
};

using TwistPtr = std::shared_ptr<const Twist>;

inline TwistPtr make_twist(IntMatrix a) { return std::make_shared<const Twist>(std::move(a)); }

}  // namespace lengrp
