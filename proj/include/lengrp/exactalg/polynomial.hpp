#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lengrp/core/numbers.hpp"

namespace lengrp {

/// Univariate polynomial over Z, coefficients stored constant term first.
///
/// Every value is kept in canonical form: trailing zeros trimmed, integer
/// content divided out and a positive leading coefficient. Two polynomials
/// that differ by a nonzero rational factor therefore compare equal. The zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  /// Primitive part of a polynomial with rational coefficients.
  static IntPolynomial from_rational(const std::vector<Rational>& coeffs) {
    Int den = 1;
    for (const auto& c : coeffs) den = lcm_int(den, c.get_den());
    std::vector<Int> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.get_num() * (den / c.get_den()));
    return IntPolynomial(std::move(out));
  }

  static IntPolynomial monomial(std::size_t degree) {
    std::vector<Int> c(degree + 1);
    c[degree] = 1;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Int>& coefficients() const { return coeffs_; }
  const Int& operator[](std::size_t i) const { return coeffs_.at(i); }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  const Int& leading() const { return coeffs_.back(); }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  template <class T>
  T evaluate(const T& x) const {
    T acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  /// Coefficient reversal x^deg p(1/x), normalized.
  IntPolynomial reversed() const {
    std::vector<Int> c(coeffs_.rbegin(), coeffs_.rend());
    return IntPolynomial(std::move(c));
  }

  bool is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string(const char* var = "x") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Int& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Int mag = abs_int(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || mag != 1) os << mag.get_str();
      if (i >= 1) os << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) return;
    Int g = 0;
    for (const auto& c : coeffs_) g = gcd_int(g, c);
    if (coeffs_.back() < 0) g = -g;
    if (g != 1)
      for (auto& c : coeffs_) c /= g;
  }

  std::vector<Int> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coefficients().size() + b.coefficients().size() - 1);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i)
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) c[i + j] += a[i] * b[j];
  return IntPolynomial(std::move(c));
}

/// Polynomial with rational coefficients, constant term first. Kept trimmed
/// but not otherwise normalized; used for exact Euclidean arithmetic.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  explicit RatPoly(const IntPolynomial& p) {
    for (const auto& v : p.coefficients()) c_.emplace_back(v);
  }
  explicit RatPoly(const std::vector<Int>& c) {
    for (const auto& v : c) c_.emplace_back(v);
    trim();
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  RatPoly monic() const {
    if (c_.empty()) return *this;
    std::vector<Rational> out = c_;
    const Rational lc = c_.back();
    for (auto& v : out) v /= lc;
    return RatPoly(std::move(out));
  }

  RatPoly derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long>(i));
    return RatPoly(std::move(out));
  }

  IntPolynomial primitive() const { return IntPolynomial::from_rational(c_); }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return RatPoly(std::move(out));
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return RatPoly(std::move(out));
  }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(out));
  }
  friend RatPoly operator*(const Rational& s, const RatPoly& a) {
    std::vector<Rational> out = a.c_;
    for (auto& v : out) v *= s;
    return RatPoly(std::move(out));
  }
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  /// Euclidean division; returns {quotient, remainder}.
  friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational& lb = b.leading();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
      const auto top = static_cast<std::size_t>(i + b.degree());
      if (rem[top] == 0) continue;
      Rational q = rem[top] / lb;
      quo[static_cast<std::size_t>(i)] = q;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= q * b.c_[j];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd over Q (zero if both inputs are zero).
inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return gcd(RatPoly(a), RatPoly(b)).primitive();
}

inline IntPolynomial lcm(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatPoly g = gcd(RatPoly(a), RatPoly(b));
  return divmod(RatPoly(a) * RatPoly(b), g).first.primitive();
}

inline IntPolynomial derivative(const IntPolynomial& p) { return RatPoly(p).derivative().primitive(); }

/// True iff gcd(p, p') is constant (p has no repeated complex root).
inline bool is_squarefree(const IntPolynomial& p) {
  if (p.is_constant()) return true;
  return gcd(p, derivative(p)).degree() == 0;
}

/// p / gcd(p, p'), the product of the distinct irreducible factors of p.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_constant()) return p;
  RatPoly g = gcd(RatPoly(p), RatPoly(p).derivative());
  return divmod(RatPoly(p), g).first.primitive();
}

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b, computed in
/// Z[x] on raw coefficients (no normalization).
inline std::vector<Int> pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("pseudo-division by zero");
  std::vector<Int> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const Int lr = r.back();
    const int shift = static_cast<int>(r.size()) - 1 - db;
    for (auto& v : r) v *= b.leading();
    for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(shift) + j] -= lr * bc[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return r;
}

inline bool divides(const IntPolynomial& d, const IntPolynomial& p) {
  return pseudo_remainder(p, d).empty();
}

}  // namespace lengrp
