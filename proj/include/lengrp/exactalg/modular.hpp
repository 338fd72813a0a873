#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "lengrp/core/numbers.hpp"
#include "lengrp/exactalg/polynomial.hpp"

namespace lengrp::modp {

/// Polynomial over F_p, constant term first, trimmed. Requires p < 2^31 so
/// that products of residues fit in 64 bits.
using Poly = std::vector<std::uint64_t>;

class Field {
 public:
  explicit Field(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31)) throw PreconditionError("modulus out of range");
  }

  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p_;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a % p_ == 0) throw PreconditionError("inverse of zero mod p");
    return pow(a, p_ - 2);
  }

  std::uint64_t reduce(const Int& v) const {
    Int r = v % Int(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
  }

  // ---- polynomial arithmetic ----

  static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  static int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

  Poly from(const IntPolynomial& f) const {
    Poly out;
    for (const auto& c : f.coefficients()) out.push_back(reduce(c));
    trim(out);
    return out;
  }

  Poly add(const Poly& a, const Poly& b) const {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(out);
    return out;
  }

  Poly sub(const Poly& a, const Poly& b) const {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(out);
    return out;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
    }
    trim(out);
    return out;
  }

  Poly scale(const Poly& a, std::uint64_t s) const {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], s);
    trim(out);
    return out;
  }

  Poly monic(const Poly& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
  }

  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const {
    if (b.empty()) throw PreconditionError("division by zero polynomial mod p");
    if (a.size() < b.size()) return {Poly{}, a};
    Poly r = a;
    Poly q(a.size() - b.size() + 1);
    const std::uint64_t lb_inv = inv(b.back());
    for (std::size_t i = q.size(); i-- > 0;) {
      const std::uint64_t coef = mul(r[i + b.size() - 1], lb_inv);
      q[i] = coef;
      if (coef == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = sub(r[i + j], mul(coef, b[j]));
    }
    trim(q);
    trim(r);
    return {q, r};
  }

  Poly rem(const Poly& a, const Poly& b) const { return divmod(a, b).second; }

  Poly gcd(Poly a, Poly b) const {
    while (!b.empty()) {
      Poly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  /// Returns (g, s, t) with s a + t b = g = gcd(a, b), g monic.
  std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) const {
    Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      Poly s2 = sub(s0, mul(q, s1));
      Poly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const std::uint64_t li = inv(r0.back());
    return {scale(r0, li), scale(s0, li), scale(t0, li)};
  }

  Poly derivative(const Poly& a) const {
    Poly out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mul(a[i], i % p_));
    trim(out);
    return out;
  }

  /// base^e mod m, exponent given as an arbitrary-precision integer.
  Poly powmod(Poly base, const Int& e, const Poly& m) const {
    Poly result{1};
    result = rem(result, m);
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }

 private:
  std::uint64_t p_;
};

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<Poly, int>> distinct_degree(const Field& f, Poly g) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{0, 1};
  Poly h = f.rem(x, g);
  const Int p(static_cast<unsigned long>(f.modulus()));
  for (int d = 1; 2 * d <= Field::degree(g); ++d) {
    h = f.powmod(h, p, g);
    Poly factor = f.gcd(f.sub(h, x), g);
    if (Field::degree(factor) > 0) {
      out.emplace_back(factor, d);
      g = f.divmod(g, factor).first;
      h = f.rem(h, g);
    }
  }
  if (Field::degree(g) > 0) out.emplace_back(g, Field::degree(g));
  return out;
}

/// Cantor-Zassenhaus equal-degree splitting, odd p only. g is monic,
/// squarefree, and a product of irreducibles all of degree d.
inline void equal_degree(const Field& f, const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (Field::degree(g) == d) {
    out.push_back(g);
    return;
  }
  const Int p(static_cast<unsigned long>(f.modulus()));
  Int exponent;
  mpz_pow_ui(exponent.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coef(0, f.modulus() - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(Field::degree(g)));
    for (auto& c : a) c = coef(rng);
    Field::trim(a);
    if (Field::degree(a) < 1) continue;
    Poly b = f.sub(f.powmod(a, exponent, g), Poly{1});
    Poly split = f.gcd(b, g);
    const int ds = Field::degree(split);
    if (ds > 0 && ds < Field::degree(g)) {
      equal_degree(f, split, d, rng, out);
      equal_degree(f, f.divmod(g, split).first, d, rng, out);
      return;
    }
  }
}

/// Complete factorization of a monic squarefree polynomial over F_p (p odd)
/// into monic irreducibles.
inline std::vector<Poly> factor_squarefree(const Field& f, const Poly& g, std::uint64_t seed = 0x5eed) {
  if (f.modulus() == 2) throw PreconditionError("factor_squarefree requires an odd prime");
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  for (const auto& [part, d] : distinct_degree(f, g)) equal_degree(f, part, d, rng, out);
  return out;
}

inline bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace lengrp::modp
