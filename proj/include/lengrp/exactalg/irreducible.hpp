#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <vector>

#include "lengrp/exactalg/modular.hpp"
#include "lengrp/exactalg/polynomial.hpp"

namespace lengrp {

namespace detail {

using ZPoly = std::vector<Int>;

inline void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Int mod_pos(const Int& v, const Int& m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

inline ZPoly reduce(const ZPoly& a, const Int& m) {
  ZPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_pos(a[i], m);
  trim(out);
  return out;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

inline ZPoly to_z(const modp::Poly& a) {
  ZPoly out;
  for (auto c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

inline modp::Poly to_p(const modp::Field& f, const ZPoly& a) {
  modp::Poly out;
  for (const auto& c : a) out.push_back(f.reduce(c));
  modp::Field::trim(out);
  return out;
}

/// Lifts f = g h (mod p), g and h monic and coprime mod p, to a factorization
/// modulo p^k. f must be monic modulo p^k.
inline std::pair<ZPoly, ZPoly> hensel_pair(const modp::Field& field, const ZPoly& f, const modp::Poly& g,
                                           const modp::Poly& h, unsigned k) {
  auto [one, s, t] = field.ext_gcd(g, h);
  if (one != modp::Poly{1}) throw PreconditionError("Hensel lifting requires coprime factors");
  const Int p(static_cast<unsigned long>(field.modulus()));
  ZPoly big_g = to_z(g);
  ZPoly big_h = to_z(h);
  Int pj = p;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly err = f;
    const ZPoly gh = zmul(big_g, big_h);
    err.resize(std::max(err.size(), gh.size()));
    for (std::size_t i = 0; i < gh.size(); ++i) err[i] -= gh[i];
    for (auto& c : err) c /= pj;  // exact: f = G H (mod p^j)
    trim(err);
    const modp::Poly e = to_p(field, err);
    const modp::Poly a = field.rem(field.mul(t, e), g);
    const modp::Poly b = field.rem(field.mul(s, e), h);
    const ZPoly az = to_z(a);
    const ZPoly bz = to_z(b);
    for (std::size_t i = 0; i < az.size(); ++i) big_g[i] += pj * az[i];
    for (std::size_t i = 0; i < bz.size(); ++i) big_h[i] += pj * bz[i];
    pj *= p;
  }
  return {reduce(big_g, pj), reduce(big_h, pj)};
}

/// Lifts a complete factorization mod p of the monic (mod p^k) polynomial f.
inline std::vector<ZPoly> hensel_all(const modp::Field& field, const ZPoly& f, std::vector<modp::Poly> factors,
                                     unsigned k) {
  std::vector<ZPoly> out;
  ZPoly rest = f;
  while (factors.size() > 1) {
    modp::Poly others{1};
    for (std::size_t i = 1; i < factors.size(); ++i) others = field.mul(others, factors[i]);
    auto [g, h] = hensel_pair(field, rest, factors[0], others, k);
    out.push_back(std::move(g));
    rest = std::move(h);
    factors.erase(factors.begin());
  }
  out.push_back(rest);
  return out;
}

/// Coefficient bound for factors of f: 2^deg(f) * ceil(||f||_2).
inline Int mignotte_bound(const IntPolynomial& f) {
  Int sq = 0;
  for (const auto& c : f.coefficients()) sq += c * c;
  Int norm = isqrt(sq) + 1;
  Int two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
  return two_pow * norm;
}

inline std::vector<Int> small_divisors(Int n) {
  n = abs_int(n);
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

/// True when f has a rational root; nullopt when the divisor search would be
/// too expensive to run.
inline std::optional<bool> has_rational_root(const IntPolynomial& f) {
  static const Int limit(1'000'000'000'000L);
  if (f.coeff(0) == 0) return true;
  if (abs_int(f.coeff(0)) > limit || abs_int(f.leading()) > limit) return std::nullopt;
  for (const auto& num : small_divisors(f.coeff(0)))
    for (const auto& den : small_divisors(f.leading()))
      for (int sign : {1, -1})
        if (f.evaluate(Rational(sign * num, den)) == 0) return true;
  return false;
}

}  // namespace detail

/// A prime p suits the modular screen for f when p is odd, p does not divide
/// the leading coefficient, and f stays squarefree mod p.
inline bool is_good_prime(const IntPolynomial& f, std::uint64_t p) {
  if (p == 2 || !modp::is_small_prime(p)) return false;
  const modp::Field field(p);
  if (field.reduce(f.leading()) == 0) return false;
  const modp::Poly fp = field.from(f);
  return modp::Field::degree(field.gcd(fp, field.derivative(fp))) == 0;
}

/// Degrees of the irreducible factors of f modulo a good prime p, ascending.
inline std::vector<int> factor_degrees_mod(const IntPolynomial& f, std::uint64_t p) {
  if (!is_good_prime(f, p)) throw PreconditionError("prime is not suitable for this polynomial");
  const modp::Field field(p);
  std::vector<int> out;
  for (const auto& [part, d] : modp::distinct_degree(field, field.monic(field.from(f))))
    for (int i = 0; i < modp::Field::degree(part) / d; ++i) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

/// Achievable degrees of a proper factor given the factor degrees mod p.
inline std::set<int> achievable_degrees(const std::vector<int>& degrees) {
  int total = 0;
  for (int d : degrees) total += d;
  std::vector<bool> reach(static_cast<std::size_t>(total) + 1, false);
  reach[0] = true;
  for (int d : degrees)
    for (int s = total; s >= d; --s)
      if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = true;
  std::set<int> out;
  for (int s = 1; s < total; ++s)
    if (reach[static_cast<std::size_t>(s)]) out.insert(s);
  return out;
}

/// Exact search for a nontrivial factor of a primitive squarefree f via
/// Hensel lifting of the factorization mod p past twice the coefficient
/// bound, followed by subset recombination.
inline std::optional<IntPolynomial> find_factor(const IntPolynomial& f, std::uint64_t p) {
  const modp::Field field(p);
  const modp::Poly fp = field.monic(field.from(f));
  std::vector<modp::Poly> factors = modp::factor_squarefree(field, fp);
  if (factors.size() <= 1) return std::nullopt;

  const Int bound = 2 * abs_int(f.leading()) * detail::mignotte_bound(f) + 1;
  const Int pz(static_cast<unsigned long>(p));
  unsigned k = 1;
  Int modulus = pz;
  while (modulus <= bound) {
    modulus *= pz;
    ++k;
  }

  Int lc_inv;
  if (mpz_invert(lc_inv.get_mpz_t(), f.leading().get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw PreconditionError("leading coefficient not invertible modulo p^k");
  detail::ZPoly monic_f;
  for (const auto& c : f.coefficients()) monic_f.push_back(detail::mod_pos(c * lc_inv, modulus));

  const std::vector<detail::ZPoly> lifted = detail::hensel_all(field, monic_f, factors, k);
  const std::size_t r = lifted.size();
  const Int half = modulus / 2;

  std::vector<std::size_t> pick;
  for (std::size_t size = 1; 2 * size <= r; ++size) {
    pick.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      detail::ZPoly prod{f.leading()};
      for (auto idx : pick) prod = detail::reduce(detail::zmul(prod, lifted[idx]), modulus);
      for (auto& c : prod)
        if (c > half) c -= modulus;
      IntPolynomial candidate(prod);
      if (candidate.degree() >= 1 && candidate.degree() < f.degree() && divides(candidate, f)) return candidate;
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == r - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

/// Irreducibility over Q of a nonconstant polynomial.
///
/// Rational-root screen, then factor degrees modulo the first eight good
/// primes: irreducible mod some p, or no proper factor degree consistent with
/// every prime, decides irreducibility. Otherwise the Hensel/recombination
/// search decides exactly.
inline bool is_irreducible(const IntPolynomial& f) {
  if (f.is_constant()) throw PreconditionError("irreducibility of a constant polynomial is undefined");
  if (f.degree() == 1) return true;
  if (!is_squarefree(f)) return false;
  if (auto root = detail::has_rational_root(f); root && *root) return false;
  if (f.degree() <= 3 && detail::has_rational_root(f).has_value()) return true;

  std::optional<std::set<int>> surviving;
  std::uint64_t best_prime = 0;
  std::size_t best_count = 0;
  int good = 0;
  for (std::uint64_t p = 3; good < 8; p += 2) {
    if (!is_good_prime(f, p)) continue;
    ++good;
    const auto degrees = factor_degrees_mod(f, p);
    if (degrees.size() == 1) return true;
    const auto reach = achievable_degrees(degrees);
    if (!surviving) {
      surviving = reach;
    } else {
      std::set<int> both;
      std::set_intersection(surviving->begin(), surviving->end(), reach.begin(), reach.end(),
                            std::inserter(both, both.begin()));
      surviving = std::move(both);
    }
    if (surviving->empty()) return true;
    if (best_prime == 0 || degrees.size() < best_count) {
      best_prime = p;
      best_count = degrees.size();
    }
  }
  return !find_factor(f, best_prime).has_value();
}

}  // namespace lengrp
