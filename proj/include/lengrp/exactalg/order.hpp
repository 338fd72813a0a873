#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lengrp/exactalg/int_matrix.hpp"

namespace lengrp {

namespace detail {

inline std::uint64_t euler_phi_prime_power(std::uint64_t p, unsigned e) {
  if (e == 0) return 0;
  std::uint64_t v = p - 1;
  for (unsigned i = 1; i < e; ++i) v *= p;
  return v;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(p);
  }
  return out;
}

constexpr std::uint64_t kCheckPrime = (std::uint64_t{1} << 61) - 1;

using ModMatrix = std::vector<std::uint64_t>;

inline ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, std::size_t n) {
  ModMatrix out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const unsigned __int128 aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        out[i * n + j] = static_cast<std::uint64_t>((out[i * n + j] + aik * b[k * n + j]) % kCheckPrime);
    }
  return out;
}

/// A^k == I modulo a 61-bit prime; a cheap necessary condition for A^k == I.
inline bool is_identity_power_mod(const IntMatrix& a, std::uint64_t k) {
  const std::size_t n = a.size();
  ModMatrix base(n * n), result(n * n, 0);
  const Int prime(static_cast<unsigned long>(kCheckPrime));
  for (std::size_t i = 0; i < n; ++i) {
    result[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      Int r = a(i, j) % prime;
      if (r < 0) r += prime;
      base[i * n + j] = r.get_ui();
    }
  }
  while (k) {
    if (k & 1U) result = mod_mul(result, base, n);
    k >>= 1U;
    if (k) base = mod_mul(base, base, n);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (result[i * n + j] != (i == j ? 1U : 0U)) return false;
  return true;
}

}  // namespace detail

/// Minimal dimension of a faithful integral representation of Z/m: the sum
/// of phi(p^e) over the prime-power parts of m, less one when m = 2 mod 4
/// (the factor -1 needs no extra dimension).
inline std::uint64_t phi_signature(std::uint64_t m) {
  if (m == 0) throw PreconditionError("phi_signature of zero");
  std::uint64_t total = 0;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    total += detail::euler_phi_prime_power(p, e);
  }
  if (rest > 1) total += rest - 1;
  if (m % 4 == 2) total -= 1;
  return total;
}

/// Every m >= 1 with phi_signature(m) <= n, ascending. These are exactly the
/// orders of finite-order elements of GL_n(Z).
inline std::vector<std::uint64_t> candidate_orders(std::size_t n) {
  const auto primes = detail::primes_up_to(n + 1);
  std::vector<std::uint64_t> out;
  // cost counts phi(p^e) without the m = 2 mod 4 correction, which is at most 1.
  auto dfs = [&](auto&& self, std::size_t idx, std::uint64_t m, std::uint64_t cost) -> void {
    if (idx == primes.size()) {
      if (phi_signature(m) <= n) out.push_back(m);
      return;
    }
    const std::uint64_t p = primes[idx];
    std::uint64_t pe = 1;
    for (unsigned e = 0;; ++e) {
      const std::uint64_t c = cost + detail::euler_phi_prime_power(p, e);
      if (c > n + 1) break;
      self(self, idx + 1, m * pe, c);
      pe *= p;
    }
  };
  dfs(dfs, 0, 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// The order of A in GL_n(Z), or nullopt if A has infinite order. Tests the
/// candidate orders in increasing order; the first hit is the order.
inline std::optional<std::uint64_t> finite_order(const IntMatrix& a) {
  if (!a.is_unimodular()) throw PreconditionError("finite_order needs |det A| = 1");
  for (std::uint64_t m : candidate_orders(a.size())) {
    if (!detail::is_identity_power_mod(a, m)) continue;
    if (a.pow(m).is_identity()) return m;
  }
  return std::nullopt;
}

/// Reference implementation: multiply A, A^2, ... exactly up to the largest
/// candidate order.
inline std::optional<std::uint64_t> finite_order_bruteforce(const IntMatrix& a) {
  if (!a.is_unimodular()) throw PreconditionError("finite_order needs |det A| = 1");
  const std::uint64_t limit = candidate_orders(a.size()).back();
  IntMatrix power = a;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (power.is_identity()) return k;
    power = power * a;
  }
  return std::nullopt;
}

}  // namespace lengrp
