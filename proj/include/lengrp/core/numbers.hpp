#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lengrp/core/errors.hpp"

namespace lengrp {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;

inline bool fits_int64(const Int& v) {
  static const Int lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Int hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return v >= lo && v <= hi;
}

inline std::int64_t to_int64(const Int& v) {
  if (!fits_int64(v)) throw PreconditionError("integer does not fit in 64 bits: " + v.get_str());
  // mpz_get_si is only guaranteed for long; long is 64-bit on the supported targets.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return static_cast<std::int64_t>(v.get_si());
}

inline Int from_int64(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return Int(static_cast<long>(v));
}

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
  if (sgn(n) < 0) throw PreconditionError("isqrt of a negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// ceil(2 sqrt(z)) for z >= 0, i.e. the least m >= 0 with m^2 >= 4z.
inline Int ceil_two_sqrt(const Int& z) {
  const Int four_z = 4 * z;
  Int m = isqrt(four_z);
  if (m * m < four_z) ++m;
  return m;
}

inline Int abs_int(const Int& v) { return sgn(v) < 0 ? Int(-v) : v; }

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Exact check of a <= b with a, b rationals and b possibly K*sqrt(n) + C:
/// returns true iff value <= k * sqrt(n) + c, without irrational arithmetic.
inline bool le_k_sqrt_n_plus_c(const Rational& value, const Rational& k, const Int& n,
                               const Rational& c) {
  if (sgn(k) < 0 || sgn(n) < 0) throw PreconditionError("negative K or n in sqrt comparison");
  const Rational lhs = value - c;
  if (sgn(lhs) <= 0) return true;
  return lhs * lhs <= k * k * Rational(n);
}

}  // namespace lengrp
