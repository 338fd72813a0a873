#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lengrp/core/numbers.hpp"

namespace lengrp {

/// Element of the discrete Heisenberg group in upper-triangular coordinates
///
///   [[1, x, z],
///    [0, 1, y],
///    [0, 0, 1]]
///
/// with product (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2).
template <class T>
struct BasicHeisElem {
  T x{0};
  T y{0};
  T z{0};

  friend bool operator==(const BasicHeisElem&, const BasicHeisElem&) = default;
  friend bool operator<(const BasicHeisElem& a, const BasicHeisElem& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
};

using HeisElem = BasicHeisElem<Int>;

template <class T>
BasicHeisElem<T> heis_mul(const BasicHeisElem<T>& g, const BasicHeisElem<T>& h) {
  return {g.x + h.x, g.y + h.y, g.z + h.z + g.x * h.y};
}

template <class T>
BasicHeisElem<T> heis_inv(const BasicHeisElem<T>& g) {
  return {-g.x, -g.y, g.x * g.y - g.z};
}

/// h g h^-1
template <class T>
BasicHeisElem<T> heis_conj(const BasicHeisElem<T>& g, const BasicHeisElem<T>& h) {
  return heis_mul(heis_mul(h, g), heis_inv(h));
}

/// g^-1 h^-1 g h
template <class T>
BasicHeisElem<T> heis_commutator(const BasicHeisElem<T>& g, const BasicHeisElem<T>& h) {
  return heis_mul(heis_mul(heis_inv(g), heis_inv(h)), heis_mul(g, h));
}

/// g^k by square-and-multiply (negative k through the inverse).
template <class T>
BasicHeisElem<T> heis_pow(const BasicHeisElem<T>& g, std::int64_t k) {
  BasicHeisElem<T> base = k < 0 ? heis_inv(g) : g;
  auto e = static_cast<std::uint64_t>(k < 0 ? -(k + 1) : k) + (k < 0 ? 1U : 0U);
  BasicHeisElem<T> result{};
  while (e) {
    if (e & 1U) result = heis_mul(result, base);
    e >>= 1U;
    if (e) base = heis_mul(base, base);
  }
  return result;
}

/// Closed form g^k = (kx, ky, kz + k(k-1)xy/2), valid for every integer k.
inline HeisElem heis_pow_closed(const HeisElem& g, const Int& k) {
  return {k * g.x, k * g.y, k * g.z + k * (k - 1) * g.x * g.y / 2};
}

inline HeisElem heis_a() { return {1, 0, 0}; }
inline HeisElem heis_b() { return {0, 1, 0}; }
inline HeisElem heis_c() { return {0, 0, 1}; }

inline std::string to_string(const HeisElem& g) {
  return g.x.get_str() + "," + g.y.get_str() + "," + g.z.get_str();
}

/// Two Heisenberg elements commute iff their (x, y) parts are proportional.
template <class T>
bool heis_commute(const BasicHeisElem<T>& g, const BasicHeisElem<T>& h) {
  return g.x * h.y == g.y * h.x;
}

}  // namespace lengrp
