#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lengrp/core/numbers.hpp"
#include "lengrp/exactalg/int_matrix.hpp"

namespace lengrp {

/// Element (v, t) of Z^n x_A Z with (v1,t1)(v2,t2) = (v1 + A^t1 v2, t1 + t2).
/// The twist is shared between all elements of the same group.
struct SdpElem {
  IntVector v;
  Int t;
  TwistPtr twist;

  friend bool operator==(const SdpElem& a, const SdpElem& b) { return a.v == b.v && a.t == b.t; }
};

namespace detail {

inline void check_context(const SdpElem& g, const SdpElem& h) {
  if (!g.twist || !h.twist) throw PreconditionError("semidirect product element without a twist");
  if (g.twist != h.twist && !(*g.twist == *h.twist))
    throw PreconditionError("semidirect product elements belong to different groups");
}

inline std::int64_t exponent(const Int& t) {
  if (!fits_int64(t)) throw PreconditionError("semidirect product exponent out of range");
  return to_int64(t);
}

}  // namespace detail

inline SdpElem sdp_identity(const TwistPtr& twist) {
  return {IntVector(twist->dimension()), Int(0), twist};
}

inline SdpElem sdp_lattice(const TwistPtr& twist, IntVector v) {
  if (v.size() != twist->dimension()) throw PreconditionError("lattice vector has the wrong dimension");
  return {std::move(v), Int(0), twist};
}

/// The generator t = (0, 1).
inline SdpElem sdp_t(const TwistPtr& twist) { return {IntVector(twist->dimension()), Int(1), twist}; }

inline SdpElem sdp_basis(const TwistPtr& twist, std::size_t i) {
  IntVector v(twist->dimension());
  v.at(i) = 1;
  return {std::move(v), Int(0), twist};
}

inline SdpElem sdp_mul(const SdpElem& g, const SdpElem& h) {
  detail::check_context(g, h);
  const IntVector moved = g.twist->power(detail::exponent(g.t)).apply(h.v);
  IntVector v = g.v;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += moved[i];
  return {std::move(v), g.t + h.t, g.twist};
}

/// (v, t)^-1 = (-A^-t v, -t)
inline SdpElem sdp_inv(const SdpElem& g) {
  IntVector v = g.twist->power(-detail::exponent(g.t)).apply(g.v);
  for (auto& c : v) c = -c;
  return {std::move(v), -g.t, g.twist};
}

/// h g h^-1
inline SdpElem sdp_conj(const SdpElem& g, const SdpElem& h) { return sdp_mul(sdp_mul(h, g), sdp_inv(h)); }

/// g^k by square-and-multiply of exact products.
inline SdpElem sdp_pow(const SdpElem& g, std::int64_t k) {
  SdpElem base = k < 0 ? sdp_inv(g) : g;
  auto e = static_cast<std::uint64_t>(k < 0 ? -(k + 1) : k) + (k < 0 ? 1U : 0U);
  SdpElem result = sdp_identity(g.twist);
  while (e) {
    if (e & 1U) result = sdp_mul(result, base);
    e >>= 1U;
    if (e) base = sdp_mul(base, base);
  }
  return result;
}

inline std::string to_string(const SdpElem& g) {
  std::string s;
  for (std::size_t i = 0; i < g.v.size(); ++i) {
    if (i) s += ",";
    s += g.v[i].get_str();
  }
  return s + ";" + g.t.get_str();
}

}  // namespace lengrp
