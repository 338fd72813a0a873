#pragma once

#include <cstddef>
#include <vector>

#include "lengrp/exactalg/polynomial.hpp"

namespace lengrp {

/// gcd(p, x^deg p * p(1/x)) in primitive form. Carries every root of p that
/// lies on the unit circle.
inline IntPolynomial self_reciprocal_part(const IntPolynomial& p) {
  if (p.is_zero() || p.coeff(0) == 0)
    throw PreconditionError("self_reciprocal_part needs a nonzero constant term; factor out x first");
  return gcd(p, p.reversed());
}

/// Number of sign changes in a sequence of rationals, zeros skipped.
inline std::size_t sign_variations(const std::vector<Rational>& values) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& v : values) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Sturm sequence q, q', -rem(q, q'), ... over Q.
inline std::vector<RatPoly> sturm_sequence(const IntPolynomial& q) {
  std::vector<RatPoly> seq{RatPoly(q), RatPoly(q).derivative()};
  while (!seq.back().is_zero()) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

/// Number of distinct real roots of the squarefree q in (a, b]. Both endpoints
/// must be non-roots; callers perturb them by an exact rational shift
/// otherwise.
inline std::size_t sturm_count(const IntPolynomial& q, const Rational& a, const Rational& b) {
  if (q.is_zero()) throw PreconditionError("sturm_count of the zero polynomial");
  if (!(a < b)) throw PreconditionError("sturm_count needs a < b");
  if (!is_squarefree(q)) throw PreconditionError("sturm_count needs a squarefree polynomial");
  if (q.evaluate(a) == 0 || q.evaluate(b) == 0)
    throw PreconditionError("sturm_count endpoint is a root; shift the interval");
  const auto seq = sturm_sequence(q);
  std::vector<Rational> at_a, at_b;
  for (const auto& s : seq) {
    at_a.push_back(s.evaluate(a));
    at_b.push_back(s.evaluate(b));
  }
  return sign_variations(at_a) - sign_variations(at_b);
}

/// For a palindromic r of even degree 2m, the q of degree m with
/// r(x) = x^m q(x + 1/x). Uses x^k + x^-k = D_k(y), D_0 = 2, D_1 = y,
/// D_{k+1} = y D_k - D_{k-1}.
inline IntPolynomial trace_polynomial(const IntPolynomial& r) {
  if (!r.is_palindromic() || r.degree() % 2 != 0)
    throw PreconditionError("trace_polynomial needs an even-degree palindromic polynomial");
  const auto m = static_cast<std::size_t>(r.degree() / 2);
  std::vector<Int> q(m + 1);
  q[0] = r[m];
  std::vector<Int> prev{2};        // D_0
  std::vector<Int> cur{0, 1};      // D_1
  for (std::size_t k = 1; k <= m; ++k) {
    const Int& c = r[m + k];
    for (std::size_t i = 0; i < cur.size(); ++i) q[i] += c * cur[i];
    std::vector<Int> next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return IntPolynomial(std::move(q));
}

/// Exact decision: does p have a complex root of modulus 1? p must have
/// constant term +-1 (a characteristic polynomial of a GL_n(Z) matrix).
inline bool has_unit_circle_eigenvalue(const IntPolynomial& p) {
  if (p.is_constant() || abs_int(p.coeff(0)) != 1)
    throw PreconditionError("has_unit_circle_eigenvalue needs constant term +-1");
  if (p.evaluate(Int(1)) == 0 || p.evaluate(Int(-1)) == 0) return true;
  const IntPolynomial r = self_reciprocal_part(p);
  if (r.degree() == 0) return false;
  // r has no root at +-1, so it is palindromic (an anti-palindromic
  // polynomial vanishes at 1) of even degree.
  const IntPolynomial q = squarefree_part(trace_polynomial(r));
  // y = +-2 corresponds to x = +-1, already excluded.
  return sturm_count(q, Rational(-2), Rational(2)) > 0;
}

}  // namespace lengrp
