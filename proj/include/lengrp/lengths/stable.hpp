#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lengrp/core/errors.hpp"
#include "lengrp/core/numbers.hpp"
#include "lengrp/lengths/evaluator.hpp"
#include "lengrp/lengths/heisenberg.hpp"

namespace lengrp {

struct StableSample {
  std::int64_t k;
  LengthValue value;     // L(g^k)
  LengthValue ratio;     // L(g^k) / k
  LengthValue infimum;   // min of ratios up to k
};

/// Samples of L(g^k)/k. By Fekete's lemma the infimum bounds the stable
/// length from above whenever k -> L(g^k) is subadditive.
struct StableLengthEstimate {
  Coords element;
  std::string evaluator;
  std::vector<StableSample> samples;
  std::int64_t k_max = 0;
  bool partial = false;  // an evaluation failed before k_max
  std::string partial_reason;
  bool subadditive = true;
  std::optional<std::pair<std::int64_t, std::int64_t>> subadditivity_violation;  // (j, k)
  std::optional<Rational> exact_limit;

  const LengthValue& infimum() const {
    if (samples.empty()) throw PreconditionError("stable length estimate has no samples");
    return samples.back().infimum;
  }
};

namespace detail {

inline bool lower(const LengthValue& a, const LengthValue& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() < b.rational();
  return a.to_double() < b.to_double();
}

template <class Eval>
StableLengthEstimate estimate_with(Eval&& eval, std::string name, Coords g, std::int64_t k_max, double tol) {
  if (k_max < 1) throw PreconditionError("k_max must be at least 1");
  StableLengthEstimate est;
  est.element = std::move(g);
  est.evaluator = std::move(name);
  est.k_max = k_max;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    LengthValue v;
    try {
      v = eval(k);
    } catch (const ResourceError& e) {
      est.partial = true;
      est.partial_reason = e.what();
      break;
    }
    const LengthValue ratio = v.divided(from_int64(k));
    LengthValue inf = est.samples.empty() || lower(ratio, est.samples.back().infimum) ? ratio : est.samples.back().infimum;
    est.samples.push_back({k, v, ratio, inf});
  }
  const auto& s = est.samples;
  for (std::size_t j = 0; j < s.size() && est.subadditive; ++j)
    for (std::size_t k = j; j + k + 1 < s.size(); ++k)
      if (!at_most(s[j + k + 1].value, s[j].value + s[k].value, tol)) {
        est.subadditive = false;
        est.subadditivity_violation = std::make_pair(s[j].k, s[k].k);
        break;
      }
  return est;
}

}  // namespace detail

/// L(g^k)/k for k = 1..k_max, with running infimum and a subadditivity check.
inline StableLengthEstimate stable_length_estimate(const LengthEvaluator& l, const Coords& g, std::int64_t k_max,
                                                   double tolerance = 1e-9) {
  l.domain().check(g);
  return detail::estimate_with([&](std::int64_t k) { return l(l.domain().pow(g, k)); }, l.name(), g, k_max,
                               tolerance);
}

/// The same for the Heisenberg word metric. When every sampled power is
/// evaluated by the closed form the limit |x| + |y| is reported as exact.
inline StableLengthEstimate stable_length_estimate(const HeisWordMetric& metric, const HeisElem& g,
                                                   std::int64_t k_max) {
  bool all_formula = true;
  auto est = detail::estimate_with(
      [&](std::int64_t k) {
        const auto r = metric.length(heis_pow(g, k));
        all_formula = all_formula && r.path == LengthPath::formula;
        return LengthValue::exact(r.length);
      },
      "wordlength", coords_of(g), k_max, 0.0);
  if (all_formula && !est.partial) est.exact_limit = Rational(swl_heisenberg(g));
  return est;
}

/// l(q) = L(dq)/d with d the lcm of the denominators of q.
inline LengthValue extend_rational(const LengthEvaluator& l, const RationalVector& q) {
  if (l.domain().kind() != Domain::Kind::lattice) throw PreconditionError("extend_rational needs a length on Z^n");
  if (q.size() != l.domain().arity()) throw PreconditionError("rational vector has the wrong dimension");
  Int d = 1;
  for (const auto& c : q) d = lcm_int(d, c.get_den());
  Coords v;
  for (const auto& c : q) v.push_back(c.get_num() * (d / c.get_den()));
  return l(v).divided(d);
}

/// Constants K = 4 max L(s), C = 2 max L(s) + 2 and the check
/// L(c^n) <= K sqrt(n) + C for 0 <= n <= max_n.
struct SqrtBoundWitness {
  Rational k;
  Rational c;
  bool verified = false;
  Int checked = 0;
  std::optional<Int> first_failure;
};

inline SqrtBoundWitness sqrt_bound_witness(const LengthEvaluator& l, const Int& max_n) {
  if (l.domain().kind() != Domain::Kind::heisenberg) throw PreconditionError("sqrt_bound_witness needs a Heisenberg length");
  if (sgn(max_n) < 0) throw PreconditionError("max_n must be nonnegative");
  LengthValue m = l(heis_a());
  for (const auto& s : heisenberg_generators()) {
    const LengthValue v = l(s);
    if (detail::lower(m, v)) m = v;
  }
  const Rational mr = m.is_exact() ? m.rational() : Rational(m.to_double());
  SqrtBoundWitness w;
  w.k = 4 * mr;
  w.c = 2 * mr + 2;
  const auto holds = [&](const LengthValue& v, const Int& n) {
    const Rational value = v.is_exact() ? v.rational() : Rational(v.to_double());
    return le_k_sqrt_n_plus_c(value, w.k, n, w.c);
  };
  for (Int n = 0; n <= max_n; ++n) {
    // Direct value, and the bound obtained by summing L over a geodesic word for c^n.
    const LengthValue direct = l(HeisElem{0, 0, n});
    const LengthValue chain = LengthValue::exact(mr * Rational(central_power_word_length(n)));
    if (!holds(direct, n) || !holds(chain, n)) {
      w.first_failure = n;
      w.checked = n;
      return w;
    }
    w.checked = n;
  }
  w.verified = true;
  return w;
}

}  // namespace lengrp
