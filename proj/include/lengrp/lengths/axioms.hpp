#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lengrp/core/errors.hpp"
#include "lengrp/core/numbers.hpp"
#include "lengrp/lengths/evaluator.hpp"
#include "lengrp/lengths/heisenberg.hpp"
#include "lengrp/lengths/stable.hpp"

namespace lengrp {

struct AxiomOptions {
  std::size_t samples = 1000;  // per axiom
  double tolerance = 1e-9;     // numeric evaluators only
  std::uint64_t seed = 7;
  int range = 3;               // coordinate range of sampled elements
  int power_range = 3;         // |n| for homogeneity
  std::size_t max_counterexamples = 5;
};

/// A failed instance: lhs should equal (or be at most) rhs.
struct Counterexample {
  std::vector<Coords> inputs;
  std::optional<std::int64_t> n;
  LengthValue lhs;
  LengthValue rhs;

  /// Canonical order: smallest inputs (sum of absolute coordinates) first.
  friend bool operator<(const Counterexample& a, const Counterexample& b) {
    const Int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    if (a.inputs != b.inputs) return a.inputs < b.inputs;
    return a.n < b.n;
  }

  Int size() const {
    Int s = 0;
    for (const auto& g : inputs)
      for (const auto& c : g) s += abs_int(c);
    return s;
  }
};

struct AxiomVerdict {
  std::string axiom;     // homogeneity | conjugation | commuting_subadditivity
  std::string relation;  // the checked identity, for reports
  bool passed = true;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  // evaluation ran out of oracle radius
  std::vector<Counterexample> counterexamples;
};

struct AxiomReport {
  std::string evaluator;
  std::string domain;
  bool exact = true;
  double tolerance = 0;
  std::uint64_t seed = 0;
  AxiomVerdict homogeneity;
  AxiomVerdict conjugation;
  AxiomVerdict commuting_subadditivity;

  bool passed() const { return homogeneity.passed && conjugation.passed && commuting_subadditivity.passed; }
};

namespace detail {

/// Group-specific random elements and guaranteed commuting pairs.
class Sampler {
 public:
  Sampler(const Domain& d, const AxiomOptions& opt) : d_(d), opt_(opt), rng_(opt.seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Coords element() {
    const int r = opt_.range;
    switch (d_.kind()) {
      case Domain::Kind::heisenberg: {
        const Int z = uniform(-r * r, r * r);
        if (uniform(0, 1)) {
          // (k, kn, z): the support of the quadratic length
          int k = uniform(-r, r - 1);
          if (k >= 0) ++k;
          const int n = uniform(1, r);
          return {k, k * n, z};
        }
        return {uniform(-r, r), uniform(-r, r), z};
      }
      case Domain::Kind::sdp: {
        Coords g(d_.arity());
        for (std::size_t i = 0; i + 1 < g.size(); ++i) g[i] = uniform(-r, r);
        g.back() = uniform(-2, 2);
        return g;
      }
      case Domain::Kind::lattice: {
        Coords g(d_.arity());
        for (auto& c : g) c = uniform(-r, r);
        return g;
      }
    }
    return {};
  }

  std::int64_t power() {
    int n = uniform(-opt_.power_range, opt_.power_range - 1);
    if (n >= 0) ++n;
    return n;
  }

  std::pair<Coords, Coords> commuting_pair() {
    const int r = opt_.range;
    switch (d_.kind()) {
      case Domain::Kind::heisenberg: {
        // Exactly the pairs with proportional (x, y): multiples of a primitive (p, q) plus central parts.
        int p = uniform(-r, r), q = uniform(-r, r);
        if (uniform(0, 1)) {
          p = 1;
          q = uniform(1, r);
        }
        const int g = std::gcd(p, q);
        if (g) {
          p /= g;
          q /= g;
        }
        const int m1 = uniform(-r, r), m2 = uniform(-r, r);
        return {Coords{m1 * p, m1 * q, uniform(-r * r, r * r)}, Coords{m2 * p, m2 * q, uniform(-r * r, r * r)}};
      }
      case Domain::Kind::sdp: {
        if (uniform(0, 1)) {
          Coords a(d_.arity()), b(d_.arity());
          for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            a[i] = uniform(-r, r);
            b[i] = uniform(-r, r);
          }
          return {a, b};
        }
        const Coords g = element();
        return {g, d_.pow(g, uniform(-2, 2))};
      }
      case Domain::Kind::lattice:
        return {element(), element()};
    }
    return {};
  }

  /// Fixed elements tried before random ones.
  std::vector<std::pair<Coords, std::int64_t>> homogeneity_seeds() const {
    if (d_.kind() != Domain::Kind::heisenberg) return {};
    std::vector<std::pair<Coords, std::int64_t>> out;
    for (const Coords& g : {Coords{0, 0, 1}, Coords{1, 0, 0}, Coords{1, 1, 0}, Coords{1, 2, 0}, Coords{2, 1, 1}})
      for (std::int64_t n : {2, 3, -1}) out.emplace_back(g, n);
    return out;
  }

 private:
  const Domain& d_;
  const AxiomOptions& opt_;
  std::mt19937_64 rng_;
};

inline void record(AxiomVerdict& v, bool ok, Counterexample cx) {
  ++v.samples;
  if (ok) return;
  v.passed = false;
  ++v.failures;
  v.counterexamples.push_back(std::move(cx));
}

inline void finish(AxiomVerdict& v, std::size_t keep) {
  std::sort(v.counterexamples.begin(), v.counterexamples.end());
  if (v.counterexamples.size() > keep) v.counterexamples.resize(keep);
}

}  // namespace detail

/// Checks l(g^n) = |n| l(g), l(h g h^-1) = l(g) and l(ab) <= l(a) + l(b)
/// for commuting a, b on sampled elements. Exact evaluators are compared
/// exactly; numeric ones within the tolerance.
inline AxiomReport check_axioms(const LengthEvaluator& l, const AxiomOptions& opt = {}) {
  const Domain& d = l.domain();
  const double tol = l.exact() ? 0.0 : opt.tolerance;
  AxiomReport rep;
  rep.evaluator = l.name();
  rep.domain = d.name();
  rep.exact = l.exact();
  rep.tolerance = tol;
  rep.seed = opt.seed;
  rep.homogeneity.axiom = "homogeneity";
  rep.homogeneity.relation = "l(g^n) = |n| l(g)";
  rep.conjugation.axiom = "conjugation";
  rep.conjugation.relation = "l(h g h^-1) = l(g)";
  rep.commuting_subadditivity.axiom = "commuting_subadditivity";
  rep.commuting_subadditivity.relation = "l(ab) <= l(a) + l(b) for commuting a, b";

  detail::Sampler s(d, opt);
  const auto guarded = [](AxiomVerdict& v, auto&& body) {
    try {
      body();
    } catch (const ResourceError&) {
      ++v.skipped;
    }
  };

  auto seeds = s.homogeneity_seeds();
  for (std::size_t i = 0; i < opt.samples; ++i) {
    auto [g, n] = i < seeds.size() ? seeds[i] : std::make_pair(s.element(), s.power());
    guarded(rep.homogeneity, [&] {
      const LengthValue lhs = l(d.pow(g, n));
      const LengthValue rhs = l(g).scaled(from_int64(n));
      detail::record(rep.homogeneity, agree(lhs, rhs, tol), {{g}, n, lhs, rhs});
    });
  }
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const Coords g = s.element(), h = s.element();
    guarded(rep.conjugation, [&] {
      const LengthValue lhs = l(d.conj(g, h));
      const LengthValue rhs = l(g);
      detail::record(rep.conjugation, agree(lhs, rhs, tol), {{g, h}, std::nullopt, lhs, rhs});
    });
  }
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto [a, b] = s.commuting_pair();
    if (!d.commute(a, b)) throw Error("internal: sampled pair does not commute");
    guarded(rep.commuting_subadditivity, [&] {
      const LengthValue lhs = l(d.mul(a, b));
      const LengthValue rhs = l(a) + l(b);
      detail::record(rep.commuting_subadditivity, at_most(lhs, rhs, tol), {{a, b}, std::nullopt, lhs, rhs});
    });
  }
  detail::finish(rep.homogeneity, opt.max_counterexamples);
  detail::finish(rep.conjugation, opt.max_counterexamples);
  detail::finish(rep.commuting_subadditivity, opt.max_counterexamples);
  return rep;
}

// ---- domination of stable lengths by |x| + |y| ----

struct DominationRow {
  Coords element;
  std::int64_t k;
  LengthValue ratio;  // L(g^k)/k
  LengthValue bound;  // K(|x|+|y|) + K 2 ceil(2 sqrt(k|z|)) / k
  bool holds;
};

struct DominationReport {
  std::string evaluator;
  LengthValue k;  // max L(s) over the generators
  bool precondition_passed = true;
  std::string precondition_failure;  // which semi-norm axiom failed
  std::optional<Counterexample> precondition_counterexample;
  std::vector<DominationRow> rows;
  bool bound_holds = false;

  bool passed() const { return precondition_passed && bound_holds; }
};

/// Spot-checks that L is a semi-norm (subadditive on all pairs, symmetric)
/// and then that L(g^k)/k <= K(|x|+|y|) + slack(k) on the samples. Writing
/// g = b^y a^x c^z gives d(g^k) <= k(|x|+|y|) + 2 ceil(2 sqrt(k|z|)), and a
/// semi-norm satisfies L <= K d, which is the bound checked.
inline DominationReport stable_norm_domination_check(const LengthEvaluator& l, const std::vector<HeisElem>& sample,
                                                     std::int64_t k_max, const AxiomOptions& opt = {}) {
  if (l.domain().kind() != Domain::Kind::heisenberg) throw PreconditionError("domination check needs a Heisenberg length");
  const Domain& d = l.domain();
  const double tol = l.exact() ? 0.0 : opt.tolerance;
  DominationReport rep;
  rep.evaluator = l.name();
  rep.k = l(heis_a());
  for (const auto& s : heisenberg_generators())
    if (detail::lower(rep.k, l(s))) rep.k = l(s);

  // Semi-norm spot check: fixed pairs first, then random ones.
  detail::Sampler s(d, opt);
  std::vector<std::pair<Coords, Coords>> pairs{{{1, 1, 0}, {0, 1, 0}}, {{1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {1, 0, 0}}};
  while (pairs.size() < opt.samples) pairs.emplace_back(s.element(), s.element());
  for (const auto& [a, b] : pairs) {
    const LengthValue lab = l(d.mul(a, b)), sum = l(a) + l(b);
    if (!at_most(lab, sum, tol)) {
      rep.precondition_passed = false;
      rep.precondition_failure = "subadditivity";
      rep.precondition_counterexample = Counterexample{{a, b}, std::nullopt, lab, sum};
      return rep;
    }
    const LengthValue la = l(a), linv = l(d.inv(a));
    if (!agree(la, linv, tol)) {
      rep.precondition_passed = false;
      rep.precondition_failure = "symmetry";
      rep.precondition_counterexample = Counterexample{{a}, std::int64_t{-1}, linv, la};
      return rep;
    }
  }

  rep.bound_holds = true;
  const Rational kr = rep.k.is_exact() ? rep.k.rational() : Rational(rep.k.to_double());
  for (const auto& g : sample) {
    const auto est = stable_length_estimate(l, coords_of(g), k_max, tol);
    for (const auto& smp : est.samples) {
      const Int kk = from_int64(smp.k);
      const Rational bound =
          kr * Rational(swl_heisenberg(g)) + kr * Rational(2 * ceil_two_sqrt(kk * abs_int(g.z))) / Rational(kk);
      const LengthValue b = LengthValue::exact(bound);
      const bool ok = at_most(smp.ratio, b, tol);
      rep.bound_holds = rep.bound_holds && ok;
      rep.rows.push_back({coords_of(g), smp.k, smp.ratio, b, ok});
    }
  }
  return rep;
}

}  // namespace lengrp
