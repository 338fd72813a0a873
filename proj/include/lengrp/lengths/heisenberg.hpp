#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "lengrp/core/errors.hpp"
#include "lengrp/core/numbers.hpp"
#include "lengrp/groups/cayley.hpp"
#include "lengrp/groups/heisenberg.hpp"
#include "lengrp/lengths/evaluator.hpp"

namespace lengrp {

/// Reduces (x, y, z) by the symmetries
///   d(x,y,z) = d(-x,y,-z) = d(x,-y,-z) = d(-x,-y,z) = d(y,x,z)
/// to z >= 0 and x >= |y| (and y >= 0 when z = 0).
inline HeisElem blachere_normalize(HeisElem g) {
  if (abs_int(g.y) > abs_int(g.x)) std::swap(g.x, g.y);
  if (sgn(g.x) < 0) {
    g.x = -g.x;
    g.y = -g.y;
  }
  if (sgn(g.z) < 0) {
    g.y = -g.y;
    g.z = -g.z;
  }
  if (sgn(g.z) == 0 && sgn(g.y) < 0) g.y = -g.y;
  return g;
}

/// Closed-form word length for the generating set {a, b}^{+-1}, on the
/// cases where it is known:
///   0 <= y, x^2 <= z:        2 ceil(2 sqrt z) - x - y
///   0 <= y, x^2 >= z, xy > z: x + y
/// Anything else is outside the covered cases (nullopt).
inline std::optional<Int> blachere_word_length(const HeisElem& g) {
  const HeisElem n = blachere_normalize(g);
  if (sgn(n.y) < 0) return std::nullopt;
  if (n.x * n.x <= n.z) return 2 * ceil_two_sqrt(n.z) - n.x - n.y;
  if (n.x * n.y > n.z) return n.x + n.y;
  return std::nullopt;
}

inline std::optional<Int> blachere_word_length(const Int& x, const Int& y, const Int& z) {
  return blachere_word_length(HeisElem{x, y, z});
}

/// |c^n| = 2 ceil(2 sqrt n)
inline Int central_power_word_length(const Int& n) {
  if (sgn(n) < 0) throw PreconditionError("central power needs n >= 0");
  return 2 * ceil_two_sqrt(n);
}

/// Stable word length |x| + |y|.
inline Int swl_heisenberg(const HeisElem& g) { return abs_int(g.x) + abs_int(g.y); }

/// |k| n^2 on (k, kn, *) with k != 0, n >= 1; zero elsewhere. Depends only
/// on (x, y), so it is a class function.
inline Rational quadratic_length(const HeisElem& g) {
  if (sgn(g.x) == 0 || !mpz_divisible_p(g.y.get_mpz_t(), g.x.get_mpz_t())) return 0;
  const Int n = g.y / g.x;
  if (n < 1) return 0;
  return Rational(abs_int(g.x) * n * n);
}

enum class LengthPath { formula, oracle };

inline std::string to_string(LengthPath p) { return p == LengthPath::formula ? "formula" : "oracle"; }

struct WordLengthResult {
  Int length;
  LengthPath path;
};

/// Word metric on the Heisenberg group: closed form where it applies,
/// breadth-first search up to oracle_radius elsewhere. The search ball is
/// built on first use and shared by copies.
class HeisWordMetric {
 public:
  explicit HeisWordMetric(std::size_t oracle_radius = 40, std::size_t forward_radius = 0, BfsOptions opt = {})
      : state_(std::make_shared<State>()) {
    state_->oracle_radius = oracle_radius;
    state_->forward_radius = forward_radius ? std::min(forward_radius, oracle_radius)
                                            : std::min<std::size_t>(oracle_radius, 24);
    state_->opt = opt;
  }

  std::size_t oracle_radius() const noexcept { return state_->oracle_radius; }

  WordLengthResult length(const HeisElem& g) const {
    if (auto d = blachere_word_length(g)) return {*d, LengthPath::formula};
    // The oracle works on the normalized representative; symmetric elements share a cache entry.
    const HeisElem n = blachere_normalize(g);
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(n);
    if (it == state_->memo.end()) {
      if (!state_->oracle)
        state_->oracle = std::make_unique<WordOracle>(CayleyGroup::heisenberg(), state_->forward_radius, state_->opt);
      auto d = state_->oracle->word_length(n, state_->oracle_radius);
      if (!d)
        throw ResourceError("word length of " + to_string(g) + " exceeds the oracle radius " +
                                std::to_string(state_->oracle_radius),
                            state_->oracle_radius);
      it = state_->memo.emplace(n, Int(*d)).first;
    }
    return {it->second, LengthPath::oracle};
  }

 private:
  struct State {
    std::size_t oracle_radius = 0;
    std::size_t forward_radius = 0;
    BfsOptions opt;
    std::mutex mu;
    std::unique_ptr<WordOracle> oracle;
    std::map<HeisElem, Int> memo;
  };
  std::shared_ptr<State> state_;
};

/// Exact word length of g: closed form, or a search of radius oracle_radius.
inline WordLengthResult heis_word_length(const HeisElem& g, std::size_t oracle_radius) {
  return HeisWordMetric(oracle_radius).length(g);
}

inline WordLengthResult heis_word_length(const Int& x, const Int& y, const Int& z, std::size_t oracle_radius) {
  return heis_word_length(HeisElem{x, y, z}, oracle_radius);
}

// ---- evaluators ----

inline LengthEvaluator swl_length() {
  return LengthEvaluator(
      "swl", Domain::heisenberg(), true,
      [](const Coords& g) { return LengthValue::exact(swl_heisenberg(HeisElem{g[0], g[1], g[2]})); },
      "stable word length |x| + |y|");
}

inline LengthEvaluator quadratic_length_evaluator() {
  return LengthEvaluator(
      "quadratic", Domain::heisenberg(), true,
      [](const Coords& g) { return LengthValue::exact(quadratic_length(HeisElem{g[0], g[1], g[2]})); },
      "|k| n^2 on powers of (1, n, 0) up to central parts, zero elsewhere");
}

inline LengthEvaluator word_length_evaluator(const HeisWordMetric& metric = HeisWordMetric()) {
  return LengthEvaluator(
      "wordlength", Domain::heisenberg(), true,
      [metric](const Coords& g) { return LengthValue::exact(metric.length(HeisElem{g[0], g[1], g[2]}).length); },
      "word length for the generating set {a, b}^{+-1}");
}

/// |v_1| + ... + |v_n| on Z^n.
inline LengthEvaluator l1_length(std::size_t n) {
  return LengthEvaluator(
      "l1", Domain::lattice(n), true,
      [](const Coords& v) {
        Int s = 0;
        for (const auto& c : v) s += abs_int(c);
        return LengthValue::exact(s);
      },
      "sum of absolute coordinates");
}

/// The generating set {a, b}^{+-1}.
inline std::vector<Coords> heisenberg_generators() { return CayleyGroup::heisenberg().generators(); }

}  // namespace lengrp
