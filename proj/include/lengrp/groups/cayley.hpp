#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lengrp/core/errors.hpp"
#include "lengrp/core/numbers.hpp"
#include "lengrp/exactalg/int_matrix.hpp"
#include "lengrp/groups/heisenberg.hpp"
#include "lengrp/groups/sdp.hpp"

namespace lengrp {

/// Canonical coordinates: (x, y, z) for Heisenberg, (v_1..v_n, t) for Z^n x_A Z.
using Coords = std::vector<Int>;

inline Coords coords_of(const HeisElem& g) { return {g.x, g.y, g.z}; }

inline Coords coords_of(const SdpElem& g) {
  Coords c = g.v;
  c.push_back(g.t);
  return c;
}

/// A group together with a finite generating set. Generators are closed
/// under inversion on construction; by default the set is {a, b}^{+-1} or
/// {e_1..e_n, t}^{+-1}.
class CayleyGroup {
 public:
  enum class Kind { heisenberg, sdp };

  static CayleyGroup heisenberg() { return heisenberg({heis_a(), heis_b()}); }

  static CayleyGroup heisenberg(const std::vector<HeisElem>& gens) {
    CayleyGroup g(Kind::heisenberg, nullptr);
    for (const auto& s : gens) g.add_generator(coords_of(s));
    return g;
  }

  static CayleyGroup sdp(TwistPtr twist) {
    std::vector<SdpElem> gens;
    for (std::size_t i = 0; i < twist->dimension(); ++i) gens.push_back(sdp_basis(twist, i));
    gens.push_back(sdp_t(twist));
    return sdp(twist, gens);
  }

  static CayleyGroup sdp(TwistPtr twist, const std::vector<SdpElem>& gens) {
    if (!twist) throw PreconditionError("semidirect product group without a twist");
    CayleyGroup g(Kind::sdp, std::move(twist));
    for (const auto& s : gens) {
      if (s.v.size() != g.twist_->dimension()) throw PreconditionError("generator has the wrong dimension");
      g.add_generator(coords_of(s));
    }
    return g;
  }

  Kind kind() const noexcept { return kind_; }
  const TwistPtr& twist() const noexcept { return twist_; }
  const std::vector<Coords>& generators() const noexcept { return gens_; }
  std::size_t arity() const noexcept { return kind_ == Kind::heisenberg ? 3 : twist_->dimension() + 1; }

  Coords identity() const { return Coords(arity()); }

  /// Exact product of two coordinate tuples.
  Coords multiply(const Coords& g, const Coords& h) const {
    if (g.size() != arity() || h.size() != arity()) throw PreconditionError("coordinate tuple has the wrong length");
    if (kind_ == Kind::heisenberg) return coords_of(heis_mul(HeisElem{g[0], g[1], g[2]}, HeisElem{h[0], h[1], h[2]}));
    return coords_of(sdp_mul(to_sdp(g), to_sdp(h)));
  }

  Coords inverse(const Coords& g) const {
    if (kind_ == Kind::heisenberg) return coords_of(heis_inv(HeisElem{g.at(0), g.at(1), g.at(2)}));
    return coords_of(sdp_inv(to_sdp(g)));
  }

  SdpElem to_sdp(const Coords& c) const {
    if (kind_ != Kind::sdp || c.size() != arity()) throw PreconditionError("not a semidirect product element");
    return {IntVector(c.begin(), c.end() - 1), c.back(), twist_};
  }

  std::string name() const {
    return kind_ == Kind::heisenberg ? "heis" : "sdp" + twist_->matrix().to_string();
  }

 private:
  CayleyGroup(Kind k, TwistPtr t) : kind_(k), twist_(std::move(t)) {}

  void add_generator(const Coords& s) {
    if (s == identity()) throw PreconditionError("the identity is not a generator");
    for (const Coords& c : {s, inverse(s)})
      if (std::find(gens_.begin(), gens_.end(), c) == gens_.end()) gens_.push_back(c);
  }

  Kind kind_;
  TwistPtr twist_;
  std::vector<Coords> gens_;
};

/// Exact word lengths of every element of a ball, sorted by coordinates.
class BallTable {
 public:
  struct Entry {
    Coords coords;
    unsigned length;
  };

  BallTable(std::size_t radius, std::vector<std::size_t> spheres, std::vector<Entry> entries)
      : radius_(radius), spheres_(std::move(spheres)), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) { return a.coords < b.coords; });
  }

  std::size_t radius() const noexcept { return radius_; }
  const std::vector<std::size_t>& sphere_sizes() const noexcept { return spheres_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<unsigned> length(const Coords& c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                               [](const Entry& e, const Coords& k) { return e.coords < k; });
    if (it == entries_.end() || it->coords != c) return std::nullopt;
    return it->length;
  }

  std::optional<unsigned> length(const HeisElem& g) const { return length(coords_of(g)); }
  std::optional<unsigned> length(const SdpElem& g) const { return length(coords_of(g)); }

  /// "c1,...,ck,length" rows in coordinate order.
  void write_csv(std::ostream& out) const {
    const std::size_t k = entries_.empty() ? 0 : entries_.front().coords.size();
    for (std::size_t i = 0; i < k; ++i) out << "c" << i + 1 << ",";
    out << "length\n";
    for (const auto& e : entries_) {
      for (const auto& c : e.coords) out << c.get_str() << ",";
      out << e.length << "\n";
    }
  }

 private:
  std::size_t radius_;
  std::vector<std::size_t> spheres_;
  std::vector<Entry> entries_;
};

struct BfsOptions {
  std::size_t memory_budget = 2'000'000;  // stored states
};

namespace detail {

struct Overflow {};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

inline Int checked_add(const Int& a, const Int& b) { return a + b; }
inline Int checked_mul(const Int& a, const Int& b) { return a * b; }

template <class T>
T narrow(const Int& v);
template <>
inline std::int64_t narrow<std::int64_t>(const Int& v) {
  if (!fits_int64(v)) throw Overflow{};
  return to_int64(v);
}
template <>
inline Int narrow<Int>(const Int& v) {
  return v;
}

inline Int widen(std::int64_t v) { return from_int64(v); }
inline Int widen(const Int& v) { return v; }

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : k) h = (h ^ static_cast<std::uint64_t>(v)) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
  std::size_t operator()(const std::vector<Int>& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& v : k) {
      const mpz_srcptr z = v.get_mpz_t();
      h = (h ^ static_cast<std::uint64_t>(z->_mp_size)) * 0x100000001b3ULL;
      for (int i = 0; i < std::abs(z->_mp_size); ++i)
        h = (h ^ static_cast<std::uint64_t>(z->_mp_d[i])) * 0x100000001b3ULL + (h >> 29);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Right multiplication by generators in a fixed-width or exact scalar type.
template <class T>
class Stepper {
 public:
  using Key = std::vector<T>;

  explicit Stepper(const CayleyGroup& g) : group_(g) {
    for (const auto& s : g.generators()) {
      Key k;
      for (const auto& c : s) k.push_back(narrow<T>(c));
      gens_.push_back(std::move(k));
    }
  }

  Key key(const Coords& c) const {
    Key k;
    for (const auto& v : c) k.push_back(narrow<T>(v));
    return k;
  }

  /// g * s for the i-th generator s.
  Key step(const Key& g, std::size_t i) {
    const Key& s = gens_[i];
    Key out(g.size());
    if (group_.kind() == CayleyGroup::Kind::heisenberg) {
      out[0] = checked_add(g[0], s[0]);
      out[1] = checked_add(g[1], s[1]);
      out[2] = checked_add(checked_add(g[2], s[2]), checked_mul(g[0], s[1]));
      return out;
    }
    const std::size_t n = g.size() - 1;
    const Key& moved = twisted(g[n], i);
    for (std::size_t j = 0; j < n; ++j) out[j] = checked_add(g[j], moved[j]);
    out[n] = checked_add(g[n], s[n]);
    return out;
  }

  std::size_t count() const noexcept { return gens_.size(); }

 private:
  /// A^t applied to the lattice part of generator i, cached per t.
  const Key& twisted(const T& t, std::size_t i) {
    const Int tw = widen(t);
    auto it = cache_.find(tw);
    if (it == cache_.end()) {
      if (!fits_int64(tw)) throw PreconditionError("semidirect product exponent out of range");
      const IntMatrix p = group_.twist()->power(to_int64(tw));
      std::vector<Key> moved;
      for (const auto& s : group_.generators()) {
        const IntVector w = p.apply(IntVector(s.begin(), s.end() - 1));
        Key k;
        for (const auto& c : w) k.push_back(narrow<T>(c));
        moved.push_back(std::move(k));
      }
      it = cache_.emplace(tw, std::move(moved)).first;
    }
    return it->second[i];
  }

  const CayleyGroup& group_;
  std::vector<Key> gens_;
  std::map<Int, std::vector<Key>> cache_;
};

/// Layered BFS from a root. Each layer is kept in discovery order; lengths
/// live in the hash map.
template <class T>
class Search {
 public:
  using Key = std::vector<T>;

  Search(const CayleyGroup& g, Key root, std::size_t budget) : stepper_(g), budget_(budget) {
    dist_.emplace(root, 0U);
    frontier_.push_back(std::move(root));
    spheres_.push_back(1);
  }

  /// Expands one more layer. Throws ResourceError when the budget would be exceeded.
  const std::vector<Key>& expand() {
    std::vector<Key> next;
    const auto layer = static_cast<unsigned>(spheres_.size());
    for (const auto& g : frontier_) {
      for (std::size_t i = 0; i < stepper_.count(); ++i) {
        Key h = stepper_.step(g, i);
        if (dist_.count(h)) continue;
        if (dist_.size() >= budget_)
          throw ResourceError("breadth-first search exceeded the memory budget of " + std::to_string(budget_) + " states",
                              spheres_.size() - 1);
        dist_.emplace(h, layer);
        next.push_back(std::move(h));
      }
    }
    frontier_ = std::move(next);
    spheres_.push_back(frontier_.size());
    return frontier_;
  }

  std::size_t radius() const noexcept { return spheres_.size() - 1; }
  const std::vector<Key>& frontier() const noexcept { return frontier_; }
  const std::vector<std::size_t>& spheres() const noexcept { return spheres_; }
  const std::unordered_map<Key, unsigned, KeyHash>& dist() const noexcept { return dist_; }
  Stepper<T>& stepper() noexcept { return stepper_; }

 private:
  Stepper<T> stepper_;
  std::size_t budget_;
  std::unordered_map<Key, unsigned, KeyHash> dist_;
  std::vector<Key> frontier_;
  std::vector<std::size_t> spheres_;
};

template <class T>
BallTable ball_in(const CayleyGroup& g, std::size_t radius, const BfsOptions& opt) {
  Search<T> s(g, Stepper<T>(g).key(g.identity()), opt.memory_budget);
  while (s.radius() < radius) s.expand();
  std::vector<BallTable::Entry> entries;
  entries.reserve(s.dist().size());
  for (const auto& [k, d] : s.dist()) {
    Coords c;
    for (const auto& v : k) c.push_back(widen(v));
    entries.push_back({std::move(c), d});
  }
  return BallTable(radius, s.spheres(), std::move(entries));
}

/// Runs f<int64_t>() and, if a fixed-width operation overflows, f<Int>().
template <class F>
auto with_promotion(F&& f) {
  try {
    return f(std::int64_t{});
  } catch (const Overflow&) {
    return f(Int{});
  }
}

}  // namespace detail

/// Every element of word length <= radius with its exact length.
inline BallTable bfs_ball(const CayleyGroup& g, std::size_t radius, const BfsOptions& opt = {}) {
  return detail::with_promotion([&](auto tag) { return detail::ball_in<decltype(tag)>(g, radius, opt); });
}

/// Single-target word length queries against a shared forward ball.
///
/// If d(g) > R (the forward radius), some geodesic for g passes through the
/// sphere of radius R, so a backward search from g reaches the forward ball
/// first at layer b = d(g) - R, and every element hit there has length R.
class WordOracle {
 public:
  WordOracle(CayleyGroup g, std::size_t forward_radius, BfsOptions opt = {})
      : group_(std::move(g)), opt_(opt), ball_(bfs_ball(group_, forward_radius, opt_)) {}

  const CayleyGroup& group() const noexcept { return group_; }
  const BallTable& ball() const noexcept { return ball_; }
  std::size_t forward_radius() const noexcept { return ball_.radius(); }

  /// Exact d(g) if it is at most max_radius, else nullopt.
  std::optional<unsigned> word_length(const Coords& target, std::size_t max_radius) const {
    if (target.size() != group_.arity()) throw PreconditionError("coordinate tuple has the wrong length");
    if (auto d = ball_.length(target)) return *d <= max_radius ? d : std::nullopt;
    const std::size_t r = ball_.radius();
    if (max_radius <= r) return std::nullopt;
    return detail::with_promotion([&](auto tag) { return backward<decltype(tag)>(target, max_radius - r); });
  }

  std::optional<unsigned> word_length(const HeisElem& g, std::size_t max_radius) const {
    return word_length(coords_of(g), max_radius);
  }
  std::optional<unsigned> word_length(const SdpElem& g, std::size_t max_radius) const {
    return word_length(coords_of(g), max_radius);
  }

 private:
  template <class T>
  std::optional<unsigned> backward(const Coords& target, std::size_t layers) const {
    detail::Search<T> s(group_, detail::Stepper<T>(group_).key(target), opt_.memory_budget);
    std::size_t budget_radius = ball_.radius();
    for (std::size_t b = 1; b <= layers; ++b) {
      try {
        s.expand();
      } catch (const ResourceError&) {
        throw ResourceError("word length search exceeded the memory budget", budget_radius + b - 1);
      }
      for (const auto& k : s.frontier()) {
        Coords c;
        for (const auto& v : k) c.push_back(detail::widen(v));
        if (ball_.length(c)) return static_cast<unsigned>(ball_.radius() + b);
      }
    }
    return std::nullopt;
  }

  CayleyGroup group_;
  BfsOptions opt_;
  BallTable ball_;
};

/// d(g) if at most max_radius; the forward ball covers half the radius.
inline std::optional<unsigned> bfs_word_length(const CayleyGroup& g, const Coords& target, std::size_t max_radius,
                                               const BfsOptions& opt = {}) {
  if (target == g.identity()) return 0U;
  return WordOracle(g, (max_radius + 1) / 2, opt).word_length(target, max_radius);
}

inline std::optional<unsigned> bfs_word_length(const CayleyGroup& g, const HeisElem& target, std::size_t max_radius,
                                               const BfsOptions& opt = {}) {
  return bfs_word_length(g, coords_of(target), max_radius, opt);
}

inline std::optional<unsigned> bfs_word_length(const CayleyGroup& g, const SdpElem& target, std::size_t max_radius,
                                               const BfsOptions& opt = {}) {
  return bfs_word_length(g, coords_of(target), max_radius, opt);
}

}  // namespace lengrp
