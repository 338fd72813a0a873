#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>

#include "lengrp/core/errors.hpp"
#include "lengrp/core/numbers.hpp"
#include "lengrp/exactalg/int_matrix.hpp"
#include "lengrp/groups/cayley.hpp"
#include "lengrp/groups/heisenberg.hpp"
#include "lengrp/groups/sdp.hpp"

namespace lengrp {

/// Value of a length function: an exact rational or a double.
class LengthValue {
 public:
  LengthValue() : v_(Rational(0)) {}
  static LengthValue exact(Rational r) { return LengthValue(std::move(r)); }
  static LengthValue numeric(double d) { return LengthValue(d); }

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const {
    if (!is_exact()) throw PreconditionError("numeric length value has no exact form");
    return std::get<Rational>(v_);
  }
  double to_double() const { return is_exact() ? std::get<Rational>(v_).get_d() : std::get<double>(v_); }

  std::string to_string() const {
    return is_exact() ? std::get<Rational>(v_).get_str() : std::to_string(std::get<double>(v_));
  }

  friend LengthValue operator+(const LengthValue& a, const LengthValue& b) {
    if (a.is_exact() && b.is_exact()) return exact(a.rational() + b.rational());
    return numeric(a.to_double() + b.to_double());
  }

  /// |n| * value
  LengthValue scaled(const Int& n) const {
    if (is_exact()) return exact(Rational(abs_int(n)) * rational());
    return numeric(std::abs(n.get_d()) * to_double());
  }

  LengthValue divided(const Int& d) const {
    if (is_exact()) return exact(rational() / Rational(d));
    return numeric(to_double() / d.get_d());
  }

 private:
  explicit LengthValue(Rational r) : v_(std::move(r)) { std::get<Rational>(v_).canonicalize(); }
  explicit LengthValue(double d) : v_(d) {}
  std::variant<Rational, double> v_;
};

/// a == b exactly when both are exact, else |a - b| <= tol.
inline bool agree(const LengthValue& a, const LengthValue& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return std::abs(a.to_double() - b.to_double()) <= tol;
}

/// a <= b exactly when both are exact, else a <= b + tol.
inline bool at_most(const LengthValue& a, const LengthValue& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a.rational() <= b.rational();
  return a.to_double() <= b.to_double() + tol;
}

/// Where a length function lives: Heisenberg, Z^n x_A Z, or the lattice Z^n.
class Domain {
 public:
  enum class Kind { heisenberg, sdp, lattice };

  static Domain heisenberg() { return Domain(Kind::heisenberg, nullptr, 3); }
  static Domain sdp(TwistPtr tw) {
    if (!tw) throw PreconditionError("semidirect product domain without a twist");
    const std::size_t n = tw->dimension() + 1;
    return Domain(Kind::sdp, std::move(tw), n);
  }
  static Domain lattice(std::size_t n) {
    if (n == 0) throw PreconditionError("lattice of dimension zero");
    return Domain(Kind::lattice, nullptr, n);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t arity() const noexcept { return arity_; }
  const TwistPtr& twist() const noexcept { return twist_; }

  std::string name() const {
    switch (kind_) {
      case Kind::heisenberg: return "heisenberg";
      case Kind::sdp: return "sdp" + twist_->matrix().to_string();
      case Kind::lattice: return "Z^" + std::to_string(arity_);
    }
    return {};
  }

  void check(const Coords& g) const {
    if (g.size() != arity_)
      throw PreconditionError("element has " + std::to_string(g.size()) + " coordinates, expected " +
                              std::to_string(arity_));
  }

  Coords identity() const { return Coords(arity_); }

  Coords mul(const Coords& g, const Coords& h) const {
    check(g);
    check(h);
    switch (kind_) {
      case Kind::heisenberg: return coords_of(heis_mul(heis(g), heis(h)));
      case Kind::sdp: return coords_of(sdp_mul(sdp(g), sdp(h)));
      case Kind::lattice: {
        Coords out = g;
        for (std::size_t i = 0; i < arity_; ++i) out[i] += h[i];
        return out;
      }
    }
    return {};
  }

  Coords inv(const Coords& g) const {
    check(g);
    switch (kind_) {
      case Kind::heisenberg: return coords_of(heis_inv(heis(g)));
      case Kind::sdp: return coords_of(sdp_inv(sdp(g)));
      case Kind::lattice: {
        Coords out = g;
        for (auto& c : out) c = -c;
        return out;
      }
    }
    return {};
  }

  Coords pow(const Coords& g, std::int64_t k) const {
    check(g);
    switch (kind_) {
      case Kind::heisenberg: return coords_of(heis_pow(heis(g), k));
      case Kind::sdp: return coords_of(sdp_pow(sdp(g), k));
      case Kind::lattice: {
        Coords out = g;
        for (auto& c : out) c *= from_int64(k);
        return out;
      }
    }
    return {};
  }

  /// h g h^-1
  Coords conj(const Coords& g, const Coords& h) const { return mul(mul(h, g), inv(h)); }

  bool commute(const Coords& g, const Coords& h) const { return mul(g, h) == mul(h, g); }

  HeisElem heis(const Coords& g) const { return {g.at(0), g.at(1), g.at(2)}; }
  SdpElem sdp(const Coords& g) const { return {IntVector(g.begin(), g.end() - 1), g.back(), twist_}; }

 private:
  Domain(Kind k, TwistPtr tw, std::size_t n) : kind_(k), twist_(std::move(tw)), arity_(n) {}

  Kind kind_;
  TwistPtr twist_;
  std::size_t arity_;
};

/// A named length function on a domain.
class LengthEvaluator {
 public:
  using Fn = std::function<LengthValue(const Coords&)>;

  LengthEvaluator(std::string name, Domain domain, bool exact, Fn fn, std::string description = {})
      : name_(std::move(name)), description_(std::move(description)), domain_(std::move(domain)), exact_(exact),
        fn_(std::move(fn)) {}

  const std::string& name() const noexcept { return name_; }
  const std::string& description() const noexcept { return description_; }
  const Domain& domain() const noexcept { return domain_; }
  bool exact() const noexcept { return exact_; }

  LengthValue operator()(const Coords& g) const {
    domain_.check(g);
    return fn_(g);
  }
  LengthValue operator()(const HeisElem& g) const { return (*this)(coords_of(g)); }
  LengthValue operator()(const SdpElem& g) const { return (*this)(coords_of(g)); }

 private:
  std::string name_;
  std::string description_;
  Domain domain_;
  bool exact_;
  Fn fn_;
};

inline LengthEvaluator zero_length(Domain d) {
  return LengthEvaluator("zero", std::move(d), true, [](const Coords&) { return LengthValue::exact(Rational(0)); },
                         "identically zero");
}

/// c * L for a rational c >= 0.
inline LengthEvaluator scaled_length(const LengthEvaluator& l, const Rational& c) {
  if (sgn(c) < 0) throw PreconditionError("negative scale for a length function");
  return LengthEvaluator(c.get_str() + "*" + l.name(), l.domain(), l.exact(), [l, c](const Coords& g) {
    const LengthValue v = l(g);
    return v.is_exact() ? LengthValue::exact(c * v.rational()) : LengthValue::numeric(c.get_d() * v.to_double());
  });
}

}  // namespace lengrp
