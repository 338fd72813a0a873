#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lengrp/exactalg/charpoly.hpp"
#include "lengrp/exactalg/int_matrix.hpp"
#include "lengrp/exactalg/irreducible.hpp"
#include "lengrp/exactalg/order.hpp"
#include "lengrp/exactalg/roots.hpp"

namespace lengrp {

enum class TriState { yes, no, indeterminate };

inline std::string to_string(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    case TriState::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

inline TriState tristate_from_string(const std::string& s) {
  if (s == "yes") return TriState::yes;
  if (s == "no") return TriState::no;
  if (s == "indeterminate") return TriState::indeterminate;
  throw ParseError("not a tri-state value: " + s);
}

/// Matrix-level verdicts for G = Z^n x_A Z.
struct SpectralReport {
  std::optional<std::uint64_t> finite_order;
  bool diagonalizable = false;
  bool irreducible = false;
  bool has_unit_circle_eigenvalue = false;
  bool admits_discrete_purely_positive = false;
  TriState purely_positive_stable_word_length = TriState::indeterminate;
  TriState vanishes_on_lattice = TriState::indeterminate;

  friend bool operator==(const SpectralReport&, const SpectralReport&) = default;
};

/// Classification of A in GL_n(Z).
///
///  - admits a discrete purely positive length function iff A has finite order;
///  - A irreducible: stable word length purely positive iff some eigenvalue
///    has modulus one;
///  - A diagonalizable without unit-circle eigenvalues: every length function
///    vanishes on Z^n.
///
/// Everything else is left indeterminate.
inline SpectralReport classify_sdp(const IntMatrix& a) {
  const Twist twist(a);  // rejects |det| != 1
  const IntPolynomial cp = char_poly(a);

  SpectralReport r;
  r.finite_order = finite_order(a);
  r.diagonalizable = is_diagonalizable(a);
  r.irreducible = is_irreducible(cp);
  r.has_unit_circle_eigenvalue = has_unit_circle_eigenvalue(cp);
  r.admits_discrete_purely_positive = r.finite_order.has_value();

  const bool hyperbolic_diagonal = r.diagonalizable && !r.has_unit_circle_eigenvalue;
  if (r.irreducible)
    r.purely_positive_stable_word_length = r.has_unit_circle_eigenvalue ? TriState::yes : TriState::no;
  else if (hyperbolic_diagonal)
    r.purely_positive_stable_word_length = TriState::no;

  if (hyperbolic_diagonal)
    r.vanishes_on_lattice = TriState::yes;
  else if (r.finite_order || (r.irreducible && r.has_unit_circle_eigenvalue))
    r.vanishes_on_lattice = TriState::no;
  return r;
}

}  // namespace lengrp
