#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "lengrp/core/errors.hpp"
#include "lengrp/exactalg/charpoly.hpp"
#include "lengrp/exactalg/int_matrix.hpp"
#include "lengrp/exactalg/roots.hpp"
#include "lengrp/lengths/evaluator.hpp"

namespace lengrp {

/// Spectral projection onto the eigenspace of one unit-circle eigenvalue.
struct UnitEigenProjection {
  std::complex<double> eigenvalue;
  Eigen::MatrixXcd projection;  // normalized to spectral norm 1
  double condition = 0;         // of the eigenvector matrix

  double apply_norm(const Eigen::VectorXd& v) const { return (projection * v.cast<std::complex<double>>()).norm(); }
};

/// Projection for the unit-circle eigenvalue of A closest to the circle,
/// taking the one with nonnegative imaginary part. The exact test decides
/// that such an eigenvalue exists; the projection itself is floating point.
inline UnitEigenProjection unit_eigen_projection(const IntMatrix& a, double max_condition = 1e8) {
  if (!has_unit_circle_eigenvalue(char_poly(a)))
    throw PreconditionError("matrix has no eigenvalue of modulus one");
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw NumericalError("eigen-decomposition did not converge");
  const Eigen::VectorXcd ev = es.eigenvalues();
  const Eigen::MatrixXcd vecs = es.eigenvectors();

  Eigen::Index best = 0;
  const auto score = [&](Eigen::Index i) { return std::abs(std::abs(ev[i]) - 1.0); };
  for (Eigen::Index i = 1; i < n; ++i) {
    const double si = score(i), sb = score(best);
    if (si < sb - 1e-12 || (std::abs(si - sb) <= 1e-12 && ev[i].imag() > ev[best].imag())) best = i;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vecs);
  const auto& sv = svd.singularValues();
  const double cond = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  if (!(cond < max_condition))
    throw NumericalError("eigenvector matrix is ill-conditioned (defective eigenvalue?), condition " +
                         std::to_string(cond));

  const Eigen::MatrixXcd inv = vecs.inverse();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(ev[i] - ev[best]) < 1e-6) p += vecs.col(i) * inv.row(i);
  Eigen::JacobiSVD<Eigen::MatrixXcd> psvd(p);
  const double pnorm = psvd.singularValues()(0);
  if (!(pnorm > 0)) throw NumericalError("spectral projection vanished");
  return {ev[best], p / pnorm, cond};
}

/// v -> |pi(v)| on Z^n, pi the normalized unit-eigenvalue projection.
/// Invariant under A up to rounding because |lambda| = 1.
inline LengthEvaluator unit_eigen_seminorm(const IntMatrix& a, double max_condition = 1e8) {
  const UnitEigenProjection proj = unit_eigen_projection(a, max_condition);
  const std::size_t n = a.size();
  return LengthEvaluator(
      "uniteigen", Domain::lattice(n), false,
      [proj, n](const Coords& v) {
        Eigen::VectorXd x(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) x(static_cast<Eigen::Index>(i)) = v[i].get_d();
        return LengthValue::numeric(proj.apply_norm(x));
      },
      "norm of the spectral projection onto a unit-circle eigenvalue");
}

/// Invariance l(Av) = l(v) and positivity l(v) > 0 on random nonzero
/// integer vectors plus the standard basis.
struct SeminormCheck {
  std::size_t samples = 0;
  double max_invariance_error = 0;
  double min_value = INFINITY;
  bool invariance_passed = false;
  bool positivity_passed = false;
  double invariance_tolerance = 0;
  double positivity_threshold = 0;
};

inline SeminormCheck check_seminorm(const LengthEvaluator& l, const IntMatrix& a, std::size_t samples,
                                    std::uint64_t seed, double invariance_tolerance = 1e-9,
                                    double positivity_threshold = 1e-6, int entry_range = 100) {
  if (l.domain().kind() != Domain::Kind::lattice || l.domain().arity() != a.size())
    throw PreconditionError("seminorm check needs a length on Z^n matching the matrix");
  const std::size_t n = a.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-entry_range, entry_range);
  std::vector<Coords> vs;
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n);
    e[i] = 1;
    vs.push_back(e);
  }
  while (vs.size() < samples + n) {
    Coords v(n);
    bool zero = true;
    for (auto& c : v) {
      c = entry(rng);
      zero = zero && c == 0;
    }
    if (!zero) vs.push_back(v);
  }
  SeminormCheck r;
  r.samples = vs.size();
  r.invariance_tolerance = invariance_tolerance;
  r.positivity_threshold = positivity_threshold;
  for (const auto& v : vs) {
    const double lv = l(v).to_double();
    r.max_invariance_error = std::max(r.max_invariance_error, std::abs(l(a.apply(v)).to_double() - lv));
    r.min_value = std::min(r.min_value, lv);
  }
  r.invariance_passed = r.max_invariance_error < invariance_tolerance;
  r.positivity_passed = r.min_value > positivity_threshold;
  return r;
}

}  // namespace lengrp
