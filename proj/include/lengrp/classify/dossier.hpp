#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lengrp/core/errors.hpp"
#include "lengrp/exactalg/int_matrix.hpp"
#include "lengrp/exactalg/spectral.hpp"
#include "lengrp/groups/cayley.hpp"
#include "lengrp/groups/sdp.hpp"
#include "lengrp/lengths/seminorm.hpp"
#include "lengrp/lengths/stable.hpp"

namespace lengrp {

enum class EvidenceLevel { none, estimates, full };

inline std::string to_string(EvidenceLevel e) {
  switch (e) {
    case EvidenceLevel::none: return "none";
    case EvidenceLevel::estimates: return "estimates";
    case EvidenceLevel::full: return "full";
  }
  return "none";
}

inline EvidenceLevel evidence_level_from_string(const std::string& s) {
  if (s == "none") return EvidenceLevel::none;
  if (s == "estimates") return EvidenceLevel::estimates;
  if (s == "full") return EvidenceLevel::full;
  throw ParseError("evidence level must be none, estimates or full, got '" + s + "'");
}

/// A claim about G = Z^n x_A Z and the result it rests on. Undecided claims
/// carry no lemma.
struct Verdict {
  std::string claim;
  std::optional<std::string> lemma;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline const std::string kUndecided = "not decided by the available lemmas";

/// Tuning for the illustrative evidence. None of it affects verdicts.
struct EvidenceOptions {
  std::int64_t k_max = 12;
  std::size_t forward_radius = 4;
  std::size_t max_radius = 12;
  std::size_t memory_budget = 400'000;
  double threshold = 0.5;  // "trends toward 0": infimum ratio below this at k_max
};

struct LatticeEstimate {
  std::size_t basis_index;  // e_{i+1}
  StableLengthEstimate estimate;
};

struct Evidence {
  EvidenceLevel level = EvidenceLevel::none;
  EvidenceOptions options;
  std::vector<LatticeEstimate> estimates;
  std::optional<std::vector<double>> seminorm;  // l(e_i) for the unit-eigenvalue seminorm
  std::vector<std::string> notes;
  /// Whether the estimates fit the verdict; absent if nothing can be said.
  std::optional<bool> consistent;
};

struct ClassificationDossier {
  IntMatrix matrix;
  SpectralReport report;
  std::vector<Verdict> verdicts;
  Evidence evidence;
};

/// Verdicts implied by the report, one lemma tag each.
inline std::vector<Verdict> verdicts_for(const SpectralReport& r, std::size_t n) {
  const std::string lattice = "Z^" + std::to_string(n);
  std::vector<Verdict> v;
  if (r.finite_order)
    v.push_back({"virtually abelian (A finite order)", "Lemma finite"});
  else
    v.push_back({"no discrete purely positive length function (A infinite order)", "Lemma finite"});

  switch (r.purely_positive_stable_word_length) {
    case TriState::yes: v.push_back({"purely positive (stable word length)", "Corollary"}); break;
    case TriState::no:
      if (r.irreducible)
        v.push_back({"stable word length not purely positive", "Corollary"});
      else
        v.push_back({"stable word length not purely positive (vanishes on " + lattice + ")", "Lemma norm1"});
      break;
    case TriState::indeterminate: v.push_back({"purely positive: " + kUndecided, std::nullopt}); break;
  }

  switch (r.vanishes_on_lattice) {
    case TriState::yes: v.push_back({"every length function vanishes on " + lattice, "Lemma norm1"}); break;
    case TriState::no:
      if (r.finite_order)
        v.push_back({"word length is positive on " + lattice + " (virtually abelian)", "Lemma finite"});
      else
        v.push_back({"stable word length is positive on " + lattice, "Lemma stableword"});
      break;
    case TriState::indeterminate: v.push_back({"vanishing on " + lattice + ": " + kUndecided, std::nullopt}); break;
  }
  return v;
}

namespace detail {

inline void collect_estimates(const IntMatrix& a, const EvidenceOptions& opt, Evidence& ev) {
  const TwistPtr tw = make_twist(a);
  std::optional<WordOracle> oracle;
  try {
    oracle.emplace(CayleyGroup::sdp(tw), opt.forward_radius, BfsOptions{opt.memory_budget});
  } catch (const ResourceError& e) {
    ev.notes.push_back(std::string("no estimates: ") + e.what());
    return;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    Coords e(a.size() + 1);
    e[i] = 1;
    auto est = estimate_with(
        [&](std::int64_t k) {
          Coords target = e;
          target[i] = from_int64(k);
          auto d = oracle->word_length(target, opt.max_radius);
          if (!d) throw ResourceError("word length above the search radius", opt.max_radius);
          return LengthValue::exact(Rational(*d));
        },
        "wordlength", e, opt.k_max, 0.0);
    if (est.partial) ev.notes.push_back("e" + std::to_string(i + 1) + ": partial estimate, " + est.partial_reason);
    ev.estimates.push_back({i, std::move(est)});
  }
}

/// Estimates complete to k_max fit "vanishes" when every infimum is below the
/// threshold, and fit "positive" when none is.
inline std::optional<bool> consistency(const SpectralReport& r, const Evidence& ev) {
  if (ev.estimates.empty() || r.vanishes_on_lattice == TriState::indeterminate) return std::nullopt;
  for (const auto& e : ev.estimates)
    if (e.estimate.partial || e.estimate.samples.empty()) return std::nullopt;
  bool all_small = true, none_small = true;
  for (const auto& e : ev.estimates) {
    const bool small = e.estimate.infimum().to_double() < ev.options.threshold;
    all_small = all_small && small;
    none_small = none_small && !small;
  }
  return r.vanishes_on_lattice == TriState::yes ? all_small : none_small;
}

}  // namespace detail

/// Exact classification plus optional experimental corroboration.
inline ClassificationDossier build_dossier(const IntMatrix& a, EvidenceLevel level = EvidenceLevel::none,
                                           const EvidenceOptions& opt = {}) {
  ClassificationDossier d{a, classify_sdp(a), {}, {}};
  d.verdicts = verdicts_for(d.report, a.size());
  d.evidence.level = level;
  d.evidence.options = opt;
  if (level == EvidenceLevel::none) return d;

  detail::collect_estimates(a, opt, d.evidence);
  d.evidence.consistent = detail::consistency(d.report, d.evidence);

  if (level == EvidenceLevel::full && d.report.has_unit_circle_eigenvalue) {
    try {
      const auto l = unit_eigen_seminorm(a);
      std::vector<double> table;
      for (std::size_t i = 0; i < a.size(); ++i) {
        Coords e(a.size());
        e[i] = 1;
        table.push_back(l(e).to_double());
      }
      d.evidence.seminorm = std::move(table);
    } catch (const NumericalError& e) {
      d.evidence.notes.push_back(std::string("no seminorm table: ") + e.what());
    }
  }
  return d;
}

/// One result per input, in input order; failures do not affect other items.
struct BatchItem {
  std::optional<ClassificationDossier> dossier;
  std::optional<std::string> error;
  std::string error_kind;  // "parse" | "precondition" | "resource" | ""
};

inline std::vector<BatchItem> batch_classify(const std::vector<IntMatrix>& matrices,
                                             EvidenceLevel level = EvidenceLevel::none,
                                             const EvidenceOptions& opt = {}) {
  std::vector<BatchItem> out;
  for (const auto& m : matrices) {
    BatchItem item;
    try {
      item.dossier = build_dossier(m, level, opt);
    } catch (const PreconditionError& e) {
      item.error = e.what();
      item.error_kind = "precondition";
    } catch (const ResourceError& e) {
      item.error = e.what();
      item.error_kind = "resource";
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace lengrp
