#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lengrp/classify/dossier.hpp"
#include "lengrp/core/errors.hpp"
#include "lengrp/core/numbers.hpp"
#include "lengrp/exactalg/int_matrix.hpp"
#include "lengrp/exactalg/spectral.hpp"
#include "lengrp/groups/cayley.hpp"
#include "lengrp/lengths/axioms.hpp"
#include "lengrp/lengths/seminorm.hpp"
#include "lengrp/lengths/stable.hpp"

namespace lengrp::io {

using Json = nlohmann::ordered_json;

inline const char* const kSchema = "lengrp/1";

/// Integers that fit in 64 bits are numbers, larger ones decimal strings.
inline Json to_json(const Int& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

/// Integral rationals as integers, others as "p/q".
inline Json to_json(const Rational& r) {
  if (r.get_den() == 1) return to_json(Int(r.get_num()));
  return r.get_str();
}

inline Json to_json(const LengthValue& v) {
  if (v.is_exact()) return to_json(v.rational());
  return v.to_double();
}

inline Json to_json(const Coords& c) {
  Json a = Json::array();
  for (const auto& v : c) a.push_back(to_json(v));
  return a;
}

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(std::to_string(j.get<std::uint64_t>()))
                                                           : from_int64(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Int v;
    if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("not an integer: \"" + s + "\"");
    return v;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

/// Row-major JSON array of integer rows, e.g. [[2,1],[1,1]].
inline IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("matrix row is not an array: " + r.dump());
    std::vector<Int> row;
    for (const auto& v : r) row.push_back(int_from_json(v));
    if (row.size() != j.size()) throw ParseError("matrix must be square");
    rows.push_back(std::move(row));
  }
  return IntMatrix(rows);
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline IntMatrix parse_matrix(const std::string& text) { return matrix_from_json(parse_json(text)); }

/// Coefficient array, constant term first.
inline IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of coefficients");
  std::vector<Int> c;
  for (const auto& v : j) c.push_back(int_from_json(v));
  return IntPolynomial(c);
}

inline Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

// ---- exactalg ----

inline Json to_json(const SpectralReport& r) {
  Json j;
  j["finite_order"] = r.finite_order ? Json(*r.finite_order) : Json(nullptr);
  j["diagonalizable"] = r.diagonalizable;
  j["irreducible"] = r.irreducible;
  j["has_unit_circle_eigenvalue"] = r.has_unit_circle_eigenvalue;
  j["admits_discrete_purely_positive"] = r.admits_discrete_purely_positive;
  j["purely_positive_stable_word_length"] = to_string(r.purely_positive_stable_word_length);
  j["vanishes_on_lattice"] = to_string(r.vanishes_on_lattice);
  return j;
}

inline SpectralReport spectral_report_from_json(const Json& j) {
  try {
    SpectralReport r;
    if (!j.at("finite_order").is_null()) r.finite_order = j.at("finite_order").get<std::uint64_t>();
    r.diagonalizable = j.at("diagonalizable").get<bool>();
    r.irreducible = j.at("irreducible").get<bool>();
    r.has_unit_circle_eigenvalue = j.at("has_unit_circle_eigenvalue").get<bool>();
    r.admits_discrete_purely_positive = j.at("admits_discrete_purely_positive").get<bool>();
    r.purely_positive_stable_word_length =
        tristate_from_string(j.at("purely_positive_stable_word_length").get<std::string>());
    r.vanishes_on_lattice = tristate_from_string(j.at("vanishes_on_lattice").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed spectral report: ") + e.what());
  }
}

// ---- groups ----

inline Json ball_summary(const BallTable& b, const std::string& group) {
  Json j;
  j["schema"] = kSchema;
  j["group"] = group;
  j["radius"] = b.radius();
  j["size"] = b.size();
  j["sphere_sizes"] = b.sphere_sizes();
  return j;
}

// ---- lengths ----

inline Json to_json(const StableLengthEstimate& e) {
  Json j;
  j["element"] = to_json(e.element);
  j["evaluator"] = e.evaluator;
  j["k_max"] = e.k_max;
  Json samples = Json::array();
  for (const auto& s : e.samples)
    samples.push_back(Json{{"k", s.k}, {"value", to_json(s.value)}, {"ratio", to_json(s.ratio)},
                           {"infimum", to_json(s.infimum)}});
  j["samples"] = samples;
  j["infimum"] = e.samples.empty() ? Json(nullptr) : to_json(e.infimum());
  j["exact_limit"] = e.exact_limit ? to_json(*e.exact_limit) : Json(nullptr);
  j["subadditive"] = e.subadditive;
  if (e.subadditivity_violation)
    j["subadditivity_violation"] = {e.subadditivity_violation->first, e.subadditivity_violation->second};
  j["partial"] = e.partial;
  if (e.partial) j["partial_reason"] = e.partial_reason;
  return j;
}

/// k,value,ratio,infimum
inline void write_csv(std::ostream& out, const StableLengthEstimate& e) {
  out << "k,value,ratio,infimum\n";
  for (const auto& s : e.samples)
    out << s.k << "," << s.value.to_string() << "," << s.ratio.to_string() << "," << s.infimum.to_string() << "\n";
}

inline Json to_json(const Counterexample& c) {
  Json j;
  Json in = Json::array();
  for (const auto& g : c.inputs) in.push_back(to_json(g));
  j["inputs"] = in;
  if (c.n) j["n"] = *c.n;
  j["lhs"] = to_json(c.lhs);
  j["rhs"] = to_json(c.rhs);
  return j;
}

inline Json to_json(const AxiomVerdict& v) {
  Json j;
  j["axiom"] = v.axiom;
  j["relation"] = v.relation;
  j["passed"] = v.passed;
  j["samples"] = v.samples;
  j["failures"] = v.failures;
  j["skipped"] = v.skipped;
  Json cx = Json::array();
  for (const auto& c : v.counterexamples) cx.push_back(to_json(c));
  j["counterexamples"] = cx;
  return j;
}

inline Json to_json(const AxiomReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["evaluator"] = r.evaluator;
  j["domain"] = r.domain;
  j["exact"] = r.exact;
  j["tolerance"] = r.tolerance;
  j["seed"] = r.seed;
  j["passed"] = r.passed();
  j["axioms"] = Json::array({to_json(r.homogeneity), to_json(r.conjugation), to_json(r.commuting_subadditivity)});
  return j;
}

inline Json to_json(const SqrtBoundWitness& w) {
  Json j;
  j["K"] = to_json(w.k);
  j["C"] = to_json(w.c);
  j["verified"] = w.verified;
  j["checked_up_to"] = to_json(w.checked);
  j["first_failure"] = w.first_failure ? to_json(*w.first_failure) : Json(nullptr);
  return j;
}

inline Json to_json(const SeminormCheck& c) {
  Json j;
  j["samples"] = c.samples;
  j["invariance_passed"] = c.invariance_passed;
  j["max_invariance_error"] = c.max_invariance_error;
  j["invariance_tolerance"] = c.invariance_tolerance;
  j["positivity_passed"] = c.positivity_passed;
  j["min_value"] = c.min_value;
  j["positivity_threshold"] = c.positivity_threshold;
  return j;
}

inline Json to_json(const DominationReport& r) {
  Json j;
  j["evaluator"] = r.evaluator;
  j["K"] = to_json(r.k);
  j["precondition_passed"] = r.precondition_passed;
  if (!r.precondition_passed) {
    j["precondition_failure"] = r.precondition_failure;
    if (r.precondition_counterexample) j["precondition_counterexample"] = to_json(*r.precondition_counterexample);
  }
  j["bound_holds"] = r.bound_holds;
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"element", to_json(row.element)}, {"k", row.k}, {"ratio", to_json(row.ratio)},
                        {"bound", to_json(row.bound)}, {"holds", row.holds}});
  j["rows"] = rows;
  return j;
}

// ---- classify ----

inline Json to_json(const Verdict& v) {
  return Json{{"claim", v.claim}, {"lemma", v.lemma ? Json(*v.lemma) : Json(nullptr)}};
}

inline Json to_json(const Evidence& e) {
  Json j;
  j["level"] = to_string(e.level);
  if (e.level == EvidenceLevel::none) return j;
  j["k_max"] = e.options.k_max;
  j["threshold"] = e.options.threshold;
  Json est = Json::array();
  for (const auto& le : e.estimates) {
    Json x;
    x["basis"] = "e" + std::to_string(le.basis_index + 1);
    Json ratios = Json::array();
    for (const auto& s : le.estimate.samples) ratios.push_back(to_json(s.ratio));
    x["ratios"] = ratios;
    x["infimum"] = le.estimate.samples.empty() ? Json(nullptr) : to_json(le.estimate.infimum());
    x["partial"] = le.estimate.partial;
    est.push_back(x);
  }
  j["stable_length_estimates"] = est;
  j["consistent_with_verdict"] = e.consistent ? Json(*e.consistent) : Json(nullptr);
  if (e.level == EvidenceLevel::full) j["seminorm_on_basis"] = e.seminorm ? Json(*e.seminorm) : Json(nullptr);
  j["notes"] = e.notes;
  return j;
}

inline Json to_json(const ClassificationDossier& d) {
  Json j;
  j["schema"] = kSchema;
  j["matrix"] = to_json(d.matrix);
  j["report"] = to_json(d.report);
  Json v = Json::array();
  for (const auto& x : d.verdicts) v.push_back(to_json(x));
  j["verdicts"] = v;
  j["evidence"] = to_json(d.evidence);
  return j;
}

inline Json to_json(const BatchItem& b) {
  if (b.dossier) return to_json(*b.dossier);
  return Json{{"schema", kSchema}, {"error", *b.error}, {"kind", b.error_kind}};
}

}  // namespace lengrp::io
