// lengrp: batch front end for the length-function library.
//
// Exit codes: 0 success, 1 parse/usage, 2 precondition, 3 resource.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "lengrp/classify/dossier.hpp"
#include "lengrp/groups/cayley.hpp"
#include "lengrp/groups/parse.hpp"
#include "lengrp/io/json.hpp"
#include "lengrp/lengths/axioms.hpp"
#include "lengrp/lengths/heisenberg.hpp"
#include "lengrp/lengths/seminorm.hpp"
#include "lengrp/lengths/stable.hpp"

namespace {

using namespace lengrp;
using io::Json;

enum ExitCode { kOk = 0, kParse = 1, kPrecondition = 2, kResource = 3 };

struct RunConfig {
  std::string matrix;
  std::string element;
  std::string x, y, z;
  std::string format = "json";
  std::string length = "swl";
  std::string group = "heis";
  std::string out;
  std::string evidence = "none";
  std::size_t oracle_radius = 40;
  std::size_t radius = 6;
  std::int64_t k_max = 20;
  std::int64_t evidence_k_max = 12;
  std::size_t samples = 1000;
  std::uint64_t seed = 7;
  std::optional<std::size_t> memory_budget;
  std::optional<double> precision;
};

std::string trim(std::string s) {
  const auto ws = " \t\r\n";
  s.erase(s.find_last_not_of(ws) + 1);
  s.erase(0, s.find_first_not_of(ws));
  return s;
}

/// "-" reads stdin, an existing path reads the file, anything else is taken literally.
std::string read_source(const std::string& arg) {
  if (arg == "-") return trim(std::string(std::istreambuf_iterator<char>(std::cin), {}));
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw lengrp::ParseError("cannot read " + arg);
    return trim(std::string(std::istreambuf_iterator<char>(in), {}));
  }
  return trim(arg);
}

template <class T>
std::optional<T> env_value(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  std::istringstream in(raw);
  T v{};
  in >> v;
  if (!in || !in.eof() || !(v > 0)) throw lengrp::ParseError(std::string(name) + " must be a positive number");
  return v;
}

BfsOptions bfs_options(const RunConfig& cfg) {
  BfsOptions opt;
  if (cfg.memory_budget) opt.memory_budget = *cfg.memory_budget;
  return opt;
}

double tolerance(const RunConfig& cfg) { return cfg.precision.value_or(1e-9); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json with_schema(Json j) {
  Json out;
  out["schema"] = io::kSchema;
  for (auto& [k, v] : j.items())
    if (k != "schema") out[k] = v;
  return out;
}

int cmd_classify(const RunConfig& cfg) {
  const Json in = io::parse_json(read_source(cfg.matrix));
  const EvidenceLevel level = evidence_level_from_string(cfg.evidence);
  EvidenceOptions opt;
  opt.k_max = cfg.evidence_k_max;
  if (cfg.memory_budget) opt.memory_budget = *cfg.memory_budget;
  // An array of matrices is a batch; one item's failure does not stop the rest.
  if (in.is_array() && !in.empty() && in[0].is_array() && !in[0].empty() && in[0][0].is_array()) {
    std::vector<IntMatrix> ms;
    for (const auto& m : in) ms.push_back(io::matrix_from_json(m));
    Json arr = Json::array();
    for (const auto& item : batch_classify(ms, level, opt)) arr.push_back(io::to_json(item));
    emit(arr);
    return kOk;
  }
  emit(io::to_json(build_dossier(io::matrix_from_json(in), level, opt)));
  return kOk;
}

int cmd_wordlen(const RunConfig& cfg) {
  const HeisElem g{detail::parse_integer(cfg.x), detail::parse_integer(cfg.y), detail::parse_integer(cfg.z)};
  const auto r = HeisWordMetric(cfg.oracle_radius, 0, bfs_options(cfg)).length(g);
  if (cfg.format == "text") {
    std::cout << r.length.get_str() << " " << to_string(r.path) << "\n";
    return kOk;
  }
  Json j;
  j["schema"] = io::kSchema;
  j["element"] = io::to_json(coords_of(g));
  j["length"] = io::to_json(r.length);
  j["path"] = to_string(r.path);
  emit(j);
  return kOk;
}

int cmd_stable(const RunConfig& cfg) {
  const HeisElem g = parse_heis(read_source(cfg.element));
  const auto est = stable_length_estimate(HeisWordMetric(cfg.oracle_radius, 0, bfs_options(cfg)), g, cfg.k_max);
  if (cfg.format == "csv")
    io::write_csv(std::cout, est);
  else
    emit(with_schema(io::to_json(est)));
  return kOk;
}

int cmd_axioms(const RunConfig& cfg) {
  AxiomOptions opt;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.tolerance = tolerance(cfg);
  if (cfg.length == "uniteigen") {
    if (cfg.matrix.empty()) throw lengrp::ParseError("--length uniteigen needs --matrix");
    const IntMatrix a = io::parse_matrix(read_source(cfg.matrix));
    const auto l = unit_eigen_seminorm(a);
    Json j = io::to_json(check_axioms(l, opt));
    j["seminorm_check"] = io::to_json(check_seminorm(l, a, cfg.samples, cfg.seed, opt.tolerance));
    emit(j);
    return kOk;
  }
  std::optional<LengthEvaluator> l;
  if (cfg.length == "swl")
    l = swl_length();
  else if (cfg.length == "quadratic")
    l = quadratic_length_evaluator();
  else
    l = word_length_evaluator(HeisWordMetric(cfg.oracle_radius, 0, bfs_options(cfg)));
  emit(io::to_json(check_axioms(*l, opt)));
  return kOk;
}

int cmd_ball(const RunConfig& cfg) {
  std::optional<CayleyGroup> g;
  if (cfg.group == "heis") {
    g = CayleyGroup::heisenberg();
  } else {
    if (cfg.matrix.empty()) throw lengrp::ParseError("--group sdp needs --matrix");
    g = CayleyGroup::sdp(make_twist(io::parse_matrix(read_source(cfg.matrix))));
  }
  const BallTable b = bfs_ball(*g, cfg.radius, bfs_options(cfg));
  if (cfg.out == "-") {
    b.write_csv(std::cout);
    return kOk;
  }
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw lengrp::ParseError("cannot write " + cfg.out);
    b.write_csv(f);
  }
  Json j = io::ball_summary(b, g->name());
  if (!cfg.out.empty()) j["csv"] = cfg.out;
  emit(j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Length functions on Heisenberg and Z^n x_A Z groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--memory-budget", cfg.memory_budget, "BFS state budget (env LENGRP_MEMORY_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", cfg.precision, "tolerance for floating-point checks (env LENGRP_PRECISION)")
      ->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "classify Z^n x_A Z from A");
  classify->add_option("--matrix", cfg.matrix, "JSON matrix or array of matrices, a file, or - for stdin")
      ->required();
  classify->add_option("--evidence", cfg.evidence, "none | estimates | full")
      ->check(CLI::IsMember({"none", "estimates", "full"}));
  classify->add_option("--k-max", cfg.evidence_k_max, "powers sampled for evidence")->check(CLI::PositiveNumber);

  auto* wordlen = app.add_subcommand("wordlen", "word length of (x,y,z) in the Heisenberg group");
  wordlen->add_option("x", cfg.x)->required();
  wordlen->add_option("y", cfg.y)->required();
  wordlen->add_option("z", cfg.z)->required();
  wordlen->add_option("--oracle-radius", cfg.oracle_radius)->check(CLI::PositiveNumber);
  wordlen->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  auto* stable = app.add_subcommand("stable", "ratios d(g^k)/k for a Heisenberg element");
  stable->add_option("element", cfg.element, "\"x,y,z\", a file, or -")->required();
  stable->add_option("--k-max", cfg.k_max)->check(CLI::PositiveNumber);
  stable->add_option("--oracle-radius", cfg.oracle_radius)->check(CLI::PositiveNumber);
  stable->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));

  auto* axioms = app.add_subcommand("axioms", "property checks of the length-function axioms");
  axioms->add_option("--length", cfg.length)->check(CLI::IsMember({"swl", "quadratic", "wordlength", "uniteigen"}));
  axioms->add_option("--matrix", cfg.matrix, "matrix for uniteigen");
  axioms->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber);
  axioms->add_option("--seed", cfg.seed);
  axioms->add_option("--oracle-radius", cfg.oracle_radius)->check(CLI::PositiveNumber);

  auto* ball = app.add_subcommand("ball", "breadth-first ball of a Cayley graph");
  ball->add_option("--group", cfg.group)->check(CLI::IsMember({"heis", "sdp"}));
  ball->add_option("--matrix", cfg.matrix, "matrix for sdp");
  ball->add_option("--radius", cfg.radius);
  ball->add_option("--out", cfg.out, "CSV path, or - for stdout instead of the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kParse;
  }

  try {
    if (!cfg.memory_budget) cfg.memory_budget = env_value<std::size_t>("LENGRP_MEMORY_BUDGET");
    if (!cfg.precision) cfg.precision = env_value<double>("LENGRP_PRECISION");
    if (*classify) return cmd_classify(cfg);
    if (*wordlen) return cmd_wordlen(cfg);
    if (*stable) return cmd_stable(cfg);
    if (*axioms) return cmd_axioms(cfg);
    return cmd_ball(cfg);
  } catch (const lengrp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << " (completed radius " << e.completed_radius() << ")\n";
    return kResource;
  }
}
