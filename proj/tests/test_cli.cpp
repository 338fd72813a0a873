#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "lengrp/io/json.hpp"

namespace {

using lengrp::io::Json;

struct CliRun {
  int code;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
CliRun run(const std::string& args, const std::string& prefix = "") {
  const std::string cmd = prefix + " '" LENGRP_CLI "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Json run_json(const std::string& args) {
  const CliRun r = run(args);
  EXPECT_EQ(r.code, 0) << args;
  return Json::parse(r.out);
}

const char* const kConner = "'[[0,0,0,-1],[1,0,0,2],[0,1,0,-1],[0,0,1,2]]'";

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lengrp_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, ClassifyConner) {
  const Json j = run_json(std::string("classify --matrix ") + kConner);
  EXPECT_EQ(j["schema"], "lengrp/1");
  EXPECT_EQ(j["report"]["purely_positive_stable_word_length"], "yes");
  EXPECT_EQ(j["verdicts"][1]["claim"], "purely positive (stable word length)");
}

TEST(Cli, ClassifyIdentity) {
  const Json j = run_json("classify --matrix '[[1,0],[0,1]]'");
  EXPECT_EQ(j["report"]["finite_order"], 1);
  EXPECT_EQ(j["verdicts"][0]["lemma"], "Lemma finite");
}

TEST(Cli, MatrixFromFileAndStdin) {
  const auto path = temp_file("m.json");
  std::ofstream(path) << "[[2,1],[1,1]]\n";
  const Json a = run_json("classify --matrix '" + path.string() + "'");
  EXPECT_EQ(a["report"]["vanishes_on_lattice"], "yes");
  const CliRun b = run("classify --matrix -", "echo '[[2,1],[1,1]]' |");
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(Json::parse(b.out), a);
  std::filesystem::remove(path);
}

TEST(Cli, Batch) {
  const Json j = run_json("classify --matrix '[[[1]],[[2,0],[0,1]],[[2,1],[1,1]]]'");
  ASSERT_EQ(j.size(), 3U);
  EXPECT_EQ(j[0]["report"]["finite_order"], 1);
  EXPECT_EQ(j[1]["kind"], "precondition");
  EXPECT_EQ(j[2]["report"]["vanishes_on_lattice"], "yes");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("classify --matrix '[[2,0],[0,1]]'").code, 2);
  EXPECT_EQ(run("classify --matrix '[[2,0],[0,1]'").code, 1);
  EXPECT_EQ(run("classify --matrix '[[1,2],[3]]'").code, 1);
  EXPECT_EQ(run("classify").code, 1);
  EXPECT_EQ(run("classify --matrix '[[1]]' --evidence lots").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("wordlen 1 two 3").code, 1);
  EXPECT_EQ(run("wordlen 1 2").code, 1);
  EXPECT_EQ(run("stable '1,1'").code, 1);
  EXPECT_EQ(run("axioms --length uniteigen").code, 1);
  EXPECT_EQ(run("axioms --length uniteigen --matrix '[[2,1],[1,1]]'").code, 2);
  EXPECT_EQ(run("axioms --length uniteigen --matrix '[[1,1],[0,1]]'").code, 2);
  EXPECT_EQ(run("ball --group sdp --matrix '[[3,1],[1,1]]'").code, 2);
  EXPECT_EQ(run("ball --group sdp").code, 1);
  EXPECT_EQ(run("ball --radius 8", "LENGRP_MEMORY_BUDGET=100").code, 3);
  EXPECT_EQ(run("ball --radius 8 --memory-budget 100").code, 3);
  EXPECT_EQ(run("ball --radius 2", "LENGRP_MEMORY_BUDGET=lots").code, 1);
  EXPECT_EQ(run("wordlen 40 0 -900 --oracle-radius 10").code, 3);
  EXPECT_EQ(run("stable '0,0,0' --help").code, 0);
}

TEST(Cli, Wordlen) {
  Json j = run_json("wordlen 0 0 16");
  EXPECT_EQ(j["length"], 16);
  EXPECT_EQ(j["path"], "formula");
  j = run_json("wordlen 0 0 0");
  EXPECT_EQ(j["length"], 0);
  // Not covered by the closed form; a ball of radius 4 holds it at length 3.
  j = run_json("wordlen 2 1 2");
  EXPECT_EQ(j["length"], 3);
  EXPECT_EQ(j["path"], "oracle");
  EXPECT_EQ(run("wordlen -3 1 -2 --format text").out, "4 formula\n");
}

TEST(Cli, Stable) {
  const Json j = run_json("stable '1,1,0' --k-max 20");
  ASSERT_EQ(j["samples"].size(), 20U);
  for (const auto& s : j["samples"]) EXPECT_EQ(s["ratio"], 2);
  EXPECT_EQ(j["exact_limit"], 2);
  const CliRun csv = run("stable '1,1,0' --k-max 3 --format csv");
  EXPECT_EQ(csv.out, "k,value,ratio,infimum\n1,2,2,2\n2,4,2,2\n3,6,2,2\n");
}

TEST(Cli, Axioms) {
  Json j = run_json("axioms --length swl --samples 1000 --seed 7");
  EXPECT_EQ(j["passed"], true);
  j = run_json("axioms --length quadratic --samples 200");
  EXPECT_EQ(j["passed"], true);
  j = run_json("axioms --length wordlength --samples 50");
  EXPECT_EQ(j["passed"], false);
  j = run_json(std::string("axioms --length uniteigen --samples 100 --matrix ") + kConner);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["seminorm_check"]["invariance_passed"], true);
  EXPECT_EQ(j["seminorm_check"]["positivity_passed"], true);
}

TEST(Cli, Ball) {
  const auto path = temp_file("ball.csv");
  const Json j = run_json("ball --group heis --radius 6 --out '" + path.string() + "'");
  EXPECT_EQ(j["sphere_sizes"], Json::parse("[1,4,12,36,82,164,294]"));
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "c1,c2,c3,length");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, j["size"].get<std::size_t>());
  std::filesystem::remove(path);
  const Json s = run_json("ball --group sdp --matrix '[[2,1],[1,1]]' --radius 3");
  EXPECT_EQ(s["group"], "sdp[[2,1],[1,1]]");
}

TEST(Cli, ByteIdenticalOutput) {
  for (const std::string& args : {std::string("classify --evidence full --matrix ") + kConner,
                                 std::string("axioms --length wordlength --samples 100 --seed 3"),
                                 std::string("axioms --length uniteigen --samples 50 --matrix ") + kConner,
                                 std::string("stable '2,1,3' --k-max 12"), std::string("ball --radius 5 --out -")}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}
