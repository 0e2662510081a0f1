#include <doctest.h>

#include <filesystem>

#include "support.hpp"
#include "sygus/harness.hpp"
#include "sygus/subprocess.hpp"

using namespace sygus;

#ifndef SYGUS_CLI_PATH
#error "the build must define SYGUS_CLI_PATH"
#endif

namespace {

RunOutput run_cli(std::vector<std::string> args, double wall = 120) {
  args.insert(args.begin(), SYGUS_CLI_PATH);
  return run_with_limits(args, wall);
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

std::string records_path(const std::string& name) {
  return (testutil::fixture_dir() / "records" / name).string();
}

} // namespace

TEST_CASE("parse dumps a normalized problem that re-parses") {
  RunOutput out = run_cli({"parse", testutil::benchmark_path("max2")});
  CHECK(out.exit_code == 0);
  CHECK(out.stdout_text.find("(synth-fun max2") != std::string::npos);
  CHECK(out.stdout_text.find("(check-synth)") != std::string::npos);

  Problem reparsed = parse_problem(out.stdout_text);
  CHECK(reparsed.constraints.size() == 3);
  CHECK(reparsed.synth_funs.size() == 1);
}

TEST_CASE("parse fails with exit 1 on an ill-formed benchmark") {
  auto dir = testutil::fresh_dir("cliparse");
  std::string path = (dir / "broken.sl").string();
  testutil::write_file(path, "(set-logic LIA\n");
  RunOutput out = run_cli({"parse", path});
  CHECK(out.exit_code == 1);
  CHECK(out.stdout_text.empty());
  std::filesystem::remove_all(dir);
}

TEST_CASE("check prints one verdict word first") {
  const std::string bench = testutil::benchmark_path("max2");

  RunOutput good = run_cli({"check", bench, testutil::solution_path("max2", "good")});
  CHECK(good.exit_code == 0);
  CHECK(good.stdout_text == "valid\n");

  RunOutput bad = run_cli({"check", bench, testutil::solution_path("max2", "mut_branch")});
  CHECK(bad.exit_code == 1);
  CHECK(first_line(bad.stdout_text) == "invalid");
  // Second line is the counterexample binding every declared variable.
  std::string cex = bad.stdout_text.substr(bad.stdout_text.find('\n') + 1);
  CHECK(cex.find("(x ") != std::string::npos);
  CHECK(cex.find("(y ") != std::string::npos);

  RunOutput oog = run_cli({"check", bench, testutil::solution_path("max2", "mut_oog")});
  CHECK(oog.exit_code == 1);
  CHECK(first_line(oog.stdout_text) == "syntactic-reject");

  auto dir = testutil::fresh_dir("clicheck");
  std::string junk = (dir / "junk.sol").string();
  testutil::write_file(junk, "(define-fun\n");
  RunOutput ill = run_cli({"check", bench, junk});
  CHECK(ill.exit_code == 1);
  CHECK(first_line(ill.stdout_text) == "ill-formed");
  std::filesystem::remove_all(dir);
}

TEST_CASE("solve emits a define-fun that checks out") {
  const std::string bench = testutil::benchmark_path("max2");
  RunOutput out = run_cli({"solve", bench});
  REQUIRE(out.exit_code == 0);
  CHECK(out.stdout_text.find("(define-fun max2") == 0);

  Problem p = parse_problem_file(bench);
  Verdict v = check_solution(p, out.stdout_text, testutil::session());
  CHECK(v.kind == Verdict::Kind::Valid);
}

TEST_CASE("solve exits 1 when the grammar cannot express a solution") {
  auto dir = testutil::fresh_dir("clisolve");
  std::string path = (dir / "hopeless.sl").string();
  testutil::write_file(path,
                       "(set-logic LIA)\n"
                       "(synth-fun f ((x Int)) Int ((Start Int (0))))\n"
                       "(declare-var x Int)\n"
                       "(constraint (= (f x) x))\n"
                       "(check-synth)\n");
  RunOutput out = run_cli({"solve", path});
  CHECK(out.exit_code == 1);
  CHECK(out.stdout_text.empty());
  std::filesystem::remove_all(dir);
}

TEST_CASE("score reproduces the general-track totals") {
  RunOutput out = run_cli({"score", records_path("general_track.jsonl"), "--format", "csv"});
  REQUIRE(out.exit_code == 0);
  CHECK(out.stdout_text ==
        "solver_id,n,f,s,unique,score\n"
        "cvc4_2018,448,366,448,12,3786\n"
        "eusolver_2017,420,266,420,9,3318\n"
        "cvc4_2017,398,252,398,0,3144\n");

  RunOutput text = run_cli({"score", records_path("general_track.jsonl")});
  CHECK(text.exit_code == 0);
  CHECK(text.stdout_text.find("448") != std::string::npos);
  CHECK(text.stdout_text.find("cvc4_2018") != std::string::npos);
}

TEST_CASE("report writes its files under --out") {
  auto dir = testutil::fresh_dir("clireport");
  RunOutput out = run_cli({"report", records_path("clia.jsonl"), "--categories",
                           records_path("clia_categories.csv"), "--out", dir.string()});
  REQUIRE(out.exit_code == 0);
  CHECK(std::filesystem::exists(dir / "category_table.txt"));
  CHECK(std::filesystem::exists(dir / "category_table.csv"));
  CHECK(std::filesystem::exists(dir / "details.csv"));
  CHECK(std::filesystem::exists(dir / "charts.svg"));

  std::string csv = testutil::read_file((dir / "category_table.csv").string());
  CHECK(csv.find("CLIA,cvc4_2018,85,74,1\n") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("run drives a suite from a config file") {
  auto dir = testutil::fresh_dir("clirun");
  std::string stub = (testutil::fixture_dir() / "stub" / "solve_max2.sh").string();
  std::string conf = (dir / "run.conf").string();
  testutil::write_file(conf, "benchmark = " + testutil::benchmark_path("max2") + "\n" +
                                 "solver = good /bin/sh " + stub + " {benchmark}\n" +
                                 "out = " + (dir / "out").string() + "\n");

  RunOutput out = run_cli({"run", conf});
  REQUIRE(out.exit_code == 0);

  auto records = load_records((dir / "out" / "records.jsonl").string());
  REQUIRE(records.size() == 1);
  CHECK(records[0].solver_id == "good");
  CHECK(records[0].benchmark_id == "max2");
  CHECK(records[0].status == RunStatus::Solved);

  // stdout carries the same records as JSON lines.
  std::string echoed = (dir / "echo.jsonl").string();
  testutil::write_file(echoed, out.stdout_text);
  CHECK(load_records(echoed).size() == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"score"}).exit_code == 2);
  CHECK(run_cli({"frobnicate"}).exit_code == 2);
  CHECK(run_cli({"score", records_path("clia.jsonl"), "--format", "yaml"}).exit_code == 2);
}

TEST_CASE("domain failures exit 1") {
  CHECK(run_cli({"score", "/nonexistent/records.jsonl"}).exit_code == 1);
  CHECK(run_cli({"parse", "/nonexistent/nope.sl"}).exit_code == 1);
}
