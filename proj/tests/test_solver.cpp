#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "sygus/solver.hpp"

using namespace sygus;

namespace {

TermPtr ilit(long long k) { return Term::literal(Value::of_int(k)); }

// Two points, two terms: term 0 covers only point 0, term 1 only point 1.
CoverMatrix split_matrix() {
  CoverMatrix m;
  m.point_count = 2;
  m.terms = {ilit(0), Term::var("x")};
  m.covers = {{true, false}, {false, true}};
  return m;
}

SolveResult solve_text(const std::string& text, const Budget& budget = Budget{}) {
  Problem p = parse_problem(text);
  return solve(p, budget, testutil::session());
}

void check_round_trips(const Problem& p, const SolveResult& res) {
  REQUIRE(res.kind == SolveResult::Kind::Solved);
  REQUIRE(res.candidates.size() == 1);
  std::string text = print_candidate(res.candidates[0]);
  Verdict v = check_solution(p, text, testutil::session());
  CHECK(v.kind == Verdict::Kind::Valid);
}

} // namespace

TEST_CASE("flatten turns decision trees into nested ites") {
  TermPtr p = Term::apply("<=", {Term::var("x"), ilit(0)});
  TermPtr q = Term::apply("=", {Term::var("x"), ilit(1)});

  DecisionTree leaf = DecisionTree::leaf(Term::var("x"));
  CHECK(leaf.is_leaf());
  CHECK(print_term(flatten(leaf)) == "x");

  DecisionTree tree = DecisionTree::node(
      p, DecisionTree::leaf(ilit(0)),
      DecisionTree::node(q, DecisionTree::leaf(ilit(1)), DecisionTree::leaf(Term::var("x"))));
  TermPtr flat = flatten(tree);
  CHECK(print_term(flat) == "(ite (<= x 0) 0 (ite (= x 1) 1 x))");
  CHECK(flat->size() == testutil::naive_term_size(flat));
}

TEST_CASE("learn_tree returns a leaf when one term covers everything") {
  CoverMatrix m;
  m.point_count = 2;
  m.terms = {Term::var("x"), ilit(0)};
  m.covers = {{true, true}, {true, false}};

  DecisionTree t = learn_tree(m, {});
  REQUIRE(t.is_leaf());
  CHECK(print_term(t.term()) == "x");
}

TEST_CASE("learn_tree splits on a separating predicate") {
  CoverMatrix m = split_matrix();
  PredRow row{Term::apply("<=", {Term::var("x"), ilit(0)}), {true, false}};

  DecisionTree t = learn_tree(m, {row});
  REQUIRE_FALSE(t.is_leaf());
  CHECK(print_term(t.pred()) == "(<= x 0)");
  REQUIRE(t.then_branch().is_leaf());
  REQUIRE(t.else_branch().is_leaf());
  CHECK(print_term(t.then_branch().term()) == "0");
  CHECK(print_term(t.else_branch().term()) == "x");
}

TEST_CASE("equal information gain prefers the smaller predicate") {
  CoverMatrix m = split_matrix();
  std::vector<PredRow> preds = {
      {Term::apply("<=", {Term::var("x"), ilit(0)}), {true, false}},
      {Term::var("b"), {true, false}},
  };

  DecisionTree t = learn_tree(m, preds);
  REQUIRE_FALSE(t.is_leaf());
  CHECK(print_term(t.pred()) == "b");
}

TEST_CASE("learn_tree reports unsplittable point sets") {
  CoverMatrix m = split_matrix();
  CHECK_THROWS_AS(learn_tree(m, {}), NoSeparator);

  // A constant-truth predicate does not split anything.
  PredRow constant{Term::var("b"), {true, true}};
  CHECK_THROWS_AS(learn_tree(m, {constant}), NoSeparator);
}

TEST_CASE("learn_tree rejects uncovered points") {
  CoverMatrix m;
  m.point_count = 2;
  m.terms = {ilit(0)};
  m.covers = {{true, false}};
  CHECK_THROWS_AS(learn_tree(m, {}), std::invalid_argument);
}

TEST_CASE("solve finds a PBE sum") {
  Problem p = parse_problem(
      "(set-logic LIA)"
      "(synth-fun f ((x Int)) Int ((Start Int (x 0 1 (+ Start Start)))))"
      "(constraint (= (f 1) 2))"
      "(constraint (= (f 5) 6))"
      "(check-synth)");
  SolveResult res = solve(p, Budget{}, testutil::session());
  check_round_trips(p, res);
  CHECK(res.candidates[0].body->size() == 3);
  CHECK(res.stats.rounds >= 1);
  CHECK(res.stats.terms_enumerated >= 1);
  CHECK(res.stats.progress_ok);
}

TEST_CASE("solve unifies branching targets") {
  Problem p = parse_problem_file(testutil::benchmark_path("max2"));
  SolveResult res = solve(p, Budget{}, testutil::session());
  check_round_trips(p, res);

  CHECK(res.stats.progress_ok);
  CHECK(res.stats.rounds <= Budget{}.max_rounds);
  CHECK(res.stats.points + 1 >= res.stats.rounds);
  REQUIRE_FALSE(res.stats.round_log.empty());
  for (const std::string& line : res.stats.round_log) {
    CHECK(line.find("round ") == 0);
    CHECK(line.find("->") != std::string::npos);
  }
}

TEST_CASE("solve handles predicates beyond <= and =") {
  Problem p = parse_problem_file(testutil::benchmark_path("abs"));
  SolveResult res = solve(p, Budget{}, testutil::session());
  check_round_trips(p, res);
}

TEST_CASE("solve handles nested self-application") {
  Problem p = parse_problem_file(testutil::benchmark_path("plus1_compose"));
  SolveResult res = solve(p, Budget{}, testutil::session());
  check_round_trips(p, res);
  CHECK(print_term(res.candidates[0].body) == "(+ z 1)");
}

TEST_CASE("solve reports exhaustion honestly") {
  SolveResult res = solve_text(
      "(set-logic LIA)"
      "(synth-fun f ((x Int)) Int ((Start Int (0))))"
      "(declare-var x Int)"
      "(constraint (= (f x) x))"
      "(check-synth)");
  CHECK(res.kind == SolveResult::Kind::Exhausted);
  CHECK(res.candidates.empty());
}

TEST_CASE("solve times out on a zero budget") {
  Budget b;
  b.wall_seconds = 0;
  Problem p = parse_problem_file(testutil::benchmark_path("max2"));
  SolveResult res = solve(p, b, testutil::session());
  CHECK(res.kind == SolveResult::Kind::TimedOut);
}

TEST_CASE("solve rejects multi-function problems") {
  Problem p = parse_problem(
      "(set-logic LIA)"
      "(synth-fun f ((x Int)) Int ((Start Int (x 0 1))))"
      "(synth-fun g ((x Int)) Int ((Start Int (x 0 1))))"
      "(constraint (= (f 0) (g 0)))"
      "(check-synth)");
  CHECK_THROWS_AS(solve(p, Budget{}, testutil::session()), std::invalid_argument);
}
