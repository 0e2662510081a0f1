#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "support.hpp"
#include "sygus/grammar_engine.hpp"

using namespace sygus;

namespace {

// Start ::= 0 | 1 | (+ Start Start)
Grammar tiny_sum() {
  Grammar g;
  g.start = "Start";
  Production prod;
  prod.nonterminal = "Start";
  prod.sort = Sort::integer();
  prod.alternatives = {
      GTerm::literal(Value::of_int(0)),
      GTerm::literal(Value::of_int(1)),
      GTerm::apply("+", {GTerm::nonterminal("Start"), GTerm::nonterminal("Start")}),
  };
  g.productions = {prod};
  return g;
}

TermPtr parse1(const std::string& text) {
  SortEnv env;
  env.vars["x"] = Sort::integer();
  return parse_term(read_sexprs(text)[0], env);
}

} // namespace

TEST_CASE("derives accepts exactly the grammar's shapes") {
  Grammar g = tiny_sum();
  CHECK(derives(g, {}, parse1("(+ 0 1)")));
  CHECK(derives(g, {}, parse1("(+ (+ 1 1) 0)")));
  CHECK_FALSE(derives(g, {}, parse1("(- 0 1)")));
  CHECK_FALSE(derives(g, {}, parse1("x")));
  CHECK_FALSE(derives(g, {}, parse1("2")));
}

TEST_CASE("enumerate yields the derivable set in size order") {
  Grammar g = tiny_sum();

  auto size1 = enumerate_terms(g, {}, 1);
  REQUIRE(size1.size() == 2);
  CHECK(print_term(size1[0]) == "0");
  CHECK(print_term(size1[1]) == "1");

  // Size exactly 3: (+ a b) for a, b in {0, 1}.
  auto size3 = enumerate_terms(g, {}, 3);
  CHECK(size3.size() == 2 + 4);

  // Sizes 1, 3, 5 contribute 2 + 4 + 8 = 14 terms.
  auto size5 = enumerate_terms(g, {}, 5);
  CHECK(size5.size() == 14);

  std::size_t prev = 0;
  for (const TermPtr& t : size5) {
    CHECK(t->size() >= prev);
    CHECK(derives(g, {}, t));  // soundness
    prev = t->size();
  }
}

TEST_CASE("enumerate agrees with the naive oracle on the tiny grammar") {
  Grammar g = tiny_sum();
  testutil::NaiveSets oracle = testutil::naive_derivable(g, {}, 7);
  auto got = enumerate_terms(g, {}, 7);
  REQUIRE(got.size() == oracle.terms.size());
  std::unordered_set<std::string> printed;
  for (const TermPtr& t : got) printed.insert(print_term(t));
  CHECK(printed == oracle.printed);
}

TEST_CASE("derives matches naive membership over the term universe") {
  Grammar g = tiny_sum();
  Params params{{"x", Sort::integer()}};
  testutil::NaiveSets oracle = testutil::naive_derivable(g, params, 7);
  for (const TermPtr& t : testutil::term_universe(g, params, 7))
    CHECK(derives(g, params, t) == oracle.contains(t));
}

TEST_CASE("observational dedup suppresses value-equal terms") {
  // Start ::= x | 0 | 1 | (+ Start Start)
  Grammar g = tiny_sum();
  Production& prod = g.productions[0];
  prod.alternatives.insert(prod.alternatives.begin(), GTerm::param("x"));
  Params params{{"x", Sort::integer()}};

  // On the single point x=0, the terms x and 0 agree; the later one loses.
  auto on_zero = enumerate_distinct(g, params, 1, {Env::of({{"x", Value::of_int(0)}})});
  REQUIRE(on_zero.size() == 2);
  CHECK(print_term(on_zero[0]) == "x");
  CHECK(print_term(on_zero[1]) == "1");

  // No dedup points: identical to plain enumeration.
  auto plain = enumerate_terms(g, params, 5);
  auto nodedup = enumerate_distinct(g, params, 5, {});
  REQUIRE(plain.size() == nodedup.size());
  for (std::size_t i = 0; i < plain.size(); i++)
    CHECK(structurally_equal(plain[i], nodedup[i]));

  // Two points: no two survivors share a value vector (exhaustive to size 5).
  std::vector<Env> points{Env::of({{"x", Value::of_int(0)}}),
                          Env::of({{"x", Value::of_int(1)}})};
  std::set<std::pair<std::string, std::string>> vectors;
  for (const TermPtr& t : enumerate_distinct(g, params, 5, points)) {
    auto vec = std::make_pair(eval(t, points[0]).to_text(), eval(t, points[1]).to_text());
    CHECK(vectors.insert(vec).second);
  }
}

TEST_CASE("constant leaf classes match any literal of the sort") {
  Grammar g;
  g.start = "Start";
  Production prod;
  prod.nonterminal = "Start";
  prod.sort = Sort::integer();
  prod.alternatives = {GTerm::constant_of(Sort::integer())};
  g.productions = {prod};

  CHECK(derives(g, {}, Term::literal(Value::of_int(7))));
  CHECK(derives(g, {}, Term::literal(Value::of_int(-5))));
  // The two-node (- 5) application spelling of the same value.
  CHECK(derives(g, {}, Term::apply("-", {Term::literal(Value::of_int(5))})));
  CHECK_FALSE(derives(g, {}, Term::literal(Value::of_string("a"))));
  CHECK_FALSE(derives(g, {}, Term::var("x")));
}

TEST_CASE("variable leaf classes match parameters of the sort only") {
  Grammar g;
  g.start = "Start";
  Production prod;
  prod.nonterminal = "Start";
  prod.sort = Sort::integer();
  prod.alternatives = {GTerm::variable_of(Sort::integer())};
  g.productions = {prod};
  Params params{{"x", Sort::integer()}, {"s", Sort::string()}};

  CHECK(derives(g, params, Term::var("x")));
  CHECK_FALSE(derives(g, params, Term::var("s")));
  CHECK_FALSE(derives(g, params, Term::var("y")));

  auto vars = enumerate_terms(g, params, 3);
  REQUIRE(vars.size() == 1);
  CHECK(print_term(vars[0]) == "x");
}

TEST_CASE("chain rules settle within one size level") {
  // A ::= B; B ::= 0 | (+ A B)
  Grammar g;
  g.start = "A";
  Production a{"A", Sort::integer(), {GTerm::nonterminal("B")}};
  Production b{"B", Sort::integer(),
               {GTerm::literal(Value::of_int(0)),
                GTerm::apply("+", {GTerm::nonterminal("A"), GTerm::nonterminal("B")})}};
  g.productions = {a, b};

  auto got = enumerate_terms(g, {}, 3);
  REQUIRE(got.size() == 2);
  CHECK(print_term(got[0]) == "0");
  CHECK(print_term(got[1]) == "(+ 0 0)");
  CHECK(derives(g, {}, parse1("(+ (+ 0 0) 0)")));

  testutil::NaiveSets oracle = testutil::naive_derivable(g, {}, 7);
  auto full = enumerate_terms(g, {}, 7);
  CHECK(full.size() == oracle.terms.size());
}

TEST_CASE("let skeletons match let terms structurally") {
  Problem p = parse_problem(
      "(set-logic LIA)"
      "(synth-fun f ((x Int)) Int"
      "  ((Start Int (x 1 (let ((t Int Start)) (+ t t))))))"
      "(declare-var x Int)"
      "(constraint (>= (f x) 0))"
      "(check-synth)");
  const Grammar& g = *p.synth_funs[0].grammar;
  const Params& params = p.synth_funs[0].params;

  SortEnv env;
  env.vars["x"] = Sort::integer();
  TermPtr good = parse_term(read_sexprs("(let ((t x)) (+ t t))")[0], env);
  TermPtr wrong_name = parse_term(read_sexprs("(let ((u x)) (+ u u))")[0], env);
  TermPtr wrong_body = parse_term(read_sexprs("(let ((t x)) (+ t 1))")[0], env);
  CHECK(derives(g, params, good));
  CHECK_FALSE(derives(g, params, wrong_name));
  CHECK_FALSE(derives(g, params, wrong_body));
}

TEST_CASE("enumerator rejects unknown start nonterminals") {
  Grammar g = tiny_sum();
  CHECK_THROWS_AS(TermEnumerator(g, {}, "Nope", 3), std::invalid_argument);
}

TEST_CASE("desk-benchmark grammars enumerate without duplicates") {
  for (const char* name : {"max2", "bv_double", "str_append_excl"}) {
    Problem p = parse_problem_file(testutil::benchmark_path(name));
    const SynthFun& f = p.synth_funs[0];
    std::unordered_set<std::string> seen;
    for (const TermPtr& t : enumerate_terms(*f.grammar, f.params, 5)) {
      CHECK(seen.insert(print_term(t)).second);
      CHECK(derives(*f.grammar, f.params, t));
    }
  }
}
