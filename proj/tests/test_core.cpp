#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "sygus/substitute.hpp"
#include "sygus/typecheck.hpp"

using namespace sygus;

namespace {

TermPtr ivar(const char* n) { return Term::var(n); }
TermPtr ilit(long v) { return Term::literal(Value::of_int(v)); }

} // namespace

TEST_CASE("sorts print in both spellings") {
  CHECK(Sort::integer().to_sygus() == "Int");
  CHECK(Sort::bitvec(8).to_sygus() == "(BitVec 8)");
  CHECK(Sort::bitvec(8).to_smt2() == "(_ BitVec 8)");
  CHECK(Sort::string().to_sygus() == "String");
  CHECK(Sort::boolean() == Sort::boolean());
  CHECK(Sort::bitvec(4) != Sort::bitvec(8));
}

TEST_CASE("values keep sort, width, and literal syntax") {
  CHECK(Value::of_int(5).to_text() == "5");
  CHECK(Value::of_int(-5).to_text() == "(- 5)");
  CHECK(Value::of_bool(true).to_text() == "true");
  CHECK(Value::of_bitvec(4, 5).to_text() == "#b0101");
  CHECK(Value::of_string("ab\"cd").to_text() == "\"ab\"\"cd\"");
  CHECK(Value::of_bitvec(8, 255).as_bits() == 255);
  CHECK(Value::of_bitvec(8, 256).as_bits() == 0);  // reduced mod 2^width
  CHECK(Value::of_string("x").sort().is_string());
}

TEST_CASE("term sizes count parse-tree nodes") {
  CHECK(ivar("x")->size() == 1);
  CHECK(Term::apply("+", {ivar("x"), ilit(1)})->size() == 3);

  TermPtr ite = Term::apply(
      "ite", {Term::apply(">=", {ivar("x"), ivar("y")}), ivar("x"), ivar("y")});
  CHECK(ite->size() == 6);
  CHECK(ite->size() == testutil::naive_term_size(ite));

  // A negative integer literal prints as (- k): two nodes.
  CHECK(ilit(-5)->size() == 2);
  CHECK(Term::apply("+", {ilit(-5), ilit(1)})->size() == 4);

  TermPtr let = Term::let({{"t", Term::apply("+", {ivar("x"), ilit(1)})}},
                          Term::apply("*", {ivar("t"), ivar("t")}));
  CHECK(let->size() == 1 + 3 + 3);
  CHECK(let->size() == testutil::naive_term_size(let));
}

TEST_CASE("term size is strictly monotone under adding a child") {
  TermPtr base = Term::apply("+", {ivar("x"), ilit(1)});
  TermPtr grown = Term::apply("+", {base, ilit(0)});
  CHECK(grown->size() > base->size());
  for (const TermPtr& arg : grown->args()) CHECK(grown->size() > arg->size());
}

TEST_CASE("structural equality ignores sharing, catches differences") {
  TermPtr a = Term::apply("+", {ivar("x"), ilit(1)});
  TermPtr b = Term::apply("+", {Term::var("x"), Term::literal(Value::of_int(1))});
  CHECK(structurally_equal(a, b));
  CHECK(a->hash() == b->hash());
  CHECK_FALSE(structurally_equal(a, Term::apply("+", {ivar("x"), ilit(2)})));
  CHECK_FALSE(structurally_equal(a, Term::apply("-", {ivar("x"), ilit(1)})));
  CHECK_FALSE(structurally_equal(ivar("x"), ilit(1)));
}

TEST_CASE("free variables respect let scoping") {
  CHECK(free_vars(Term::apply("+", {ivar("x"), ivar("y")})) ==
        std::set<std::string>{"x", "y"});
  // (let ((x (+ y 1))) (+ x z)): x is bound, y and z are free.
  TermPtr let = Term::let({{"x", Term::apply("+", {ivar("y"), ilit(1)})}},
                          Term::apply("+", {ivar("x"), ivar("z")}));
  CHECK(free_vars(let) == std::set<std::string>{"y", "z"});
}

TEST_CASE("substitute replaces target applications by the bound body") {
  Candidate f{"f", {{"z", Sort::integer()}}, Sort::integer(),
              Term::apply("+", {ivar("z"), ilit(1)})};

  TermPtr phi = Term::apply(">=", {Term::apply("f", {ivar("x")}), ivar("x")});
  CHECK(print_term(substitute(phi, f)) == "(>= (+ x 1) x)");

  // No occurrence: unchanged.
  TermPtr untouched = Term::apply("+", {ivar("x"), ilit(1)});
  CHECK(print_term(substitute(untouched, f)) == print_term(untouched));

  // Nested self-application expands innermost-first.
  TermPtr nested = Term::apply("=", {Term::apply("f", {Term::apply("f", {ilit(0)})}), ilit(2)});
  CHECK(print_term(substitute(nested, f)) == "(= (+ (+ 0 1) 1) 2)");
}

TEST_CASE("substitute is idempotent when the body avoids the target name") {
  Candidate f{"f", {{"z", Sort::integer()}}, Sort::integer(),
              Term::apply("+", {ivar("z"), ilit(1)})};
  TermPtr phi = Term::apply(">=", {Term::apply("f", {ivar("x")}), ivar("x")});
  TermPtr once = substitute(phi, f);
  CHECK(print_term(substitute(once, f)) == print_term(once));
}

TEST_CASE("substitute binds parameters capture-avoidingly") {
  // f(z) = (let ((x 1)) (+ x z)); f(x) must not capture the argument x.
  TermPtr body = Term::let({{"x", ilit(1)}}, Term::apply("+", {ivar("x"), ivar("z")}));
  Candidate f{"f", {{"z", Sort::integer()}}, Sort::integer(), body};
  TermPtr phi = Term::apply("f", {ivar("x")});
  TermPtr got = substitute(phi, f);

  Env env;
  env.vars["x"] = Value::of_int(10);
  CHECK(eval(got, env).as_int() == 11);  // captured would give 2
}

TEST_CASE("well_sorted computes sorts and names offenders") {
  SortEnv env;
  env.vars["x"] = Sort::integer();
  env.vars["b"] = Sort::boolean();
  env.vars["u"] = Sort::bitvec(8);
  env.vars["v"] = Sort::bitvec(8);

  CHECK(well_sorted(Term::apply("+", {ivar("x"), ilit(1)}), env) == Sort::integer());
  CHECK(well_sorted(Term::apply("bvadd", {ivar("u"), ivar("v")}), env) == Sort::bitvec(8));
  CHECK(well_sorted(Term::apply("<=", {ivar("x"), ilit(0)}), env) == Sort::boolean());

  // ite branches of different sorts.
  TermPtr bad = Term::apply("ite", {ivar("b"), ilit(1), Term::literal(Value::of_string("a"))});
  CHECK_THROWS_AS(well_sorted(bad, env), SortCheckError);
  try {
    well_sorted(bad, env);
  } catch (const SortCheckError& e) {
    CHECK(structurally_equal(e.offending, bad));
  }

  CHECK_THROWS_AS(well_sorted(ivar("nope"), env), SortCheckError);
  CHECK_THROWS_AS(well_sorted(Term::apply("bvadd", {ivar("u"), ilit(1)}), env), SortCheckError);
}

TEST_CASE("known_operator covers the shipped theories") {
  CHECK(known_operator("+"));
  CHECK(known_operator("bvlshr"));
  CHECK(known_operator("str.indexof"));
  CHECK_FALSE(known_operator("frobnicate"));
}
