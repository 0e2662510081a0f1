#pragma once

#include "sygus/problem.hpp"
#include "sygus/sexpr.hpp"
#include "sygus/typecheck.hpp"

namespace sygus {

// Parse a SyGuS-IF v1 problem file.  Commands: set-logic, set-options,
// declare-var, declare-primed-var, define-fun, synth-fun, synth-inv,
// constraint, inv-constraint, check-synth.  Constraints are sort-checked;
// errors carry line/column spans.
Problem parse_problem(const std::string& text);
Problem parse_problem_file(const std::string& path);

// Parse solver output: one define-fun per synth-fun, matched by name
// (order-insensitive), with parameter sorts and return sort validated
// against the target signature.
std::vector<Candidate> parse_candidates(const std::string& text, const Problem& p);

// Parse a single term against an explicit environment (tests, REPL-ish use).
TermPtr parse_term(const SExpr& e, const SortEnv& env);

// Canonical text: round-trips through the parser; bit-vector literals
// print in #b form; strings quote with "" doubling.
std::string print_term(const TermPtr& t);
std::string print_candidate(const Candidate& c);

// The grammar used when a synth-fun/synth-inv omits one: the declared
// logic's operators over the parameters plus constants 0 and 1 (Int) and
// true/false (Bool).
Grammar default_grammar(const std::string& logic, const Params& params, Sort return_sort);

} // namespace sygus
