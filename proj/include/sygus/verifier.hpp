#pragma once

#include "sygus/smt.hpp"

namespace sygus {

struct Verdict {
  enum class Kind { Valid, Invalid, Unknown, SyntacticReject, IllFormed };
  Kind kind = Kind::Unknown;
  Env counterexample;   // Invalid: assigns every declared (and primed) var
  std::string detail;   // reject/unknown/ill-formed explanation
};

std::string verdict_name(Verdict::Kind k);

// Expand every inv-constraint into the three induction constraints over
// the state variables (pre => inv, inv /\ trans => inv', inv => post).
// The result is a General problem; state vars missing from declare-var /
// declare-primed-var are declared implicitly from the invariant signature.
Problem desugar_inv(const Problem& p);

// Semantic check: substitute the candidates, inline defined functions, and
// ask the backend whether some point falsifies a constraint.  Valid on
// unsat; Invalid carries a full counterexample (machine-checked against
// holds_at); Unknown on solver timeout/unknown.
Verdict verify(const Problem& p, const std::vector<Candidate>& cands, SmtSession& smt);

// Competition-style two-stage check of raw solver output: parse (IllFormed
// on failure), grammar membership per synth-fun (SyntacticReject), then
// verify.
Verdict check_solution(const Problem& p, const std::string& solver_output, SmtSession& smt);

// The SMT logic a problem's queries are issued under.
std::string smt_logic_for(const Problem& p);

} // namespace sygus
