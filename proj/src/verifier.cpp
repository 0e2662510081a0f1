#include "sygus/verifier.hpp"

#include "sygus/grammar_engine.hpp"
#include "sygus/parser.hpp"
#include "sygus/substitute.hpp"

namespace sygus {

std::string verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Valid: return "valid";
    case Verdict::Kind::Invalid: return "invalid";
    case Verdict::Kind::Unknown: return "unknown";
    case Verdict::Kind::SyntacticReject: return "syntactic-reject";
    case Verdict::Kind::IllFormed: return "ill-formed";
  }
  return "unknown";
}

std::string smt_logic_for(const Problem& p) {
  if (p.logic == "SLIA") return "QF_SLIA";
  if (!p.logic.empty()) return p.logic;
  return p.kind == ProblemKind::Invariant ? "LIA" : "";
}

namespace {

Value default_value(Sort s) {
  switch (s.kind()) {
    case SortKind::Bool: return Value::of_bool(false);
    case SortKind::Int: return Value::of_int(0);
    case SortKind::BitVec: return Value::of_bitvec(s.width(), 0);
    case SortKind::String: return Value::of_string("");
  }
  return Value::of_bool(false);
}

TermPtr apply_over_state(const std::string& fun, const Params& state, bool primed) {
  std::vector<TermPtr> args;
  for (const auto& [name, sort] : state) args.push_back(Term::var(primed ? name + "!" : name));
  return Term::apply(fun, std::move(args));
}

void require_signature(const DefinedFun* f, const Params& state, std::size_t copies,
                       const std::string& role) {
  if (f->return_sort != Sort::boolean())
    throw std::runtime_error("inv-constraint " + role + " '" + f->name + "' must return Bool");
  if (f->params.size() != state.size() * copies)
    throw std::runtime_error("inv-constraint " + role + " '" + f->name +
                             "' has the wrong arity for the invariant's state");
  for (std::size_t i = 0; i < f->params.size(); i++)
    if (f->params[i].second != state[i % state.size()].second)
      throw std::runtime_error("inv-constraint " + role + " '" + f->name +
                               "' parameter sorts do not match the invariant's state");
}

} // namespace

Problem desugar_inv(const Problem& p) {
  if (p.inv_constraints.empty()) return p;

  Problem q = p;
  q.inv_constraints.clear();
  q.kind = ProblemKind::General;

  for (const InvConstraint& ic : p.inv_constraints) {
    const SynthFun* inv = p.find_synth_fun(ic.inv);
    const DefinedFun* pre = p.find_defined_fun(ic.pre);
    const DefinedFun* trans = p.find_defined_fun(ic.trans);
    const DefinedFun* post = p.find_defined_fun(ic.post);
    if (!inv || !pre || !trans || !post)
      throw std::runtime_error("inv-constraint references an unknown function");
    const Params& state = inv->params;
    require_signature(pre, state, 1, "precondition");
    require_signature(trans, state, 2, "transition");
    require_signature(post, state, 1, "postcondition");

    // State variables come from the invariant's signature; declare any the
    // file left implicit.
    for (const auto& [name, sort] : state) {
      if (!q.var_sort(name)) q.vars.emplace_back(name, sort);
      if (!q.var_sort(name + "!")) q.primed_vars.emplace_back(name + "!", sort);
    }

    TermPtr inv_x = apply_over_state(ic.inv, state, false);
    TermPtr inv_x2 = apply_over_state(ic.inv, state, true);
    TermPtr pre_x = apply_over_state(ic.pre, state, false);
    TermPtr post_x = apply_over_state(ic.post, state, false);
    std::vector<TermPtr> trans_args;
    for (const auto& [name, sort] : state) trans_args.push_back(Term::var(name));
    for (const auto& [name, sort] : state) trans_args.push_back(Term::var(name + "!"));
    TermPtr trans_xx2 = Term::apply(ic.trans, std::move(trans_args));

    q.constraints.push_back(Term::apply("=>", {pre_x, inv_x}));
    q.constraints.push_back(
        Term::apply("=>", {Term::apply("and", {inv_x, trans_xx2}), inv_x2}));
    q.constraints.push_back(Term::apply("=>", {inv_x, post_x}));
  }
  return q;
}

Verdict verify(const Problem& original, const std::vector<Candidate>& cands, SmtSession& smt) {
  const Problem p = original.inv_constraints.empty() ? original : desugar_inv(original);
  Verdict v;
  if (p.constraints.empty()) {
    v.kind = Verdict::Kind::Valid;
    return v;
  }

  TermPtr phi =
      p.constraints.size() == 1 ? p.constraints[0] : Term::apply("and", p.constraints);
  for (const Candidate& c : cands) phi = substitute(phi, c);
  phi = inline_defined_funs(phi, p.defined_funs);

  Params decls = p.vars;
  decls.insert(decls.end(), p.primed_vars.begin(), p.primed_vars.end());

  SmtResult r = smt.check(smt_logic_for(original), decls, phi, /*negate=*/true);
  switch (r.kind) {
    case SmtResult::Kind::Unsat:
      v.kind = Verdict::Kind::Valid;
      return v;

    case SmtResult::Kind::Unknown:
      v.kind = Verdict::Kind::Unknown;
      v.detail = r.reason;
      return v;

    case SmtResult::Kind::Sat: {
      Env point;
      for (const auto& [name, sort] : decls) {
        auto it = r.model.find(name);
        point.vars.emplace(name, it != r.model.end() ? it->second : default_value(sort));
      }
      // Every Invalid must carry a counterexample our own evaluator agrees
      // falsifies the constraints; disagreement means the point is useless.
      bool falsifies = false;
      try {
        falsifies = !holds_at(p, cands, point);
      } catch (const EvalError& e) {
        v.kind = Verdict::Kind::Unknown;
        v.detail = std::string("cannot evaluate backend counterexample: ") + e.what();
        return v;
      }
      if (!falsifies) {
        v.kind = Verdict::Kind::Unknown;
        v.detail = "backend counterexample does not falsify the constraints locally";
        return v;
      }
      v.kind = Verdict::Kind::Invalid;
      v.counterexample = point;
      return v;
    }
  }
  return v;
}

Verdict check_solution(const Problem& p, const std::string& solver_output, SmtSession& smt) {
  std::vector<Candidate> cands;
  try {
    cands = parse_candidates(solver_output, p);
  } catch (const ParseError& e) {
    return Verdict{Verdict::Kind::IllFormed, {}, e.what()};
  }

  // Stage 1: grammar membership, checked before any semantics.
  for (const Candidate& c : cands) {
    const SynthFun* f = p.find_synth_fun(c.target);
    Grammar g = f->grammar ? *f->grammar : default_grammar(p.logic, f->params, f->return_sort);
    if (!derives(g, f->params, c.body))
      return Verdict{Verdict::Kind::SyntacticReject, {},
                     c.target + ": " + print_term(c.body) + " is not derivable from the grammar"};
  }

  // Stage 2: SMT validity.
  try {
    return verify(p, cands, smt);
  } catch (const SmtError&) {
    throw;  // backend failure is an error, not a verdict
  } catch (const std::runtime_error& e) {
    return Verdict{Verdict::Kind::IllFormed, {}, e.what()};
  }
}

} // namespace sygus
