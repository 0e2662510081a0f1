#pragma once

#include <map>

#include "sygus/problem.hpp"

namespace sygus {

// Evaluation environment: variable values plus the problem's defined
// functions (applied by name during evaluation).
struct Env {
  std::map<std::string, Value> vars;
  const std::vector<DefinedFun>* defined_funs = nullptr;

  static Env of(std::map<std::string, Value> vars) { return Env{std::move(vars), nullptr}; }
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Big-step evaluation of a closed-under-env, well-sorted term.  All theory
// functions are total: Int div/mod are Euclidean with div/mod-by-zero
// yielding 0, bit-vector ops wrap mod 2^width (bvudiv by zero = all ones,
// bvurem by zero = the dividend), and string ops follow SMT-LIB
// totalization (str.at out of range = "", str.to.int of a non-numeral = -1,
// int.to.str of a negative = "").
Value eval(const TermPtr& t, const Env& env);

// True when every constraint of p holds at `point` once the candidates are
// substituted for their synth-funs.  Invariant problems must be desugared
// before calling this.
bool holds_at(const Problem& p, const std::vector<Candidate>& cands, const Env& point);

} // namespace sygus
