#pragma once

#include <map>
#include <stdexcept>

#include "sygus/problem.hpp"

namespace sygus {

struct FunSig {
  std::vector<Sort> param_sorts;
  Sort return_sort;
};

// Sorting context: free variable sorts plus applicable function signatures
// (defined funs and synth-funs alike).
struct SortEnv {
  std::map<std::string, Sort> vars;
  std::map<std::string, FunSig> funs;

  static SortEnv for_problem(const Problem& p);
};

struct SortCheckError : std::runtime_error {
  SortCheckError(const std::string& message, TermPtr offending_term);
  TermPtr offending;  // the subterm that failed
};

// Returns the sort of t, or throws SortCheckError naming the offending
// subterm.  Unknown identifiers and unsupported operators are hard errors.
Sort well_sorted(const TermPtr& t, const SortEnv& env);

// True when `op` is a known theory operator (any overload).
bool known_operator(const std::string& op);

} // namespace sygus
