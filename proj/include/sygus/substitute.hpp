#pragma once

#include "sygus/problem.hpp"

namespace sygus {

// Replace every application of cand.target in phi by cand's body with the
// formal parameters bound to the actual arguments.  Capture-avoiding:
// let-bound names in the body are renamed with a fresh #k suffix when they
// would capture a free variable of an argument.  Innermost applications are
// rewritten first, so nested calls like (f (f x)) expand fully.
TermPtr substitute(const TermPtr& phi, const Candidate& cand);

// Simultaneous substitution of free variables by terms (used for parameter
// binding and defined-function inlining); capture-avoiding in the same way.
TermPtr substitute_vars(const TermPtr& t, const std::map<std::string, TermPtr>& mapping);

// Inline every defined function application in t, innermost-first.
TermPtr inline_defined_funs(const TermPtr& t, const std::vector<DefinedFun>& funs);

} // namespace sygus
