#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sygus/term.hpp"

namespace sygus {

using Params = std::vector<std::pair<std::string, Sort>>;

// One grammar alternative is a term skeleton: a tree of applications and
// lets over literals, parameter references, nonterminal references, and
// the (Constant S) / (Variable S) leaf classes.
class GTerm;
using GTermPtr = std::shared_ptr<const GTerm>;

enum class GTermKind { Literal, Param, NonterminalRef, ConstantOfSort, VariableOfSort, Apply, Let };

class GTerm {
public:
  static GTermPtr literal(Value v);
  static GTermPtr param(std::string name);
  static GTermPtr nonterminal(std::string name);
  static GTermPtr constant_of(Sort s);
  static GTermPtr variable_of(Sort s);
  static GTermPtr apply(std::string op, std::vector<GTermPtr> children);
  static GTermPtr let(std::vector<std::pair<std::string, GTermPtr>> bindings, GTermPtr body);

  GTermKind kind() const { return kind_; }
  const Value& value() const { return value_; }
  const std::string& name() const { return name_; }  // param / nonterminal / op
  Sort sort() const { return sort_; }                // ConstantOfSort / VariableOfSort
  const std::vector<GTermPtr>& children() const { return children_; }
  const std::vector<std::string>& bound_names() const { return bound_; }
  const GTermPtr& body() const { return children_.back(); }

  bool operator==(const GTerm& other) const;

private:
  GTermKind kind_ = GTermKind::Literal;
  Value value_;
  std::string name_;
  Sort sort_;
  std::vector<GTermPtr> children_;
  std::vector<std::string> bound_;
};

struct Production {
  std::string nonterminal;
  Sort sort;
  std::vector<GTermPtr> alternatives;  // duplicates collapsed at construction
};

struct Grammar {
  std::string start;                   // first production's nonterminal
  std::vector<Production> productions;

  const Production* find(const std::string& nonterminal) const;
};

struct SynthFun {
  std::string name;
  Params params;
  Sort return_sort;
  std::optional<Grammar> grammar;      // nullopt = default grammar applies
  bool is_inv = false;                 // declared via synth-inv
};

struct DefinedFun {
  std::string name;
  Params params;
  Sort return_sort;
  TermPtr body;
};

// Symbolic (inv-constraint inv pre trans post), kept unexpanded until the
// verifier desugars it.
struct InvConstraint {
  std::string inv, pre, trans, post;
};

enum class ProblemKind { General, Invariant };

struct Problem {
  std::string logic;
  ProblemKind kind = ProblemKind::General;
  Params vars;          // declare-var order
  Params primed_vars;   // declare-primed-var order (x! names)
  std::vector<DefinedFun> defined_funs;
  std::vector<SynthFun> synth_funs;
  std::vector<TermPtr> constraints;
  std::vector<InvConstraint> inv_constraints;
  std::map<std::string, std::string> options;  // set-options pairs

  const SynthFun* find_synth_fun(const std::string& name) const;
  const DefinedFun* find_defined_fun(const std::string& name) const;
  std::optional<Sort> var_sort(const std::string& name) const;
};

// A solution for one synth-fun: a define-fun whose signature matches the
// target.  Parameter names are the candidate's own.
struct Candidate {
  std::string target;
  Params params;
  Sort return_sort;
  TermPtr body;
};

} // namespace sygus
