#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sygus/value.hpp"

namespace sygus {

class Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind { Literal, Var, Apply, Let };

// Immutable term tree.  Size and structural hash are computed once at
// construction; subtrees are shared freely.
class Term {
public:
  static TermPtr literal(Value v);
  static TermPtr var(std::string name);
  static TermPtr apply(std::string op, std::vector<TermPtr> args);
  static TermPtr let(std::vector<std::pair<std::string, TermPtr>> bindings, TermPtr body);

  TermKind kind() const { return kind_; }
  const Value& value() const { return value_; }            // Literal
  const std::string& name() const { return name_; }        // Var name / Apply op
  const std::vector<TermPtr>& args() const { return args_; }

  // Let accessors: bindings_[i] pairs with args_[i]; body is args_.back().
  const std::vector<std::string>& bound_names() const { return bound_; }
  std::size_t binding_count() const { return bound_.size(); }
  const TermPtr& binding_value(std::size_t i) const { return args_[i]; }
  const TermPtr& body() const { return args_.back(); }

  // Parse-tree node count.  Every operator, variable, and literal is one
  // node; a negative integer literal prints as (- k) and counts 2; a let
  // counts 1 + bindings + body.
  std::size_t size() const { return size_; }
  std::size_t hash() const { return hash_; }

private:
  friend bool structurally_equal(const Term& a, const Term& b);

  TermKind kind_;
  Value value_;
  std::string name_;
  std::vector<TermPtr> args_;
  std::vector<std::string> bound_;
  std::size_t size_ = 1;
  std::size_t hash_ = 0;
};

std::size_t term_size(const TermPtr& t);
bool structurally_equal(const Term& a, const Term& b);
bool structurally_equal(const TermPtr& a, const TermPtr& b);

// Free variables of t (let-bound names are excluded within their scope).
std::set<std::string> free_vars(const TermPtr& t);

// Hash/equality functors for structural containers of TermPtr.
struct TermPtrHash {
  std::size_t operator()(const TermPtr& t) const { return t->hash(); }
};
struct TermPtrEq {
  bool operator()(const TermPtr& a, const TermPtr& b) const {
    return structurally_equal(a, b);
  }
};

} // namespace sygus
