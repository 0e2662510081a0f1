#include "sygus/problem.hpp"

namespace sygus {

GTermPtr GTerm::literal(Value v) {
  auto g = std::make_shared<GTerm>();
  g->kind_ = GTermKind::Literal;
  g->value_ = std::move(v);
  return g;
}

GTermPtr GTerm::param(std::string name) {
  auto g = std::make_shared<GTerm>();
  g->kind_ = GTermKind::Param;
  g->name_ = std::move(name);
  return g;
}

GTermPtr GTerm::nonterminal(std::string name) {
  auto g = std::make_shared<GTerm>();
  g->kind_ = GTermKind::NonterminalRef;
  g->name_ = std::move(name);
  return g;
}

GTermPtr GTerm::constant_of(Sort s) {
  auto g = std::make_shared<GTerm>();
  g->kind_ = GTermKind::ConstantOfSort;
  g->sort_ = s;
  return g;
}

GTermPtr GTerm::variable_of(Sort s) {
  auto g = std::make_shared<GTerm>();
  g->kind_ = GTermKind::VariableOfSort;
  g->sort_ = s;
  return g;
}

GTermPtr GTerm::apply(std::string op, std::vector<GTermPtr> children) {
  auto g = std::make_shared<GTerm>();
  g->kind_ = GTermKind::Apply;
  g->name_ = std::move(op);
  g->children_ = std::move(children);
  return g;
}

GTermPtr GTerm::let(std::vector<std::pair<std::string, GTermPtr>> bindings, GTermPtr body) {
  auto g = std::make_shared<GTerm>();
  g->kind_ = GTermKind::Let;
  for (auto& [name, value] : bindings) {
    g->bound_.push_back(name);
    g->children_.push_back(std::move(value));
  }
  g->children_.push_back(std::move(body));
  return g;
}

bool GTerm::operator==(const GTerm& other) const {
  if (kind_ != other.kind_ || name_ != other.name_ || sort_ != other.sort_ ||
      bound_ != other.bound_ || children_.size() != other.children_.size())
    return false;
  if (kind_ == GTermKind::Literal && !(value_ == other.value_)) return false;
  for (std::size_t i = 0; i < children_.size(); i++)
    if (!(*children_[i] == *other.children_[i])) return false;
  return true;
}

const Production* Grammar::find(const std::string& nonterminal) const {
  for (const auto& p : productions)
    if (p.nonterminal == nonterminal) return &p;
  return nullptr;
}

const SynthFun* Problem::find_synth_fun(const std::string& name) const {
  for (const auto& f : synth_funs)
    if (f.name == name) return &f;
  return nullptr;
}

const DefinedFun* Problem::find_defined_fun(const std::string& name) const {
  for (const auto& f : defined_funs)
    if (f.name == name) return &f;
  return nullptr;
}

std::optional<Sort> Problem::var_sort(const std::string& name) const {
  for (const auto& [n, s] : vars)
    if (n == name) return s;
  for (const auto& [n, s] : primed_vars)
    if (n == name) return s;
  return std::nullopt;
}

} // namespace sygus
