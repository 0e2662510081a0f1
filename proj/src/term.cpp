#include "sygus/term.hpp"

#include <stdexcept>

namespace sygus {

namespace {

std::size_t combine(std::size_t seed, std::size_t h) {
  return seed ^ (h + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::size_t hash_string(const std::string& s) {
  return std::hash<std::string>()(s);
}

} // namespace

std::size_t Value::hash() const {
  switch (sort().kind()) {
    case SortKind::Bool: return as_bool() ? 0x9e37u : 0x79b9u;
    case SortKind::Int: return hash_string(as_int().str());
    case SortKind::BitVec: return combine(bv_width(), hash_string(as_bits().str()));
    case SortKind::String: return combine(0x5u, hash_string(as_string()));
  }
  return 0;
}

Value Value::of_bitvec(unsigned width, BigInt bits) {
  if (width == 0) throw std::invalid_argument("bit-vector width must be positive");
  BigInt modulus = BigInt(1) << width;
  bits %= modulus;
  if (bits < 0) bits += modulus;
  return Value(Bv{width, std::move(bits)});
}

Sort Value::sort() const {
  switch (data_.index()) {
    case 0: return Sort::boolean();
    case 1: return Sort::integer();
    case 2: return Sort::bitvec(std::get<Bv>(data_).width);
    default: return Sort::string();
  }
}

std::string Value::to_text() const {
  switch (sort().kind()) {
    case SortKind::Bool:
      return as_bool() ? "true" : "false";
    case SortKind::Int: {
      const BigInt& v = as_int();
      if (v < 0) return "(- " + BigInt(-v).str() + ")";
      return v.str();
    }
    case SortKind::BitVec: {
      std::string bits(bv_width(), '0');
      for (unsigned i = 0; i < bv_width(); i++)
        if (bit_test(as_bits(), i)) bits[bv_width() - 1 - i] = '1';
      return "#b" + bits;
    }
    case SortKind::String:
      return quote_string_literal(as_string());
  }
  return "";
}

std::string quote_string_literal(const std::string& raw) {
  std::string out = "\"";
  for (char c : raw) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string Sort::to_sygus() const {
  switch (kind_) {
    case SortKind::Bool: return "Bool";
    case SortKind::Int: return "Int";
    case SortKind::BitVec: return "(BitVec " + std::to_string(width_) + ")";
    case SortKind::String: return "String";
  }
  return "";
}

std::string Sort::to_smt2() const {
  if (kind_ == SortKind::BitVec) return "(_ BitVec " + std::to_string(width_) + ")";
  return to_sygus();
}

TermPtr Term::literal(Value v) {
  auto t = std::make_shared<Term>();
  t->kind_ = TermKind::Literal;
  // A negative integer literal prints as (- k): two parse-tree nodes.
  t->size_ = (v.sort().is_int() && v.as_int() < 0) ? 2 : 1;
  t->hash_ = combine(0x11u, v.hash());
  t->value_ = std::move(v);
  return t;
}

TermPtr Term::var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind_ = TermKind::Var;
  t->name_ = std::move(name);
  t->size_ = 1;
  t->hash_ = combine(0x22u, hash_string(t->name_));
  return t;
}

TermPtr Term::apply(std::string op, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind_ = TermKind::Apply;
  t->name_ = std::move(op);
  t->args_ = std::move(args);
  std::size_t size = 1, h = combine(0x33u, hash_string(t->name_));
  for (const auto& a : t->args_) {
    size += a->size();
    h = combine(h, a->hash());
  }
  t->size_ = size;
  t->hash_ = h;
  return t;
}

TermPtr Term::let(std::vector<std::pair<std::string, TermPtr>> bindings, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind_ = TermKind::Let;
  std::size_t size = 1, h = 0x44u;
  for (auto& [name, value] : bindings) {
    t->bound_.push_back(name);
    size += value->size();
    h = combine(combine(h, hash_string(name)), value->hash());
    t->args_.push_back(std::move(value));
  }
  size += body->size();
  h = combine(h, body->hash());
  t->args_.push_back(std::move(body));
  t->size_ = size;
  t->hash_ = h;
  return t;
}

std::size_t term_size(const TermPtr& t) { return t->size(); }

bool structurally_equal(const Term& a, const Term& b) {
  if (&a == &b) return true;
  if (a.kind_ != b.kind_ || a.hash_ != b.hash_ || a.size_ != b.size_) return false;
  switch (a.kind_) {
    case TermKind::Literal:
      return a.value_ == b.value_;
    case TermKind::Var:
      return a.name_ == b.name_;
    case TermKind::Apply:
    case TermKind::Let:
      if (a.name_ != b.name_ || a.bound_ != b.bound_) return false;
      if (a.args_.size() != b.args_.size()) return false;
      for (std::size_t i = 0; i < a.args_.size(); i++)
        if (!structurally_equal(*a.args_[i], *b.args_[i])) return false;
      return true;
  }
  return false;
}

bool structurally_equal(const TermPtr& a, const TermPtr& b) {
  return structurally_equal(*a, *b);
}

namespace {

void collect_free(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::Literal:
      return;
    case TermKind::Var:
      if (!bound.count(t->name())) out.insert(t->name());
      return;
    case TermKind::Apply:
      for (const auto& a : t->args()) collect_free(a, bound, out);
      return;
    case TermKind::Let: {
      for (std::size_t i = 0; i < t->binding_count(); i++)
        collect_free(t->binding_value(i), bound, out);
      std::vector<std::string> added;
      for (const auto& name : t->bound_names())
        if (bound.insert(name).second) added.push_back(name);
      collect_free(t->body(), bound, out);
      for (const auto& name : added) bound.erase(name);
      return;
    }
  }
}

} // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

} // namespace sygus
