#include "sygus/grammar_engine.hpp"

#include <functional>
#include <stdexcept>

#include "sygus/parser.hpp"

namespace sygus {

// ----------------------------------------------------------- membership --

namespace {

struct DeriveCtx {
  const Grammar* g;
  const Params* params;
  // Tri-state memo: absent = unknown; an entry is written as false before
  // its computation starts, which cuts chain-rule cycles soundly (a true
  // derivation always has a finite proof that never revisits a pair).
  std::map<std::pair<std::string, const Term*>, bool> memo;

  bool from_nt(const std::string& nt, const TermPtr& t);
  bool match(const GTermPtr& alt, const TermPtr& t);
};

bool is_literal_of(const TermPtr& t, Sort s) {
  if (t->kind() == TermKind::Literal && t->value().sort() == s) return true;
  // The (- k) application spelling of a negative integer constant.
  if (s.is_int() && t->kind() == TermKind::Apply && t->name() == "-" && t->args().size() == 1) {
    const TermPtr& a = t->args()[0];
    return a->kind() == TermKind::Literal && a->value().sort().is_int() && a->value().as_int() > 0;
  }
  return false;
}

bool DeriveCtx::match(const GTermPtr& alt, const TermPtr& t) {
  switch (alt->kind()) {
    case GTermKind::Literal:
      return t->kind() == TermKind::Literal && t->value() == alt->value();
    case GTermKind::Param:
      return t->kind() == TermKind::Var && t->name() == alt->name();
    case GTermKind::NonterminalRef:
      return from_nt(alt->name(), t);
    case GTermKind::ConstantOfSort:
      return is_literal_of(t, alt->sort());
    case GTermKind::VariableOfSort: {
      if (t->kind() != TermKind::Var) return false;
      for (const auto& [name, sort] : *params)
        if (name == t->name()) return sort == alt->sort();
      return false;
    }
    case GTermKind::Apply: {
      if (t->kind() != TermKind::Apply || t->name() != alt->name()) return false;
      if (t->args().size() != alt->children().size()) return false;
      for (std::size_t i = 0; i < t->args().size(); i++)
        if (!match(alt->children()[i], t->args()[i])) return false;
      return true;
    }
    case GTermKind::Let: {
      if (t->kind() != TermKind::Let) return false;
      if (t->bound_names() != alt->bound_names()) return false;
      for (std::size_t i = 0; i < t->binding_count(); i++)
        if (!match(alt->children()[i], t->binding_value(i))) return false;
      return match(alt->body(), t->body());
    }
  }
  return false;
}

bool DeriveCtx::from_nt(const std::string& nt, const TermPtr& t) {
  auto key = std::make_pair(nt, t.get());
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  memo[key] = false;

  const Production* prod = g->find(nt);
  if (!prod) return false;
  for (const GTermPtr& alt : prod->alternatives) {
    if (match(alt, t)) {
      memo[key] = true;
      return true;
    }
  }
  return false;
}

} // namespace

bool derives(const Grammar& g, const Params& params, const std::string& nonterminal,
             const TermPtr& t) {
  DeriveCtx ctx{&g, &params, {}};
  return ctx.from_nt(nonterminal, t);
}

bool derives(const Grammar& g, const Params& params, const TermPtr& t) {
  return derives(g, params, g.start, t);
}

// ---------------------------------------------------------- enumeration --

namespace {

std::vector<TermPtr> constant_pool(Sort s) {
  switch (s.kind()) {
    case SortKind::Int:
      return {Term::literal(Value::of_int(0)), Term::literal(Value::of_int(1)),
              Term::literal(Value::of_int(2)), Term::literal(Value::of_int(-1))};
    case SortKind::BitVec: {
      BigInt ones = (BigInt(1) << s.width()) - 1;
      return {Term::literal(Value::of_bitvec(s.width(), 0)),
              Term::literal(Value::of_bitvec(s.width(), 1)),
              Term::literal(Value::of_bitvec(s.width(), ones))};
    }
    case SortKind::String:
      return {Term::literal(Value::of_string("")), Term::literal(Value::of_string("a"))};
    case SortKind::Bool:
      return {Term::literal(Value::of_bool(true)), Term::literal(Value::of_bool(false))};
  }
  return {};
}

} // namespace

TermEnumerator::TermEnumerator(Grammar g, Params params, std::string start, std::size_t max_size,
                               std::vector<Env> dedup_envs)
    : grammar_(std::move(g)),
      params_(std::move(params)),
      start_(std::move(start)),
      max_size_(max_size),
      dedup_envs_(std::move(dedup_envs)) {
  if (!grammar_.find(start_))
    throw std::invalid_argument("unknown nonterminal '" + start_ + "'");
  for (const Production& prod : grammar_.productions)
    cells_[prod.nonterminal].assign(max_size_ + 1, {});
}

bool TermEnumerator::admit(const std::string& nonterminal, const TermPtr& t) {
  auto& seen = seen_[nonterminal];
  if (!seen.insert("s:" + print_term(t)).second) return false;
  if (!dedup_envs_.empty()) {
    std::string key = "o:";
    for (const Env& env : dedup_envs_) {
      key += eval(t, env).to_text();
      key += '\x1f';
    }
    if (!seen.insert(std::move(key)).second) return false;
  }
  return true;
}

std::vector<TermPtr> TermEnumerator::expand(const GTermPtr& node, std::size_t exact_size) {
  std::vector<TermPtr> out;
  switch (node->kind()) {
    case GTermKind::Literal: {
      TermPtr t = Term::literal(node->value());
      if (t->size() == exact_size) out.push_back(std::move(t));
      return out;
    }
    case GTermKind::Param:
      if (exact_size == 1) out.push_back(Term::var(node->name()));
      return out;
    case GTermKind::NonterminalRef: {
      auto it = cells_.find(node->name());
      if (it != cells_.end() && exact_size < it->second.size()) return it->second[exact_size];
      return out;
    }
    case GTermKind::ConstantOfSort:
      for (TermPtr& c : constant_pool(node->sort()))
        if (c->size() == exact_size) out.push_back(std::move(c));
      return out;
    case GTermKind::VariableOfSort:
      if (exact_size == 1)
        for (const auto& [name, sort] : params_)
          if (sort == node->sort()) out.push_back(Term::var(name));
      return out;

    case GTermKind::Apply: {
      std::size_t k = node->children().size();
      if (k == 0) {
        if (exact_size == 1) out.push_back(Term::apply(node->name(), {}));
        return out;
      }
      if (exact_size < 1 + k) return out;
      std::size_t budget = exact_size - 1;

      std::vector<std::vector<TermPtr>> options(k);
      std::vector<std::size_t> comp(k);
      std::vector<TermPtr> args(k);

      std::function<void(std::size_t)> cartesian = [&](std::size_t i) {
        if (i == k) {
          out.push_back(Term::apply(node->name(), args));
          return;
        }
        for (const TermPtr& t : options[i]) {
          args[i] = t;
          cartesian(i + 1);
        }
      };
      std::function<void(std::size_t, std::size_t)> split = [&](std::size_t i,
                                                                std::size_t remaining) {
        if (i + 1 == k) {
          comp[i] = remaining;
          for (std::size_t j = 0; j < k; j++) {
            options[j] = expand(node->children()[j], comp[j]);
            if (options[j].empty()) return;
          }
          cartesian(0);
          return;
        }
        for (std::size_t c = 1; c + (k - i - 1) <= remaining; c++) {
          comp[i] = c;
          split(i + 1, remaining - c);
        }
      };
      split(0, budget);
      return out;
    }

    case GTermKind::Let:
      return out;  // let-producing grammars are out of enumeration scope
  }
  return out;
}

void TermEnumerator::fill_size(std::size_t size) {
  // Chain rules (a bare nonterminal reference as an alternative) can feed
  // same-size terms across nonterminals, so iterate to a fixed point.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Production& prod : grammar_.productions) {
      for (const GTermPtr& alt : prod.alternatives) {
        for (TermPtr& t : expand(alt, size)) {
          if (admit(prod.nonterminal, t)) {
            cells_[prod.nonterminal][size].push_back(std::move(t));
            changed = true;
          }
        }
      }
    }
  }
}

std::optional<TermPtr> TermEnumerator::next() {
  while (true) {
    if (current_size_ >= 1 && current_size_ <= max_size_) {
      const auto& buffer = cells_[start_][current_size_];
      if (buffer_pos_ < buffer.size()) {
        yielded_++;
        return buffer[buffer_pos_++];
      }
    }
    if (current_size_ >= max_size_) return std::nullopt;
    current_size_++;
    buffer_pos_ = 0;
    fill_size(current_size_);
  }
}

std::vector<TermPtr> enumerate_terms(const Grammar& g, const Params& params,
                                     std::size_t max_size) {
  TermEnumerator e(g, params, g.start, max_size);
  std::vector<TermPtr> out;
  while (auto t = e.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<TermPtr> enumerate_distinct(const Grammar& g, const Params& params,
                                        std::size_t max_size, const std::vector<Env>& dedup_envs) {
  TermEnumerator e(g, params, g.start, max_size, dedup_envs);
  std::vector<TermPtr> out;
  while (auto t = e.next()) out.push_back(std::move(*t));
  return out;
}

} // namespace sygus
