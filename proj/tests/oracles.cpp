#include "oracles.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "sygus/parser.hpp"

using namespace sygus;

namespace testutil {

std::size_t naive_term_size(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Literal:
      if (t->value().sort().is_int() && t->value().as_int() < 0) return 2;
      return 1;
    case TermKind::Var:
      return 1;
    case TermKind::Apply: {
      std::size_t n = 1;
      for (const TermPtr& a : t->args()) n += naive_term_size(a);
      return n;
    }
    case TermKind::Let: {
      std::size_t n = 1;
      for (std::size_t i = 0; i < t->binding_count(); i++)
        n += naive_term_size(t->binding_value(i));
      return n + naive_term_size(t->body());
    }
  }
  return 1;
}

bool NaiveSets::contains(const TermPtr& t) const {
  return printed.count(print_term(t)) != 0;
}

namespace {

// All ways to split `total` across `parts` positive summands.
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& prefix,
                  const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (parts == 1) {
    if (total >= 1) {
      prefix.push_back(total);
      emit(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (std::size_t first = 1; first + (parts - 1) <= total; first++) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, emit);
    prefix.pop_back();
  }
}

using Cells = std::map<std::string, std::vector<std::vector<TermPtr>>>;

// Terms an alternative skeleton produces at exactly `size`, reading
// nonterminal sets from the cells built so far.
std::vector<TermPtr> expand_alt(const GTermPtr& alt, std::size_t size, const Params& params,
                                const Cells& cells) {
  std::vector<TermPtr> out;
  switch (alt->kind()) {
    case GTermKind::Literal: {
      TermPtr t = Term::literal(alt->value());
      if (naive_term_size(t) == size) out.push_back(std::move(t));
      return out;
    }
    case GTermKind::Param:
      if (size == 1) out.push_back(Term::var(alt->name()));
      return out;
    case GTermKind::NonterminalRef: {
      auto it = cells.find(alt->name());
      if (it != cells.end() && size < it->second.size()) return it->second[size];
      return out;
    }
    case GTermKind::VariableOfSort:
      if (size == 1)
        for (const auto& [name, sort] : params)
          if (sort == alt->sort()) out.push_back(Term::var(name));
      return out;
    case GTermKind::Apply: {
      std::size_t arity = alt->children().size();
      if (arity == 0) {
        if (size == 1) out.push_back(Term::apply(alt->name(), {}));
        return out;
      }
      if (size < 1 + arity) return out;
      std::vector<std::size_t> prefix;
      compositions(size - 1, arity, prefix, [&](const std::vector<std::size_t>& split) {
        // Cartesian product of the children's term sets at these sizes.
        std::vector<std::vector<TermPtr>> pools;
        for (std::size_t i = 0; i < arity; i++) {
          pools.push_back(expand_alt(alt->children()[i], split[i], params, cells));
          if (pools.back().empty()) return;
        }
        std::vector<std::size_t> idx(arity, 0);
        while (true) {
          std::vector<TermPtr> args;
          for (std::size_t i = 0; i < arity; i++) args.push_back(pools[i][idx[i]]);
          out.push_back(Term::apply(alt->name(), std::move(args)));
          std::size_t i = arity;
          while (i > 0 && ++idx[i - 1] == pools[i - 1].size()) idx[--i] = 0;
          if (i == 0) break;
        }
      });
      return out;
    }
    case GTermKind::ConstantOfSort:
    case GTermKind::Let:
      throw std::logic_error("naive generator: unsupported grammar feature");
  }
  return out;
}

} // namespace

NaiveSets naive_derivable(const Grammar& g, const Params& params, std::size_t max_size) {
  Cells cells;
  std::map<std::string, std::unordered_set<std::string>> seen;
  for (const Production& prod : g.productions)
    cells[prod.nonterminal].assign(max_size + 1, {});

  for (std::size_t size = 1; size <= max_size; size++) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Production& prod : g.productions) {
        for (const GTermPtr& alt : prod.alternatives) {
          for (TermPtr& t : expand_alt(alt, size, params, cells)) {
            if (seen[prod.nonterminal].insert(print_term(t)).second) {
              cells[prod.nonterminal][size].push_back(std::move(t));
              changed = true;
            }
          }
        }
      }
    }
  }

  NaiveSets sets;
  for (std::size_t size = 1; size <= max_size; size++)
    for (const TermPtr& t : cells[g.start][size]) {
      sets.printed.insert(print_term(t));
      sets.terms.push_back(t);
    }
  return sets;
}

namespace {

void harvest(const GTermPtr& alt, const Params& params, std::vector<TermPtr>& leaves,
             std::vector<std::pair<std::string, std::size_t>>& ops,
             std::unordered_set<std::string>& seen) {
  switch (alt->kind()) {
    case GTermKind::Literal:
      if (seen.insert("l:" + alt->value().to_text()).second)
        leaves.push_back(Term::literal(alt->value()));
      return;
    case GTermKind::Param:
      if (seen.insert("v:" + alt->name()).second) leaves.push_back(Term::var(alt->name()));
      return;
    case GTermKind::VariableOfSort:
      for (const auto& [name, sort] : params)
        if (sort == alt->sort() && seen.insert("v:" + name).second)
          leaves.push_back(Term::var(name));
      return;
    case GTermKind::Apply:
      if (seen.insert("o:" + alt->name() + "/" + std::to_string(alt->children().size())).second)
        ops.emplace_back(alt->name(), alt->children().size());
      for (const GTermPtr& child : alt->children()) harvest(child, params, leaves, ops, seen);
      return;
    case GTermKind::NonterminalRef:
    case GTermKind::ConstantOfSort:
    case GTermKind::Let:
      return;
  }
}

} // namespace

std::vector<TermPtr> term_universe(const Grammar& g, const Params& params, std::size_t max_size) {
  std::vector<TermPtr> leaves;
  std::vector<std::pair<std::string, std::size_t>> ops;
  std::unordered_set<std::string> seen;
  for (const Production& prod : g.productions)
    for (const GTermPtr& alt : prod.alternatives) harvest(alt, params, leaves, ops, seen);

  std::vector<std::vector<TermPtr>> by_size(max_size + 1);
  for (const TermPtr& leaf : leaves) {
    std::size_t s = naive_term_size(leaf);
    if (s <= max_size) by_size[s].push_back(leaf);
  }
  for (std::size_t size = 2; size <= max_size; size++) {
    for (const auto& [op, arity] : ops) {
      if (arity == 0 || size < 1 + arity) continue;
      std::vector<std::size_t> prefix;
      compositions(size - 1, arity, prefix, [&](const std::vector<std::size_t>& split) {
        std::vector<std::size_t> idx(arity, 0);
        for (std::size_t i = 0; i < arity; i++)
          if (by_size[split[i]].empty()) return;
        while (true) {
          std::vector<TermPtr> args;
          for (std::size_t i = 0; i < arity; i++) args.push_back(by_size[split[i]][idx[i]]);
          by_size[size].push_back(Term::apply(op, std::move(args)));
          std::size_t i = arity;
          while (i > 0 && ++idx[i - 1] == by_size[split[i - 1]].size()) idx[--i] = 0;
          if (i == 0) break;
        }
      });
    }
  }

  std::vector<TermPtr> universe;
  for (std::size_t size = 1; size <= max_size; size++)
    for (const TermPtr& t : by_size[size]) universe.push_back(t);
  return universe;
}

} // namespace testutil
