#include "sygus/typecheck.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace sygus {

SortCheckError::SortCheckError(const std::string& message, TermPtr offending_term)
    : std::runtime_error(message), offending(std::move(offending_term)) {}

SortEnv SortEnv::for_problem(const Problem& p) {
  SortEnv env;
  for (const auto& [name, sort] : p.vars) env.vars[name] = sort;
  for (const auto& [name, sort] : p.primed_vars) env.vars[name] = sort;
  for (const auto& f : p.defined_funs) {
    FunSig sig;
    for (const auto& [pn, ps] : f.params) sig.param_sorts.push_back(ps);
    sig.return_sort = f.return_sort;
    env.funs[f.name] = sig;
  }
  for (const auto& f : p.synth_funs) {
    FunSig sig;
    for (const auto& [pn, ps] : f.params) sig.param_sorts.push_back(ps);
    sig.return_sort = f.return_sort;
    env.funs[f.name] = sig;
  }
  return env;
}

namespace {

bool all_of_sort(const std::vector<Sort>& args, SortKind kind) {
  return std::all_of(args.begin(), args.end(),
                     [kind](const Sort& s) { return s.kind() == kind; });
}

bool all_equal(const std::vector<Sort>& args) {
  return std::all_of(args.begin(), args.end(),
                     [&](const Sort& s) { return s == args[0]; });
}

// Core, Ints, FixedSizeBitVectors, and Strings operator signatures.
std::optional<Sort> apply_sort(const std::string& op, const std::vector<Sort>& args) {
  std::size_t n = args.size();

  if (op == "not" && n == 1 && args[0].is_bool()) return Sort::boolean();
  if ((op == "and" || op == "or" || op == "xor" || op == "=>") && n >= 2 &&
      all_of_sort(args, SortKind::Bool))
    return Sort::boolean();
  if ((op == "=" || op == "distinct") && n >= 2 && all_equal(args)) return Sort::boolean();
  if (op == "ite" && n == 3 && args[0].is_bool() && args[1] == args[2]) return args[1];

  if ((op == "+" || op == "*") && n >= 2 && all_of_sort(args, SortKind::Int))
    return Sort::integer();
  if (op == "-" && (n == 1 || n >= 2) && all_of_sort(args, SortKind::Int))
    return Sort::integer();
  if ((op == "div" || op == "mod") && n == 2 && all_of_sort(args, SortKind::Int))
    return Sort::integer();
  if (op == "abs" && n == 1 && args[0].is_int()) return Sort::integer();
  if ((op == "<=" || op == "<" || op == ">=" || op == ">") && n == 2 &&
      all_of_sort(args, SortKind::Int))
    return Sort::boolean();

  if (args.size() >= 1 && args[0].is_bitvec()) {
    bool same_width = all_equal(args);
    if ((op == "bvnot" || op == "bvneg") && n == 1) return args[0];
    if ((op == "bvadd" || op == "bvmul" || op == "bvand" || op == "bvor" || op == "bvxor") &&
        n >= 2 && same_width)
      return args[0];
    if ((op == "bvsub" || op == "bvudiv" || op == "bvurem" || op == "bvsdiv" ||
         op == "bvsrem" || op == "bvshl" || op == "bvlshr" || op == "bvashr") &&
        n == 2 && same_width)
      return args[0];
    if ((op == "bvult" || op == "bvule" || op == "bvugt" || op == "bvuge" || op == "bvslt" ||
         op == "bvsle" || op == "bvsgt" || op == "bvsge") &&
        n == 2 && same_width)
      return Sort::boolean();
  }

  if (op == "str.++" && n >= 2 && all_of_sort(args, SortKind::String)) return Sort::string();
  if (op == "str.len" && n == 1 && args[0].is_string()) return Sort::integer();
  if (op == "str.at" && n == 2 && args[0].is_string() && args[1].is_int())
    return Sort::string();
  if (op == "str.substr" && n == 3 && args[0].is_string() && args[1].is_int() &&
      args[2].is_int())
    return Sort::string();
  if (op == "str.indexof" && n == 3 && args[0].is_string() && args[1].is_string() &&
      args[2].is_int())
    return Sort::integer();
  if (op == "str.replace" && n == 3 && all_of_sort(args, SortKind::String))
    return Sort::string();
  if ((op == "str.prefixof" || op == "str.suffixof" || op == "str.contains") && n == 2 &&
      all_of_sort(args, SortKind::String))
    return Sort::boolean();
  if ((op == "str.to.int" || op == "str.to_int") && n == 1 && args[0].is_string())
    return Sort::integer();
  if ((op == "int.to.str" || op == "str.from_int") && n == 1 && args[0].is_int())
    return Sort::string();

  return std::nullopt;
}

const std::set<std::string>& operator_names() {
  static const std::set<std::string> names = {
      "not", "and", "or", "xor", "=>", "=", "distinct", "ite",
      "+", "-", "*", "div", "mod", "abs", "<=", "<", ">=", ">",
      "bvnot", "bvneg", "bvadd", "bvsub", "bvmul", "bvudiv", "bvurem", "bvsdiv", "bvsrem",
      "bvand", "bvor", "bvxor", "bvshl", "bvlshr", "bvashr",
      "bvult", "bvule", "bvugt", "bvuge", "bvslt", "bvsle", "bvsgt", "bvsge",
      "str.++", "str.len", "str.at", "str.substr", "str.indexof", "str.replace",
      "str.prefixof", "str.suffixof", "str.contains",
      "str.to.int", "str.to_int", "int.to.str", "str.from_int",
  };
  return names;
}

Sort check(const TermPtr& t, const SortEnv& env, std::map<std::string, Sort>& locals) {
  switch (t->kind()) {
    case TermKind::Literal:
      return t->value().sort();

    case TermKind::Var: {
      auto local = locals.find(t->name());
      if (local != locals.end()) return local->second;
      auto global = env.vars.find(t->name());
      if (global != env.vars.end()) return global->second;
      throw SortCheckError("unknown symbol '" + t->name() + "'", t);
    }

    case TermKind::Apply: {
      std::vector<Sort> arg_sorts;
      for (const auto& a : t->args()) arg_sorts.push_back(check(a, env, locals));

      auto fun = env.funs.find(t->name());
      if (fun != env.funs.end()) {
        const FunSig& sig = fun->second;
        if (sig.param_sorts.size() != arg_sorts.size())
          throw SortCheckError("'" + t->name() + "' expects " +
                                   std::to_string(sig.param_sorts.size()) + " arguments, got " +
                                   std::to_string(arg_sorts.size()),
                               t);
        for (std::size_t i = 0; i < arg_sorts.size(); i++)
          if (arg_sorts[i] != sig.param_sorts[i])
            throw SortCheckError("argument " + std::to_string(i + 1) + " of '" + t->name() +
                                     "' has sort " + arg_sorts[i].to_sygus() + ", expected " +
                                     sig.param_sorts[i].to_sygus(),
                                 t);
        return sig.return_sort;
      }

      if (auto sort = apply_sort(t->name(), arg_sorts)) return *sort;
      if (known_operator(t->name()))
        throw SortCheckError("operand sorts do not fit operator '" + t->name() + "'", t);
      throw SortCheckError("unknown operator '" + t->name() + "'", t);
    }

    case TermKind::Let: {
      std::set<std::string> names;
      for (const auto& name : t->bound_names())
        if (!names.insert(name).second)
          throw SortCheckError("duplicate let binding '" + name + "'", t);
      std::map<std::string, Sort> extended = locals;
      for (std::size_t i = 0; i < t->binding_count(); i++)
        extended[t->bound_names()[i]] = check(t->binding_value(i), env, locals);
      return check(t->body(), env, extended);
    }
  }
  throw SortCheckError("malformed term", t);
}

} // namespace

bool known_operator(const std::string& op) { return operator_names().count(op) > 0; }

Sort well_sorted(const TermPtr& t, const SortEnv& env) {
  std::map<std::string, Sort> locals;
  return check(t, env, locals);
}

} // namespace sygus
