#include "sygus/substitute.hpp"

#include <stdexcept>

namespace sygus {

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (unsigned k = 0;; k++) {
    std::string candidate = base + "#" + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

TermPtr subst_vars(const TermPtr& t, const std::map<std::string, TermPtr>& mapping) {
  if (mapping.empty()) return t;
  switch (t->kind()) {
    case TermKind::Literal:
      return t;

    case TermKind::Var: {
      auto it = mapping.find(t->name());
      return it == mapping.end() ? t : it->second;
    }

    case TermKind::Apply: {
      std::vector<TermPtr> args;
      bool changed = false;
      for (const auto& a : t->args()) {
        args.push_back(subst_vars(a, mapping));
        changed |= args.back() != a;
      }
      return changed ? Term::apply(t->name(), std::move(args)) : t;
    }

    case TermKind::Let: {
      std::vector<std::pair<std::string, TermPtr>> bindings;
      for (std::size_t i = 0; i < t->binding_count(); i++)
        bindings.emplace_back(t->bound_names()[i], subst_vars(t->binding_value(i), mapping));

      // The binder shadows mapped names inside the body.
      std::map<std::string, TermPtr> inner = mapping;
      for (const auto& name : t->bound_names()) inner.erase(name);

      // Rename any bound name that would capture a free variable of a
      // replacement term flowing into the body.
      std::set<std::string> incoming;
      for (const auto& [from, to] : inner) {
        auto fv = free_vars(to);
        incoming.insert(fv.begin(), fv.end());
      }
      if (!incoming.empty()) {
        std::set<std::string> avoid = incoming;
        auto body_fv = free_vars(t->body());
        avoid.insert(body_fv.begin(), body_fv.end());
        for (const auto& [name, value] : bindings) avoid.insert(name);
        for (auto& [name, value] : bindings) {
          if (!incoming.count(name)) continue;
          std::string renamed = fresh_name(name, avoid);
          avoid.insert(renamed);
          inner[name] = Term::var(renamed);
          name = renamed;
        }
      }

      TermPtr body = subst_vars(t->body(), inner);
      return Term::let(std::move(bindings), body);
    }
  }
  throw std::logic_error("malformed term");
}

TermPtr replace_fun(const TermPtr& t, const std::string& fun, const Params& params,
                    const TermPtr& body) {
  switch (t->kind()) {
    case TermKind::Literal:
    case TermKind::Var:
      return t;

    case TermKind::Apply: {
      std::vector<TermPtr> args;
      bool changed = false;
      for (const auto& a : t->args()) {
        args.push_back(replace_fun(a, fun, params, body));
        changed |= args.back() != a;
      }
      if (t->name() != fun)
        return changed ? Term::apply(t->name(), std::move(args)) : t;
      if (args.size() != params.size())
        throw std::invalid_argument("application of '" + fun + "' has arity " +
                                    std::to_string(args.size()) + ", signature expects " +
                                    std::to_string(params.size()));
      std::map<std::string, TermPtr> binding;
      for (std::size_t i = 0; i < params.size(); i++) binding[params[i].first] = args[i];
      return subst_vars(body, binding);
    }

    case TermKind::Let: {
      std::vector<std::pair<std::string, TermPtr>> bindings;
      bool changed = false;
      for (std::size_t i = 0; i < t->binding_count(); i++) {
        bindings.emplace_back(t->bound_names()[i],
                              replace_fun(t->binding_value(i), fun, params, body));
        changed |= bindings.back().second != t->binding_value(i);
      }
      TermPtr new_body = replace_fun(t->body(), fun, params, body);
      changed |= new_body != t->body();
      return changed ? Term::let(std::move(bindings), new_body) : t;
    }
  }
  throw std::logic_error("malformed term");
}

} // namespace

TermPtr substitute_vars(const TermPtr& t, const std::map<std::string, TermPtr>& mapping) {
  return subst_vars(t, mapping);
}

TermPtr substitute(const TermPtr& phi, const Candidate& cand) {
  return replace_fun(phi, cand.target, cand.params, cand.body);
}

TermPtr inline_defined_funs(const TermPtr& t, const std::vector<DefinedFun>& funs) {
  // Bodies may reference earlier definitions only, so expanding from the
  // last definition backwards leaves no defined-fun applications behind.
  TermPtr out = t;
  for (auto it = funs.rbegin(); it != funs.rend(); ++it)
    out = replace_fun(out, it->name, it->params, it->body);
  return out;
}

} // namespace sygus
