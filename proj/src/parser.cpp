#include "sygus/parser.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace sygus {

namespace {

bool is_negative_numeral(const std::string& s) {
  if (s.size() < 2 || s[0] != '-') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Sort parse_sort(const SExpr& e) {
  if (e.kind == SExpr::Kind::Symbol) {
    if (e.text == "Bool") return Sort::boolean();
    if (e.text == "Int") return Sort::integer();
    if (e.text == "String") return Sort::string();
    throw ParseError("unknown sort '" + e.text + "'", e.span);
  }
  if (e.is_list()) {
    // (BitVec n) in SyGuS files, (_ BitVec n) in SMT-LIB spelling.
    std::size_t i = (!e.items.empty() && e.items[0].is_symbol("_")) ? 1 : 0;
    if (e.items.size() == i + 2 && e.items[i].is_symbol("BitVec") &&
        e.items[i + 1].kind == SExpr::Kind::Numeral) {
      const BigInt& w = e.items[i + 1].numeral;
      if (w < 1 || w > 65536) throw ParseError("unsupported bit-vector width", e.span);
      return Sort::bitvec(w.convert_to<unsigned>());
    }
  }
  throw ParseError("unknown sort", e.span);
}

Params parse_params(const SExpr& e) {
  if (!e.is_list()) throw ParseError("expected a parameter list", e.span);
  Params out;
  std::set<std::string> seen;
  for (const SExpr& q : e.items) {
    if (!q.is_list() || q.items.size() != 2 || q.items[0].kind != SExpr::Kind::Symbol)
      throw ParseError("malformed parameter, expected (name Sort)", q.span);
    if (!seen.insert(q.items[0].text).second)
      throw ParseError("duplicate parameter '" + q.items[0].text + "'", q.items[0].span);
    out.emplace_back(q.items[0].text, parse_sort(q.items[1]));
  }
  return out;
}

// ---------------------------------------------------------------- terms --

struct TermCtx {
  const SortEnv* env = nullptr;
  std::map<const Term*, SourceSpan>* spans = nullptr;
  std::vector<std::set<std::string>> let_scopes;

  bool let_bound(const std::string& n) const {
    for (auto it = let_scopes.rbegin(); it != let_scopes.rend(); ++it)
      if (it->count(n)) return true;
    return false;
  }
};

TermPtr record(TermPtr t, const SExpr& e, TermCtx& ctx) {
  if (ctx.spans) (*ctx.spans)[t.get()] = e.span;
  return t;
}

TermPtr build_term(const SExpr& e, TermCtx& ctx) {
  switch (e.kind) {
    case SExpr::Kind::Numeral:
      return record(Term::literal(Value::of_int(e.numeral)), e, ctx);
    case SExpr::Kind::StringLit:
      return record(Term::literal(Value::of_string(e.text)), e, ctx);
    case SExpr::Kind::BitVecLit:
      return record(Term::literal(Value::of_bitvec(e.bv_width, e.bv_bits)), e, ctx);

    case SExpr::Kind::Symbol: {
      if (e.text == "true") return record(Term::literal(Value::of_bool(true)), e, ctx);
      if (e.text == "false") return record(Term::literal(Value::of_bool(false)), e, ctx);
      if (is_negative_numeral(e.text))
        return record(Term::literal(Value::of_int(BigInt(e.text))), e, ctx);
      // A bare symbol naming a nullary function is an application of it.
      if (!ctx.let_bound(e.text) && ctx.env && !ctx.env->vars.count(e.text)) {
        auto f = ctx.env->funs.find(e.text);
        if (f != ctx.env->funs.end() && f->second.param_sorts.empty())
          return record(Term::apply(e.text, {}), e, ctx);
      }
      return record(Term::var(e.text), e, ctx);
    }

    case SExpr::Kind::List: {
      if (e.items.empty()) throw ParseError("empty application", e.span);
      if (e.items[0].kind != SExpr::Kind::Symbol)
        throw ParseError("expected an operator symbol", e.items[0].span);
      const std::string& head = e.items[0].text;

      if (head == "let") {
        if (e.items.size() != 3)
          throw ParseError("let expects a binding list and a body", e.span);
        const SExpr& blist = e.items[1];
        if (!blist.is_list() || blist.items.empty())
          throw ParseError("let needs at least one binding", blist.span);
        std::vector<std::pair<std::string, TermPtr>> bindings;
        std::set<std::string> names;
        for (const SExpr& b : blist.items) {
          // (name value) or the SyGuS v1 sorted form (name Sort value).
          if (!b.is_list() || b.items.size() < 2 || b.items.size() > 3 ||
              b.items[0].kind != SExpr::Kind::Symbol)
            throw ParseError("malformed let binding", b.span);
          if (!names.insert(b.items[0].text).second)
            throw ParseError("duplicate let binding '" + b.items[0].text + "'", b.items[0].span);
          if (b.items.size() == 3) parse_sort(b.items[1]);
          bindings.emplace_back(b.items[0].text, build_term(b.items.back(), ctx));
        }
        ctx.let_scopes.push_back(std::move(names));
        TermPtr body = build_term(e.items[2], ctx);
        ctx.let_scopes.pop_back();
        return record(Term::let(std::move(bindings), std::move(body)), e, ctx);
      }

      // Canonicalize (- 5) into the negative literal.
      if (head == "-" && e.items.size() == 2 && e.items[1].kind == SExpr::Kind::Numeral)
        return record(Term::literal(Value::of_int(-e.items[1].numeral)), e, ctx);

      std::vector<TermPtr> args;
      for (std::size_t i = 1; i < e.items.size(); i++) args.push_back(build_term(e.items[i], ctx));
      return record(Term::apply(head, std::move(args)), e, ctx);
    }
  }
  throw ParseError("malformed expression", e.span);
}

TermPtr parse_checked(const SExpr& e, const SortEnv& env, std::optional<Sort> want,
                      const std::string& what) {
  std::map<const Term*, SourceSpan> spans;
  TermCtx ctx;
  ctx.env = &env;
  ctx.spans = &spans;
  TermPtr t = build_term(e, ctx);
  try {
    Sort s = well_sorted(t, env);
    if (want && s != *want)
      throw ParseError(what + " must have sort " + want->to_sygus() + ", got " + s.to_sygus(),
                       e.span);
  } catch (const SortCheckError& err) {
    SourceSpan where = e.span;
    if (err.offending) {
      auto it = spans.find(err.offending.get());
      if (it != spans.end()) where = it->second;
    }
    throw ParseError(err.what(), where);
  }
  return t;
}

// -------------------------------------------------------------- grammars --

struct GrammarCtx {
  const std::map<std::string, Sort>* nts = nullptr;
  const Params* params = nullptr;
  std::vector<std::set<std::string>> let_scopes;

  bool let_bound(const std::string& n) const {
    for (auto it = let_scopes.rbegin(); it != let_scopes.rend(); ++it)
      if (it->count(n)) return true;
    return false;
  }
  const Sort* param_sort(const std::string& n) const {
    for (const auto& [name, sort] : *params)
      if (name == n) return &sort;
    return nullptr;
  }
};

GTermPtr parse_gterm(const SExpr& e, GrammarCtx& ctx) {
  switch (e.kind) {
    case SExpr::Kind::Numeral:
      return GTerm::literal(Value::of_int(e.numeral));
    case SExpr::Kind::StringLit:
      return GTerm::literal(Value::of_string(e.text));
    case SExpr::Kind::BitVecLit:
      return GTerm::literal(Value::of_bitvec(e.bv_width, e.bv_bits));

    case SExpr::Kind::Symbol: {
      if (e.text == "true") return GTerm::literal(Value::of_bool(true));
      if (e.text == "false") return GTerm::literal(Value::of_bool(false));
      if (is_negative_numeral(e.text)) return GTerm::literal(Value::of_int(BigInt(e.text)));
      if (ctx.let_bound(e.text)) return GTerm::param(e.text);
      if (ctx.nts->count(e.text)) return GTerm::nonterminal(e.text);
      if (ctx.param_sort(e.text)) return GTerm::param(e.text);
      throw ParseError("unknown symbol '" + e.text + "' in grammar", e.span);
    }

    case SExpr::Kind::List: {
      if (e.items.empty()) throw ParseError("empty grammar term", e.span);
      if (e.items[0].kind != SExpr::Kind::Symbol)
        throw ParseError("expected an operator symbol", e.items[0].span);
      const std::string& head = e.items[0].text;

      if (head == "Constant" || head == "Variable") {
        if (e.items.size() != 2)
          throw ParseError(head + " expects a sort", e.span);
        Sort s = parse_sort(e.items[1]);
        return head == "Constant" ? GTerm::constant_of(s) : GTerm::variable_of(s);
      }
      if (head == "InputVariable" || head == "LocalVariable")
        throw ParseError("unsupported feature: " + head, e.span);

      if (head == "let") {
        if (e.items.size() != 3)
          throw ParseError("let expects a binding list and a body", e.span);
        const SExpr& blist = e.items[1];
        if (!blist.is_list() || blist.items.empty())
          throw ParseError("let needs at least one binding", blist.span);
        std::vector<std::pair<std::string, GTermPtr>> bindings;
        std::set<std::string> names;
        for (const SExpr& b : blist.items) {
          if (!b.is_list() || b.items.size() < 2 || b.items.size() > 3 ||
              b.items[0].kind != SExpr::Kind::Symbol)
            throw ParseError("malformed let binding", b.span);
          if (!names.insert(b.items[0].text).second)
            throw ParseError("duplicate let binding '" + b.items[0].text + "'", b.items[0].span);
          if (b.items.size() == 3) parse_sort(b.items[1]);
          bindings.emplace_back(b.items[0].text, parse_gterm(b.items.back(), ctx));
        }
        ctx.let_scopes.push_back(std::move(names));
        GTermPtr body = parse_gterm(e.items[2], ctx);
        ctx.let_scopes.pop_back();
        return GTerm::let(std::move(bindings), std::move(body));
      }

      std::vector<GTermPtr> children;
      for (std::size_t i = 1; i < e.items.size(); i++)
        children.push_back(parse_gterm(e.items[i], ctx));
      return GTerm::apply(head, std::move(children));
    }
  }
  throw ParseError("malformed grammar term", e.span);
}

// Convert a grammar skeleton into a plain term for sort checking:
// nonterminal references become variables of the declared sort, and the
// constant/variable leaf classes become placeholder variables.
TermPtr gterm_probe(const GTermPtr& g, std::map<std::string, Sort>& leaves) {
  switch (g->kind()) {
    case GTermKind::Literal:
      return Term::literal(g->value());
    case GTermKind::Param:
    case GTermKind::NonterminalRef:
      return Term::var(g->name());
    case GTermKind::ConstantOfSort:
    case GTermKind::VariableOfSort: {
      std::string name = "#leaf:" + g->sort().to_sygus();
      leaves.emplace(name, g->sort());
      return Term::var(name);
    }
    case GTermKind::Apply: {
      std::vector<TermPtr> args;
      for (const auto& c : g->children()) args.push_back(gterm_probe(c, leaves));
      return Term::apply(g->name(), std::move(args));
    }
    case GTermKind::Let: {
      std::vector<std::pair<std::string, TermPtr>> bindings;
      for (std::size_t i = 0; i + 1 < g->children().size(); i++)
        bindings.emplace_back(g->bound_names()[i], gterm_probe(g->children()[i], leaves));
      return Term::let(std::move(bindings), gterm_probe(g->body(), leaves));
    }
  }
  throw std::logic_error("malformed grammar term");
}

Grammar parse_grammar(const SExpr& e, const Params& params, Sort ret) {
  if (!e.is_list() || e.items.empty())
    throw ParseError("expected a grammar (a list of nonterminal declarations)", e.span);

  std::map<std::string, Sort> nts;
  for (const SExpr& d : e.items) {
    if (!d.is_list() || d.items.size() != 3 || d.items[0].kind != SExpr::Kind::Symbol)
      throw ParseError("malformed nonterminal declaration, expected (Name Sort (terms))", d.span);
    if (!nts.emplace(d.items[0].text, parse_sort(d.items[1])).second)
      throw ParseError("duplicate nonterminal '" + d.items[0].text + "'", d.items[0].span);
  }

  Grammar g;
  g.start = e.items[0].items[0].text;
  if (nts.at(g.start) != ret)
    throw ParseError("grammar start sort " + nts.at(g.start).to_sygus() +
                         " does not match return sort " + ret.to_sygus(),
                     e.items[0].span);

  SortEnv genv;
  for (const auto& [name, sort] : params) genv.vars[name] = sort;
  for (const auto& [name, sort] : nts) genv.vars[name] = sort;  // nonterminals shadow params

  for (const SExpr& d : e.items) {
    Production prod;
    prod.nonterminal = d.items[0].text;
    prod.sort = nts.at(prod.nonterminal);
    const SExpr& alts = d.items[2];
    if (!alts.is_list() || alts.items.empty())
      throw ParseError("nonterminal '" + prod.nonterminal + "' has no alternatives", alts.span);

    for (const SExpr& a : alts.items) {
      GrammarCtx ctx;
      ctx.nts = &nts;
      ctx.params = &params;
      GTermPtr gt = parse_gterm(a, ctx);

      std::map<std::string, Sort> leaves;
      TermPtr probe = gterm_probe(gt, leaves);
      SortEnv env = genv;
      env.vars.insert(leaves.begin(), leaves.end());
      try {
        Sort s = well_sorted(probe, env);
        if (s != prod.sort)
          throw ParseError("grammar alternative has sort " + s.to_sygus() + ", expected " +
                               prod.sort.to_sygus(),
                           a.span);
      } catch (const SortCheckError& err) {
        throw ParseError(err.what(), a.span);
      }

      bool duplicate = std::any_of(prod.alternatives.begin(), prod.alternatives.end(),
                                   [&](const GTermPtr& x) { return *x == *gt; });
      if (!duplicate) prod.alternatives.push_back(std::move(gt));
    }
    g.productions.push_back(std::move(prod));
  }
  return g;
}

} // namespace

// -------------------------------------------------------------- problems --

Problem parse_problem(const std::string& text) {
  std::vector<SExpr> cmds = read_sexprs(text);
  Problem p;
  bool saw_logic = false, saw_check = false;
  std::set<std::string> declared;

  auto declare = [&](const std::string& name, const SourceSpan& where) {
    if (!declared.insert(name).second)
      throw ParseError("duplicate declaration of '" + name + "'", where);
  };
  auto expect_symbol = [](const SExpr& c, std::size_t i, const char* what) -> const std::string& {
    if (i >= c.items.size() || c.items[i].kind != SExpr::Kind::Symbol)
      throw ParseError(std::string("expected ") + what, i < c.items.size() ? c.items[i].span : c.span);
    return c.items[i].text;
  };

  for (const SExpr& c : cmds) {
    if (!c.is_list() || c.items.empty() || c.items[0].kind != SExpr::Kind::Symbol)
      throw ParseError("expected a command", c.span);
    if (saw_check) throw ParseError("commands after check-synth", c.span);
    const std::string& head = c.items[0].text;

    if (head == "set-logic") {
      if (c.items.size() != 2) throw ParseError("set-logic expects one symbol", c.span);
      if (saw_logic) throw ParseError("duplicate set-logic", c.span);
      saw_logic = true;
      p.logic = expect_symbol(c, 1, "a logic name");

    } else if (head == "set-options") {
      if (c.items.size() != 2 || !c.items[1].is_list())
        throw ParseError("set-options expects a list of (name value) pairs", c.span);
      for (const SExpr& opt : c.items[1].items) {
        if (!opt.is_list() || opt.items.size() != 2 || opt.items[0].kind != SExpr::Kind::Symbol)
          throw ParseError("malformed option, expected (name value)", opt.span);
        p.options[opt.items[0].text] = sexpr_to_text(opt.items[1]);
      }
      std::cerr << "warning: set-options ignored\n";

    } else if (head == "declare-var" || head == "declare-primed-var") {
      if (c.items.size() != 3) throw ParseError(head + " expects a name and a sort", c.span);
      const std::string& name = expect_symbol(c, 1, "a variable name");
      Sort s = parse_sort(c.items[2]);
      declare(name, c.items[1].span);
      p.vars.emplace_back(name, s);
      if (head == "declare-primed-var") {
        declare(name + "!", c.items[1].span);
        p.primed_vars.emplace_back(name + "!", s);
      }

    } else if (head == "define-fun") {
      if (c.items.size() != 5)
        throw ParseError("define-fun expects a name, parameters, a sort, and a body", c.span);
      DefinedFun f;
      f.name = expect_symbol(c, 1, "a function name");
      f.params = parse_params(c.items[2]);
      f.return_sort = parse_sort(c.items[3]);
      declare(f.name, c.items[1].span);
      SortEnv env;
      for (const auto& [n, s] : f.params) env.vars[n] = s;
      for (const auto& df : p.defined_funs) {
        FunSig sig{{}, df.return_sort};
        for (const auto& [n, s] : df.params) sig.param_sorts.push_back(s);
        env.funs[df.name] = std::move(sig);
      }
      f.body = parse_checked(c.items[4], env, f.return_sort, "define-fun body");
      p.defined_funs.push_back(std::move(f));

    } else if (head == "synth-fun" || head == "synth-inv") {
      bool inv = head == "synth-inv";
      std::size_t min_items = inv ? 3u : 4u;
      if (c.items.size() < min_items || c.items.size() > min_items + 1)
        throw ParseError("malformed " + head, c.span);
      SynthFun f;
      f.name = expect_symbol(c, 1, "a function name");
      f.params = parse_params(c.items[2]);
      f.return_sort = inv ? Sort::boolean() : parse_sort(c.items[3]);
      f.is_inv = inv;
      declare(f.name, c.items[1].span);
      if (c.items.size() == min_items + 1)
        f.grammar = parse_grammar(c.items[min_items], f.params, f.return_sort);
      if (inv) p.kind = ProblemKind::Invariant;
      p.synth_funs.push_back(std::move(f));

    } else if (head == "constraint") {
      if (c.items.size() != 2) throw ParseError("constraint expects one term", c.span);
      SortEnv env = SortEnv::for_problem(p);
      p.constraints.push_back(parse_checked(c.items[1], env, Sort::boolean(), "constraint"));

    } else if (head == "inv-constraint") {
      if (c.items.size() != 5)
        throw ParseError("inv-constraint expects four function names", c.span);
      InvConstraint ic;
      ic.inv = expect_symbol(c, 1, "a synth-inv name");
      ic.pre = expect_symbol(c, 2, "a defined function name");
      ic.trans = expect_symbol(c, 3, "a defined function name");
      ic.post = expect_symbol(c, 4, "a defined function name");
      if (!p.find_synth_fun(ic.inv))
        throw ParseError("unknown synth-fun '" + ic.inv + "'", c.items[1].span);
      for (std::size_t i = 2; i <= 4; i++)
        if (!p.find_defined_fun(c.items[i].text))
          throw ParseError("unknown defined function '" + c.items[i].text + "'", c.items[i].span);
      p.inv_constraints.push_back(std::move(ic));
      p.kind = ProblemKind::Invariant;

    } else if (head == "check-synth") {
      if (c.items.size() != 1) throw ParseError("check-synth takes no arguments", c.span);
      saw_check = true;

    } else {
      throw ParseError("unknown command '" + head + "'", c.span);
    }
  }

  if (!saw_check) {
    SourceSpan where = cmds.empty() ? SourceSpan{1, 1} : cmds.back().span;
    throw ParseError("missing check-synth", where);
  }
  return p;
}

Problem parse_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

TermPtr parse_term(const SExpr& e, const SortEnv& env) {
  return parse_checked(e, env, std::nullopt, "term");
}

std::vector<Candidate> parse_candidates(const std::string& text, const Problem& p) {
  std::vector<SExpr> exprs = read_sexprs(text);

  // Some solvers wrap the whole solution in one extra pair of parens.
  if (exprs.size() == 1 && exprs[0].is_list() && !exprs[0].items.empty() &&
      std::all_of(exprs[0].items.begin(), exprs[0].items.end(),
                  [](const SExpr& x) { return x.is_list() && x.head() == "define-fun"; }))
    exprs = exprs[0].items;

  std::vector<Candidate> found;
  std::set<std::string> seen;
  for (const SExpr& e : exprs) {
    if (!e.is_list() || e.head() != "define-fun")
      throw ParseError("expected define-fun in solver output", e.span);
    if (e.items.size() != 5) throw ParseError("malformed define-fun", e.span);
    if (e.items[1].kind != SExpr::Kind::Symbol)
      throw ParseError("expected a function name", e.items[1].span);

    Candidate c;
    c.target = e.items[1].text;
    const SynthFun* sf = p.find_synth_fun(c.target);
    if (!sf) throw ParseError("unknown synth-fun '" + c.target + "'", e.items[1].span);
    if (!seen.insert(c.target).second)
      throw ParseError("duplicate solution for '" + c.target + "'", e.span);

    c.params = parse_params(e.items[2]);
    c.return_sort = parse_sort(e.items[3]);
    bool sig_ok = c.return_sort == sf->return_sort && c.params.size() == sf->params.size();
    for (std::size_t i = 0; sig_ok && i < c.params.size(); i++)
      sig_ok = c.params[i].second == sf->params[i].second;
    if (!sig_ok)
      throw ParseError("signature mismatch for '" + c.target + "'", e.span);

    SortEnv env;
    for (const auto& [n, s] : c.params) env.vars[n] = s;
    for (const auto& df : p.defined_funs) {
      FunSig sig{{}, df.return_sort};
      for (const auto& [n, s] : df.params) sig.param_sorts.push_back(s);
      env.funs[df.name] = std::move(sig);
    }
    c.body = parse_checked(e.items[4], env, c.return_sort, "candidate body");
    found.push_back(std::move(c));
  }

  // Return in problem order, demanding one solution per synth-fun.
  std::vector<Candidate> out;
  for (const SynthFun& f : p.synth_funs) {
    auto it = std::find_if(found.begin(), found.end(),
                           [&](const Candidate& c) { return c.target == f.name; });
    if (it == found.end())
      throw ParseError("missing solution for '" + f.name + "'", SourceSpan{1, 1});
    out.push_back(std::move(*it));
  }
  return out;
}

// -------------------------------------------------------------- printing --

std::string print_term(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Literal:
      return t->value().to_text();
    case TermKind::Var:
      return t->name();
    case TermKind::Apply: {
      if (t->args().empty()) return t->name();
      std::string out = "(" + t->name();
      for (const auto& a : t->args()) out += " " + print_term(a);
      return out + ")";
    }
    case TermKind::Let: {
      std::string out = "(let (";
      for (std::size_t i = 0; i < t->binding_count(); i++) {
        if (i) out += " ";
        out += "(" + t->bound_names()[i] + " " + print_term(t->binding_value(i)) + ")";
      }
      return out + ") " + print_term(t->body()) + ")";
    }
  }
  return "";
}

std::string print_candidate(const Candidate& c) {
  std::string out = "(define-fun " + c.target + " (";
  for (std::size_t i = 0; i < c.params.size(); i++) {
    if (i) out += " ";
    out += "(" + c.params[i].first + " " + c.params[i].second.to_sygus() + ")";
  }
  return out + ") " + c.return_sort.to_sygus() + " " + print_term(c.body) + ")";
}

// ------------------------------------------------------- default grammar --

namespace {

void push_unique(std::vector<Sort>& sorts, Sort s) {
  if (std::find(sorts.begin(), sorts.end(), s) == sorts.end()) sorts.push_back(s);
}

} // namespace

Grammar default_grammar(const std::string& logic, const Params& params, Sort return_sort) {
  bool strings = logic.find("SLIA") != std::string::npos;
  bool integers = logic.find("IA") != std::string::npos || strings;

  std::vector<Sort> sorts;
  push_unique(sorts, return_sort);
  push_unique(sorts, Sort::boolean());
  if (integers) push_unique(sorts, Sort::integer());
  if (strings) push_unique(sorts, Sort::string());
  for (const auto& [name, sort] : params) push_unique(sorts, sort);

  auto nt_of = [&](Sort s) -> std::string {
    if (s == return_sort) return "Start";
    switch (s.kind()) {
      case SortKind::Bool: return "StartBool";
      case SortKind::Int: return "StartInt";
      case SortKind::String: return "StartString";
      case SortKind::BitVec: return "StartBv" + std::to_string(s.width());
    }
    return "Start";
  };
  auto have = [&](Sort s) { return std::find(sorts.begin(), sorts.end(), s) != sorts.end(); };
  auto ref = [&](Sort s) { return GTerm::nonterminal(nt_of(s)); };
  auto bin = [&](const char* op, Sort a, Sort b) {
    return GTerm::apply(op, {ref(a), ref(b)});
  };

  Grammar g;
  g.start = "Start";
  const Sort B = Sort::boolean(), I = Sort::integer(), S = Sort::string();

  for (Sort s : sorts) {
    Production prod;
    prod.nonterminal = nt_of(s);
    prod.sort = s;
    auto& alt = prod.alternatives;

    for (const auto& [name, sort] : params)
      if (sort == s) alt.push_back(GTerm::param(name));

    switch (s.kind()) {
      case SortKind::Int:
        alt.push_back(GTerm::literal(Value::of_int(0)));
        alt.push_back(GTerm::literal(Value::of_int(1)));
        alt.push_back(bin("+", I, I));
        alt.push_back(bin("-", I, I));
        alt.push_back(GTerm::apply("ite", {ref(B), ref(I), ref(I)}));
        if (strings) {
          alt.push_back(GTerm::apply("str.len", {ref(S)}));
          alt.push_back(GTerm::apply("str.to.int", {ref(S)}));
          alt.push_back(GTerm::apply("str.indexof", {ref(S), ref(S), ref(I)}));
        }
        break;

      case SortKind::Bool:
        alt.push_back(GTerm::literal(Value::of_bool(true)));
        alt.push_back(GTerm::literal(Value::of_bool(false)));
        alt.push_back(bin("and", B, B));
        alt.push_back(bin("or", B, B));
        alt.push_back(GTerm::apply("not", {ref(B)}));
        if (have(I)) {
          alt.push_back(bin("<=", I, I));
          alt.push_back(bin("<", I, I));
          alt.push_back(bin(">=", I, I));
          alt.push_back(bin(">", I, I));
          alt.push_back(bin("=", I, I));
        }
        for (Sort other : sorts) {
          if (other.is_bitvec()) {
            alt.push_back(bin("bvule", other, other));
            alt.push_back(bin("bvult", other, other));
            alt.push_back(bin("=", other, other));
          }
        }
        if (have(S)) {
          alt.push_back(bin("=", S, S));
          alt.push_back(bin("str.prefixof", S, S));
          alt.push_back(bin("str.suffixof", S, S));
          alt.push_back(bin("str.contains", S, S));
        }
        break;

      case SortKind::String:
        alt.push_back(GTerm::literal(Value::of_string("")));
        alt.push_back(GTerm::literal(Value::of_string(" ")));
        alt.push_back(bin("str.++", S, S));
        alt.push_back(GTerm::apply("str.at", {ref(S), ref(I)}));
        alt.push_back(GTerm::apply("str.substr", {ref(S), ref(I), ref(I)}));
        alt.push_back(GTerm::apply("str.replace", {ref(S), ref(S), ref(S)}));
        alt.push_back(GTerm::apply("int.to.str", {ref(I)}));
        alt.push_back(GTerm::apply("ite", {ref(B), ref(S), ref(S)}));
        break;

      case SortKind::BitVec: {
        alt.push_back(GTerm::literal(Value::of_bitvec(s.width(), 0)));
        alt.push_back(GTerm::literal(Value::of_bitvec(s.width(), 1)));
        for (const char* op : {"bvnot", "bvneg"})
          alt.push_back(GTerm::apply(op, {ref(s)}));
        for (const char* op : {"bvadd", "bvsub", "bvand", "bvor", "bvxor", "bvmul", "bvudiv",
                               "bvurem", "bvshl", "bvlshr", "bvashr"})
          alt.push_back(bin(op, s, s));
        alt.push_back(GTerm::apply("ite", {ref(B), ref(s), ref(s)}));
        break;
      }
    }
    g.productions.push_back(std::move(prod));
  }

  // "Start" must come first so it is unambiguously the start symbol.
  for (std::size_t i = 0; i < g.productions.size(); i++) {
    if (g.productions[i].nonterminal == "Start" && i != 0)
      std::swap(g.productions[0], g.productions[i]);
  }
  return g;
}

} // namespace sygus
