#include "sygus/smt.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "sygus/sexpr.hpp"

namespace sygus {

std::string resolve_smt_command(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  const char* env = std::getenv("SYGUS_SMT_SOLVER");
  if (env && *env) return env;
#ifdef SYGUS_FALLBACK_SMT
  return SYGUS_FALLBACK_SMT;
#else
  throw SmtError("no SMT backend configured (use --smt-solver or SYGUS_SMT_SOLVER)");
#endif
}

// ------------------------------------------------------------- printing --

namespace {

const char* smt_op_spelling(const std::string& op) {
  // The 2018-era SyGuS spellings; the backend wants the modern ones.
  if (op == "str.to.int") return "str.to_int";
  if (op == "int.to.str") return "str.from_int";
  return op.c_str();
}

} // namespace

std::string term_to_smt2(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Literal:
      return t->value().to_text();
    case TermKind::Var:
      return t->name();
    case TermKind::Apply: {
      if (t->args().empty()) return t->name();
      std::string out = "(";
      out += smt_op_spelling(t->name());
      for (const auto& a : t->args()) out += " " + term_to_smt2(a);
      return out + ")";
    }
    case TermKind::Let: {
      std::string out = "(let (";
      for (std::size_t i = 0; i < t->binding_count(); i++) {
        if (i) out += " ";
        out += "(" + t->bound_names()[i] + " " + term_to_smt2(t->binding_value(i)) + ")";
      }
      return out + ") " + term_to_smt2(t->body()) + ")";
    }
  }
  return "";
}

// -------------------------------------------------------------- session --

SmtSession::SmtSession(SmtConfig config) : config_(std::move(config)) {}

SmtSession::~SmtSession() {
  if (!proc_.running()) return;
  try {
    proc_.write_stdin("(exit)\n");
    proc_.close_stdin();
    for (int i = 0; i < 8; i++)
      if (!proc_.read_some(0.25)) break;  // EOF: it quit on its own
  } catch (...) {
  }
  proc_.kill_hard();
  proc_.wait();
}

void SmtSession::ensure_started() {
  if (proc_.running()) return;
  std::vector<std::string> argv = shell_split(config_.command);
  if (argv.empty()) throw SmtError("empty SMT backend command");
  try {
    proc_.start(argv);
  } catch (const std::runtime_error& e) {
    throw SmtError(std::string("cannot start SMT backend: ") + e.what());
  }
}

std::optional<std::string> SmtSession::read_until_sentinel(const std::string& sentinel,
                                                           double timeout) {
  auto start = std::chrono::steady_clock::now();
  auto left = [&] {
    return timeout -
           std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  std::string acc;
  while (true) {
    double remaining = left();
    if (remaining <= 0) {
      proc_.kill_hard();
      proc_.wait();
      return std::nullopt;
    }
    auto chunk = proc_.read_some(std::min(remaining, 0.25));
    if (!chunk) {
      proc_.wait();
      std::string detail = acc.empty() ? std::string("no output") : acc;
      throw SmtError("SMT backend exited unexpectedly (" + detail + ")");
    }
    acc += *chunk;
    auto pos = acc.find(sentinel);
    if (pos != std::string::npos) return acc.substr(0, pos);
  }
}

namespace {

Value model_value(const SExpr& e, Sort sort) {
  switch (e.kind) {
    case SExpr::Kind::Numeral:
      return Value::of_int(e.numeral);
    case SExpr::Kind::BitVecLit:
      return Value::of_bitvec(sort.is_bitvec() ? sort.width() : e.bv_width, e.bv_bits);
    case SExpr::Kind::StringLit:
      return Value::of_string(e.text);
    case SExpr::Kind::Symbol:
      if (e.text == "true") return Value::of_bool(true);
      if (e.text == "false") return Value::of_bool(false);
      break;
    case SExpr::Kind::List:
      if (e.items.size() == 2 && e.items[0].is_symbol("-") &&
          e.items[1].kind == SExpr::Kind::Numeral)
        return Value::of_int(-e.items[1].numeral);
      // (_ bvN w)
      if (e.items.size() == 3 && e.items[0].is_symbol("_") &&
          e.items[1].kind == SExpr::Kind::Symbol && e.items[1].text.starts_with("bv") &&
          e.items[2].kind == SExpr::Kind::Numeral)
        return Value::of_bitvec(e.items[2].numeral.convert_to<unsigned>(),
                                BigInt(e.items[1].text.substr(2)));
      break;
  }
  throw SmtError("cannot parse model value: " + sexpr_to_text(e));
}

void collect_model_entries(const std::vector<SExpr>& items, const Params& decls,
                           std::map<std::string, Value>& out) {
  for (const SExpr& e : items) {
    if (!e.is_list()) continue;
    if (e.head() == "model") {
      collect_model_entries({e.items.begin() + 1, e.items.end()}, decls, out);
      continue;
    }
    if (e.head() != "define-fun") {
      collect_model_entries(e.items, decls, out);
      continue;
    }
    if (e.items.size() != 5 || e.items[1].kind != SExpr::Kind::Symbol) continue;
    const std::string& name = e.items[1].text;
    for (const auto& [decl_name, decl_sort] : decls) {
      if (decl_name == name) {
        out.emplace(name, model_value(e.items[4], decl_sort));
        break;
      }
    }
  }
}

// First sat/unsat/unknown token on a line of its own; errors win.
SmtResult::Kind parse_verdict(const std::string& text, std::string& reason) {
  std::istringstream in(text);
  std::string line;
  std::optional<SmtResult::Kind> verdict;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::size_t i = line.find_first_not_of(' ');
    if (i == std::string::npos) continue;
    std::string word = line.substr(i);
    if (word == "sat") verdict = SmtResult::Kind::Sat;
    else if (word == "unsat") verdict = SmtResult::Kind::Unsat;
    else if (word == "unknown") {
      verdict = SmtResult::Kind::Unknown;
      reason = "solver reported unknown";
    } else if (word.starts_with("(error")) {
      throw SmtError("SMT backend error: " + word);
    }
  }
  if (!verdict) throw SmtError("unrecognized backend output: " + text);
  return *verdict;
}

} // namespace

SmtResult SmtSession::check(const std::string& logic, const Params& decls,
                            const TermPtr& formula, bool negate) {
  ensure_started();
  auto begin = std::chrono::steady_clock::now();
  auto remaining = [&] {
    return config_.query_timeout_seconds -
           std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  };
  std::string barrier = "sygus-barrier-" + std::to_string(++seq_);

  std::string script = "(reset)\n(set-option :produce-models true)\n";
  const std::string& lg = config_.logic_override.empty() ? logic : config_.logic_override;
  if (!lg.empty()) script += "(set-logic " + lg + ")\n";
  for (const auto& [name, sort] : decls)
    script += "(declare-const " + name + " " + sort.to_smt2() + ")\n";
  if (negate) script += "(assert (not " + term_to_smt2(formula) + "))\n";
  else script += "(assert " + term_to_smt2(formula) + ")\n";
  script += "(check-sat)\n(echo \"" + barrier + "\")\n";

  SmtResult result;
  try {
    proc_.write_stdin(script);
  } catch (const std::runtime_error& e) {
    proc_.wait();
    throw SmtError(std::string("cannot talk to SMT backend: ") + e.what());
  }
  auto answer = read_until_sentinel(barrier, remaining());
  if (!answer) {
    result.kind = SmtResult::Kind::Unknown;
    result.reason = "timeout";
    return result;
  }
  result.kind = parse_verdict(*answer, result.reason);
  if (result.kind != SmtResult::Kind::Sat) return result;

  std::string model_barrier = barrier + "-model";
  proc_.write_stdin("(get-model)\n(echo \"" + model_barrier + "\")\n");
  auto model_text = read_until_sentinel(model_barrier, remaining());
  if (!model_text) {
    result.kind = SmtResult::Kind::Unknown;
    result.reason = "timeout while reading model";
    return result;
  }
  if (model_text->find("(error") != std::string::npos)
    throw SmtError("SMT backend error: " + *model_text);
  collect_model_entries(read_sexprs(*model_text), decls, result.model);
  return result;
}

} // namespace sygus
