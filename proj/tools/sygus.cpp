#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sygus/harness.hpp"
#include "sygus/parser.hpp"
#include "sygus/report.hpp"
#include "sygus/solver.hpp"

namespace {

using namespace sygus;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

// ------------------------------------------------- normalized problem dump --

std::string gterm_text(const GTermPtr& g) {
  switch (g->kind()) {
    case GTermKind::Literal: return g->value().to_text();
    case GTermKind::Param:
    case GTermKind::NonterminalRef: return g->name();
    case GTermKind::ConstantOfSort: return "(Constant " + g->sort().to_sygus() + ")";
    case GTermKind::VariableOfSort: return "(Variable " + g->sort().to_sygus() + ")";
    case GTermKind::Apply: {
      if (g->children().empty()) return g->name();
      std::string out = "(" + g->name();
      for (const GTermPtr& c : g->children()) out += " " + gterm_text(c);
      return out + ")";
    }
    case GTermKind::Let: {
      std::string out = "(let (";
      for (std::size_t i = 0; i < g->bound_names().size(); i++) {
        if (i) out += " ";
        out += "(" + g->bound_names()[i] + " " + gterm_text(g->children()[i]) + ")";
      }
      return out + ") " + gterm_text(g->body()) + ")";
    }
  }
  return "";
}

std::string params_text(const Params& params) {
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); i++) {
    if (i) out += " ";
    out += "(" + params[i].first + " " + params[i].second.to_sygus() + ")";
  }
  return out + ")";
}

std::string grammar_text(const Grammar& g, const std::string& indent) {
  std::string out = indent + "(";
  bool first_nt = true;
  for (const Production& prod : g.productions) {
    if (!first_nt) out += "\n" + indent + " ";
    first_nt = false;
    out += "(" + prod.nonterminal + " " + prod.sort.to_sygus() + " (";
    for (std::size_t i = 0; i < prod.alternatives.size(); i++) {
      if (i) out += " ";
      out += gterm_text(prod.alternatives[i]);
    }
    out += "))";
  }
  return out + ")";
}

std::string print_problem(const Problem& p) {
  std::ostringstream out;
  if (!p.logic.empty()) out << "(set-logic " << p.logic << ")\n";
  if (!p.options.empty()) {
    out << "(set-options (";
    bool first = true;
    for (const auto& [key, value] : p.options) {
      if (!first) out << " ";
      first = false;
      out << "(" << key << " " << value << ")";
    }
    out << "))\n";
  }
  for (const DefinedFun& f : p.defined_funs)
    out << "(define-fun " << f.name << " " << params_text(f.params) << " "
        << f.return_sort.to_sygus() << " " << print_term(f.body) << ")\n";
  for (const SynthFun& f : p.synth_funs) {
    if (f.is_inv) out << "(synth-inv " << f.name << " " << params_text(f.params);
    else
      out << "(synth-fun " << f.name << " " << params_text(f.params) << " "
          << f.return_sort.to_sygus();
    if (f.grammar) out << "\n" << grammar_text(*f.grammar, "  ");
    out << ")\n";
  }
  for (const auto& [name, sort] : p.vars) {
    bool primed = p.var_sort(name + "!").has_value();
    out << (primed ? "(declare-primed-var " : "(declare-var ") << name << " "
        << sort.to_sygus() << ")\n";
  }
  for (const TermPtr& c : p.constraints) out << "(constraint " << print_term(c) << ")\n";
  for (const InvConstraint& c : p.inv_constraints)
    out << "(inv-constraint " << c.inv << " " << c.pre << " " << c.trans << " " << c.post
        << ")\n";
  out << "(check-synth)\n";
  return out.str();
}

// ------------------------------------------------------------- subcommands --

SmtSession make_session(const std::string& smt_flag, double query_timeout) {
  SmtConfig cfg;
  cfg.command = resolve_smt_command(smt_flag);
  if (query_timeout > 0) cfg.query_timeout_seconds = query_timeout;
  return SmtSession(std::move(cfg));
}

int cmd_parse(const std::string& benchmark) {
  Problem p = parse_problem_file(benchmark);
  std::cout << print_problem(p);
  return 0;
}

int cmd_check(const std::string& benchmark, const std::string& solution_file,
              const std::string& smt_flag, double timeout) {
  Problem p = parse_problem_file(benchmark);
  std::string solution = read_file(solution_file);
  SmtSession smt = make_session(smt_flag, timeout);
  Verdict v = check_solution(p, solution, smt);
  std::cout << verdict_name(v.kind) << "\n";
  if (v.kind == Verdict::Kind::Invalid) {
    std::cout << "(";
    bool first = true;
    for (const auto& [name, value] : v.counterexample.vars) {
      if (!first) std::cout << " ";
      first = false;
      std::cout << "(" << name << " " << value.to_text() << ")";
    }
    std::cout << ")\n";
  }
  if (!v.detail.empty()) std::cerr << v.detail << "\n";
  return v.kind == Verdict::Kind::Valid ? 0 : 1;
}

int cmd_solve(const std::string& benchmark, const std::string& smt_flag, double timeout,
              std::size_t max_size) {
  Problem p = parse_problem_file(benchmark);
  SmtSession smt = make_session(smt_flag, 0);
  Budget budget;
  budget.wall_seconds = timeout;
  if (max_size > 0) budget.max_term_size = max_size;
  SolveResult res = solve(p, budget, smt);
  if (res.kind == SolveResult::Kind::Solved) {
    for (const Candidate& c : res.candidates) std::cout << print_candidate(c) << "\n";
    return 0;
  }
  std::cerr << (res.kind == SolveResult::Kind::TimedOut ? "timed out" : "search exhausted")
            << " after " << res.stats.rounds << " round(s), "
            << res.stats.terms_enumerated << " term(s)\n";
  return 1;
}

int cmd_run(const std::string& config_path, const std::string& smt_flag, double timeout,
            bool timeout_set, std::size_t jobs, const std::string& out_dir) {
  RunConfig cfg = load_run_config(config_path);
  if (timeout_set) cfg.wall_limit_seconds = timeout;
  if (jobs > 0) cfg.workers = jobs;
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (!smt_flag.empty()) cfg.smt_command = smt_flag;
  std::vector<RunRecord> records = run_suite(cfg);
  for (const RunRecord& r : records) std::cout << record_to_json(r) << "\n";
  return 0;
}

int cmd_score(const std::string& records_path, const std::string& format) {
  Scoring sc = score(load_records(records_path));
  std::cout << (format == "csv" ? scorecards_to_csv(sc.cards) : scorecards_to_text(sc.cards));
  return 0;
}

int cmd_report(const std::string& records_path, const std::string& categories_path,
               const std::string& format, const std::string& out_dir) {
  std::map<std::string, std::string> categories;
  if (!categories_path.empty()) categories = load_category_map(categories_path);
  ReportBundle bundle =
      report(load_records(records_path), categories, format == "svg" || !out_dir.empty());
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::filesystem::path dir(out_dir);
    write_file((dir / "category_table.txt").string(), bundle.category_table_text);
    write_file((dir / "category_table.csv").string(), bundle.category_table_csv);
    write_file((dir / "details.csv").string(), bundle.detail_csv);
    if (!bundle.svg.empty()) write_file((dir / "charts.svg").string(), bundle.svg);
    return 0;
  }
  if (format == "csv") std::cout << bundle.category_table_csv << "\n" << bundle.detail_csv;
  else if (format == "svg") std::cout << bundle.svg;
  else std::cout << bundle.category_table_text;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"SyGuS toolkit: parse, check, solve, run, score, report"};
  app.require_subcommand(1);

  std::string benchmark, solution_file, config_path, records_path;
  std::string smt_flag, out_dir, categories_path, format = "text";
  double timeout = 3600;
  std::size_t jobs = 0, max_size = 0;

  CLI::App* parse_cmd = app.add_subcommand("parse", "Parse a benchmark and dump it normalized");
  parse_cmd->add_option("benchmark", benchmark, "SyGuS .sl file")->required();

  CLI::App* check_cmd = app.add_subcommand("check", "Check a solution file against a benchmark");
  check_cmd->add_option("benchmark", benchmark, "SyGuS .sl file")->required();
  check_cmd->add_option("solution", solution_file, "solution define-fun file")->required();
  check_cmd->add_option("--smt-solver", smt_flag, "SMT backend command");
  check_cmd->add_option("--timeout", timeout, "SMT query timeout in seconds");

  CLI::App* solve_cmd = app.add_subcommand("solve", "Run the reference solver on a benchmark");
  solve_cmd->add_option("benchmark", benchmark, "SyGuS .sl file")->required();
  solve_cmd->add_option("--smt-solver", smt_flag, "SMT backend command");
  solve_cmd->add_option("--timeout", timeout, "wall-clock budget in seconds");
  solve_cmd->add_option("--max-size", max_size, "term size cap for enumeration");

  CLI::App* run_cmd = app.add_subcommand("run", "Run a solver suite from a config file");
  run_cmd->add_option("config", config_path, "key-value run config")->required();
  run_cmd->add_option("--smt-solver", smt_flag, "SMT backend command");
  CLI::Option* run_timeout = run_cmd->add_option("--timeout", timeout, "per-run wall limit");
  run_cmd->add_option("--jobs", jobs, "parallel workers");
  run_cmd->add_option("--out", out_dir, "output directory for records.jsonl");

  CLI::App* score_cmd = app.add_subcommand("score", "Score a records file");
  score_cmd->add_option("records", records_path, "records.jsonl")->required();
  score_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv"}));

  CLI::App* report_cmd = app.add_subcommand("report", "Category tables and per-benchmark detail");
  report_cmd->add_option("records", records_path, "records.jsonl")->required();
  report_cmd->add_option("--categories", categories_path, "benchmark,category CSV");
  report_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "svg"}));
  report_cmd->add_option("--out", out_dir, "write table/detail/chart files here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(parse_cmd)) return cmd_parse(benchmark);
    if (app.got_subcommand(check_cmd)) return cmd_check(benchmark, solution_file, smt_flag, timeout);
    if (app.got_subcommand(solve_cmd)) return cmd_solve(benchmark, smt_flag, timeout, max_size);
    if (app.got_subcommand(run_cmd))
      return cmd_run(config_path, smt_flag, timeout, run_timeout->count() > 0, jobs, out_dir);
    if (app.got_subcommand(score_cmd)) return cmd_score(records_path, format);
    if (app.got_subcommand(report_cmd))
      return cmd_report(records_path, categories_path, format, out_dir);
  } catch (const sygus::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
