#include "sygus/harness.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sygus/parser.hpp"
#include "sygus/solver.hpp"
#include "sygus/subprocess.hpp"

namespace sygus {

using nlohmann::json;

namespace {

// Extra seconds a child may run past the wall limit before the hard kill.
constexpr double kGraceSeconds = 2.0;

const std::pair<RunStatus, const char*> kStatusNames[] = {
    {RunStatus::Solved, "Solved"},
    {RunStatus::SyntacticReject, "SyntacticReject"},
    {RunStatus::SemanticReject, "SemanticReject"},
    {RunStatus::IllFormed, "IllFormed"},
    {RunStatus::Timeout, "Timeout"},
    {RunStatus::Crash, "Crash"},
    {RunStatus::Unknown, "Unknown"},
};

} // namespace

std::string run_status_name(RunStatus s) {
  for (const auto& [status, name] : kStatusNames)
    if (status == s) return name;
  return "Unknown";
}

std::optional<RunStatus> run_status_from(const std::string& name) {
  for (const auto& [status, text] : kStatusNames)
    if (name == text) return status;
  return std::nullopt;
}

// ---------------------------------------------------------------- records --

std::string record_to_json(const RunRecord& r) {
  json j;
  j["solver_id"] = r.solver_id;
  j["benchmark_id"] = r.benchmark_id;
  j["status"] = run_status_name(r.status);
  j["wall_seconds"] = r.wall_seconds;
  if (r.solution_text) j["solution_text"] = *r.solution_text;
  if (r.solution_size) j["solution_size"] = *r.solution_size;
  return j.dump();
}

void append_record(const std::string& path, const RunRecord& r) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for append");
  out << record_to_json(r) << '\n';
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<RunRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");

  std::vector<RunRecord> records;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& what) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
    };

    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) fail("malformed record line");

    RunRecord r;
    try {
      r.solver_id = j.at("solver_id").get<std::string>();
      r.benchmark_id = j.at("benchmark_id").get<std::string>();
      auto status = run_status_from(j.at("status").get<std::string>());
      if (!status) fail("unknown status '" + j.at("status").get<std::string>() + "'");
      r.status = *status;
      r.wall_seconds = j.at("wall_seconds").get<double>();
      if (j.contains("solution_text") && !j["solution_text"].is_null())
        r.solution_text = j["solution_text"].get<std::string>();
      if (j.contains("solution_size") && !j["solution_size"].is_null())
        r.solution_size = j["solution_size"].get<std::size_t>();
    } catch (const json::exception& e) {
      fail(std::string("malformed record: ") + e.what());
    }
    if (r.wall_seconds < 0) fail("negative wall_seconds");
    if (!seen.insert({r.solver_id, r.benchmark_id}).second)
      fail("duplicate record for (" + r.solver_id + ", " + r.benchmark_id + ")");
    records.push_back(std::move(r));
  }
  return records;
}

std::string records_to_csv(const std::vector<RunRecord>& records) {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  };
  std::ostringstream out;
  out << "solver_id,benchmark_id,status,wall_seconds,solution_text,solution_size\n";
  for (const RunRecord& r : records) {
    out << cell(r.solver_id) << ',' << cell(r.benchmark_id) << ','
        << run_status_name(r.status) << ',' << json(r.wall_seconds).dump() << ','
        << (r.solution_text ? cell(*r.solution_text) : "") << ','
        << (r.solution_size ? std::to_string(*r.solution_size) : "") << '\n';
  }
  return out.str();
}

// ----------------------------------------------------------------- config --

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");

  RunConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    auto fail = [&](const std::string& what) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
    };
    std::string_view sv(line);
    auto hash = sv.find('#');
    if (hash != std::string_view::npos) sv = sv.substr(0, hash);
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    sv = trim(sv);
    if (sv.empty()) continue;
    auto eq = sv.find('=');
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    std::string key(trim(sv.substr(0, eq)));
    std::string value(trim(sv.substr(eq + 1)));

    if (key == "benchmark") {
      if (value.empty()) fail("benchmark path is empty");
      cfg.benchmarks.push_back(value);
    } else if (key == "solver") {
      // "<id> <command template>"; the command word "builtin" selects the
      // in-process reference solver.
      auto space = value.find_first_of(" \t");
      if (space == std::string::npos) fail("expected 'solver = <id> <command>'");
      SolverSpec spec;
      spec.id = value.substr(0, space);
      spec.command = std::string(trim(value.substr(space + 1)));
      if (spec.command == "builtin") spec.builtin = true;
      cfg.solvers.push_back(std::move(spec));
    } else if (key == "wall_limit") {
      try { cfg.wall_limit_seconds = std::stod(value); }
      catch (...) { fail("wall_limit is not a number"); }
      if (cfg.wall_limit_seconds <= 0) fail("wall_limit must be positive");
    } else if (key == "memory_mb") {
      try { cfg.memory_mb = std::stoul(value); }
      catch (...) { fail("memory_mb is not a number"); }
      if (*cfg.memory_mb == 0) fail("memory_mb must be positive");
    } else if (key == "workers") {
      try { cfg.workers = std::stoul(value); }
      catch (...) { fail("workers is not a number"); }
      if (cfg.workers < 1) fail("workers must be at least 1");
    } else if (key == "out") {
      cfg.out_dir = value;
    } else if (key == "smt") {
      cfg.smt_command = value;
    } else {
      fail("unknown config key '" + key + "'");
    }
  }
  return cfg;
}

// ------------------------------------------------------------------ suite --

namespace {

std::string benchmark_id_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

// Map a two-stage check verdict onto a run status.
RunStatus status_of(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Valid: return RunStatus::Solved;
    case Verdict::Kind::SyntacticReject: return RunStatus::SyntacticReject;
    case Verdict::Kind::Invalid: return RunStatus::SemanticReject;
    case Verdict::Kind::IllFormed: return RunStatus::IllFormed;
    case Verdict::Kind::Unknown: return RunStatus::Unknown;
  }
  return RunStatus::Unknown;
}

// Run the two postprocessors on claimed output and fill the record.
// Never charges time to the solver's wall clock.
void check_claim(RunRecord& r, const Problem& p, const std::string& output, SmtSession& smt) {
  try {
    std::vector<Candidate> cands = parse_candidates(output, p);
    std::string text;
    std::size_t size = 0;
    for (const Candidate& c : cands) {
      if (!text.empty()) text += '\n';
      text += print_candidate(c);
      size += c.body->size();
    }
    r.solution_text = text;
    r.solution_size = size;
  } catch (const ParseError&) {
    r.status = RunStatus::IllFormed;
    return;
  }
  try {
    r.status = status_of(check_solution(p, output, smt).kind);
  } catch (const SmtError&) {
    r.status = RunStatus::Unknown;
  }
  if (r.status == RunStatus::IllFormed) {
    r.solution_text.reset();
    r.solution_size.reset();
  }
}

RunRecord run_builtin(const Problem& p, const std::string& solver_id,
                      const std::string& benchmark_id, const RunConfig& cfg, SmtSession& smt) {
  RunRecord r;
  r.solver_id = solver_id;
  r.benchmark_id = benchmark_id;

  Budget budget;
  budget.wall_seconds = cfg.wall_limit_seconds;
  auto start = std::chrono::steady_clock::now();
  try {
    SolveResult res = solve(p, budget, smt);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    switch (res.kind) {
      case SolveResult::Kind::TimedOut:
        r.status = RunStatus::Timeout;
        return r;
      case SolveResult::Kind::Exhausted:
        r.status = RunStatus::Unknown;
        return r;
      case SolveResult::Kind::Solved:
        break;
    }
    std::string text;
    for (const Candidate& c : res.candidates) {
      if (!text.empty()) text += '\n';
      text += print_candidate(c);
    }
    check_claim(r, p, text, smt);
  } catch (const SmtError&) {
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.status = RunStatus::Unknown;
  } catch (const std::exception&) {
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.status = RunStatus::Crash;
  }
  return r;
}

RunRecord run_external(const SolverSpec& spec, const Problem& p, const std::string& bench_path,
                       const std::string& benchmark_id, const RunConfig& cfg, SmtSession& smt) {
  RunRecord r;
  r.solver_id = spec.id;
  r.benchmark_id = benchmark_id;

  std::vector<std::string> argv = shell_split(spec.command);
  for (std::string& word : argv) {
    std::size_t at;
    while ((at = word.find("{benchmark}")) != std::string::npos)
      word.replace(at, std::strlen("{benchmark}"), bench_path);
  }

  RunOutput out = run_with_limits(argv, cfg.wall_limit_seconds + kGraceSeconds, cfg.memory_mb);
  r.wall_seconds = out.wall_seconds;
  if (out.spawn_failed) {
    r.status = RunStatus::Crash;
    return r;
  }
  if (out.timed_out || out.wall_seconds > cfg.wall_limit_seconds) {
    r.status = RunStatus::Timeout;
    return r;
  }
  std::string claim = out.stdout_text;
  bool blank = claim.find_first_not_of(" \t\r\n") == std::string::npos;
  if (blank) {
    r.status = out.exit_code == 0 ? RunStatus::Unknown : RunStatus::Crash;
    return r;
  }
  check_claim(r, p, claim, smt);
  return r;
}

} // namespace

std::vector<RunRecord> run_suite(const RunConfig& cfg) {
  if (cfg.wall_limit_seconds <= 0) throw std::invalid_argument("wall limit must be positive");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be at least 1");
  {
    std::set<std::string> ids;
    for (const SolverSpec& s : cfg.solvers)
      if (!ids.insert(s.id).second)
        throw std::invalid_argument("duplicate solver id '" + s.id + "'");
  }

  // Every benchmark must parse before any run starts.
  std::vector<Problem> problems;
  std::vector<std::string> ids;
  problems.reserve(cfg.benchmarks.size());
  for (const std::string& path : cfg.benchmarks) {
    problems.push_back(parse_problem_file(path));
    ids.push_back(benchmark_id_of(path));
  }

  std::string records_path;
  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    records_path = (std::filesystem::path(cfg.out_dir) / "records.jsonl").string();
  }

  struct Task {
    std::size_t solver;
    std::size_t bench;
  };
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < cfg.solvers.size(); s++)
    for (std::size_t b = 0; b < cfg.benchmarks.size(); b++) tasks.push_back({s, b});

  std::vector<RunRecord> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex sink;
  std::atomic<bool> failed{false};
  std::string failure;

  auto worker = [&]() {
    try {
      SmtConfig smt_cfg;
      smt_cfg.command = resolve_smt_command(cfg.smt_command);
      SmtSession smt(smt_cfg);
      while (!failed.load()) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        const Task& t = tasks[i];
        const SolverSpec& spec = cfg.solvers[t.solver];
        RunRecord r = spec.builtin
            ? run_builtin(problems[t.bench], spec.id, ids[t.bench], cfg, smt)
            : run_external(spec, problems[t.bench], cfg.benchmarks[t.bench], ids[t.bench], cfg,
                           smt);
        std::lock_guard<std::mutex> lock(sink);
        if (!records_path.empty()) append_record(records_path, r);
        results[i] = std::move(r);
      }
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(sink);
      if (!failed.exchange(true)) failure = e.what();
    }
  };

  if (cfg.workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < cfg.workers; w++) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failed.load()) throw std::runtime_error("run_suite worker failed: " + failure);
  return results;
}

} // namespace sygus
