#pragma once

#include <optional>

#include "sygus/verifier.hpp"

namespace sygus {

struct SolverSpec {
  std::string id;
  std::string command;  // {benchmark} expands to the benchmark path
  bool builtin = false; // run the in-process reference solver instead
};

enum class RunStatus {
  Solved, SyntacticReject, SemanticReject, IllFormed, Timeout, Crash, Unknown
};

std::string run_status_name(RunStatus s);
std::optional<RunStatus> run_status_from(const std::string& name);

struct RunRecord {
  std::string solver_id;
  std::string benchmark_id;
  RunStatus status = RunStatus::Unknown;
  double wall_seconds = 0;
  std::optional<std::string> solution_text;   // printed candidate(s)
  std::optional<std::size_t> solution_size;   // total term_size
};

struct RunConfig {
  std::vector<std::string> benchmarks;   // .sl paths; id = basename sans .sl
  std::vector<SolverSpec> solvers;
  double wall_limit_seconds = 3600;
  std::optional<std::size_t> memory_mb;
  std::size_t workers = 1;
  std::string out_dir;                   // records.jsonl is appended here
  std::string smt_command;               // backend for verification
};

// Key-value text file: benchmark/solver lines repeat, the rest are scalar.
RunConfig load_run_config(const std::string& path);

// Run every (solver, benchmark) pair under the wall limit, verify emitted
// solutions, and append one JSON line per record as it completes.
// Verification time is not charged to the solver's wall clock.
std::vector<RunRecord> run_suite(const RunConfig& cfg);

// JSON-lines persistence.  Duplicate (solver, benchmark) pairs and
// malformed lines are errors naming the line number.
std::vector<RunRecord> load_records(const std::string& path);
void append_record(const std::string& path, const RunRecord& r);
std::string record_to_json(const RunRecord& r);

// CSV export with the same columns as the JSON fields.
std::string records_to_csv(const std::vector<RunRecord>& records);

} // namespace sygus
