#pragma once

#include <map>

#include "sygus/eval.hpp"
#include "sygus/subprocess.hpp"

namespace sygus {

// Raised when the backend process dies, cannot be spawned, or produces
// output we cannot interpret.  Distinct from a solver "unknown".
struct SmtError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SmtConfig {
  std::string command;             // backend command line, e.g. "z3 -in"
  double query_timeout_seconds = 60;
  std::string logic_override;      // empty = per-query logic
};

// Resolve the backend command: explicit flag value, then SYGUS_SMT_SOLVER,
// then the build-time fallback.  Throws SmtError when nothing is available.
std::string resolve_smt_command(const std::string& flag_value = "");

struct SmtResult {
  enum class Kind { Unsat, Sat, Unknown };
  Kind kind = Kind::Unknown;
  std::map<std::string, Value> model;  // Sat only; absent names defaulted by caller
  std::string reason;                  // Unknown detail ("timeout", solver text)
};

// One persistent backend process speaking SMT-LIB2 on stdin/stdout, used
// for one query at a time.  Queries are separated by (reset); a timed-out
// query kills the process and the next query respawns it.
class SmtSession {
public:
  explicit SmtSession(SmtConfig config);
  ~SmtSession();

  // Emit: (set-logic logic), declarations, (assert (not formula)) when
  // negate is true (else plain assert), (check-sat), and on sat a
  // (get-model) parsed back per the declared sorts.
  SmtResult check(const std::string& logic, const Params& decls,
                  const TermPtr& formula, bool negate);

  const SmtConfig& config() const { return config_; }

private:
  void ensure_started();
  // Text before the sentinel; nullopt when the deadline passed (the
  // backend is killed so the next query respawns it).
  std::optional<std::string> read_until_sentinel(const std::string& sentinel, double timeout);

  SmtConfig config_;
  Subprocess proc_;
  unsigned seq_ = 0;
};

// SMT-LIB2 text for a term (bit-vector sorts in (_ BitVec w) form, string
// ops in the modern spellings the backend expects).
std::string term_to_smt2(const TermPtr& t);

} // namespace sygus
