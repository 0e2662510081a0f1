#pragma once

#include <functional>

#include "sygus/verifier.hpp"

namespace sygus {

struct Budget {
  double wall_seconds = 3600;
  std::size_t max_term_size = 12;
  std::size_t max_pred_size = 9;
  std::size_t max_rounds = 64;
};

// Rows are enumerated terms; covers[i][j] says whether term i makes every
// constraint hold at point j.
struct CoverMatrix {
  std::vector<TermPtr> terms;
  std::vector<std::vector<bool>> covers;
  std::size_t point_count = 0;
};

// A predicate with its truth vector over the current points.
struct PredRow {
  TermPtr pred;
  std::vector<bool> truth;
};

struct NoSeparator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class DecisionTree {
public:
  static DecisionTree leaf(TermPtr term);
  static DecisionTree node(TermPtr pred, DecisionTree then_branch, DecisionTree else_branch);

  bool is_leaf() const { return !pred_; }
  const TermPtr& term() const { return term_; }
  const TermPtr& pred() const { return pred_; }
  const DecisionTree& then_branch() const { return *then_; }
  const DecisionTree& else_branch() const { return *else_; }

private:
  TermPtr term_;  // leaf payload
  TermPtr pred_;
  std::shared_ptr<const DecisionTree> then_, else_;
};

// ID3-style unification: greedily split on the predicate with maximal
// information gain (natural-log entropy over the point-label multiset,
// labels = first covering term).  Ties go to the smaller predicate, then
// enumeration order.  Throws NoSeparator when no predicate splits a mixed
// point set.  Pre: every point is covered by some row.
DecisionTree learn_tree(const CoverMatrix& m, const std::vector<PredRow>& preds);

// Nested-ite form of a tree; derivable from the grammar whenever the
// leaves and predicates are and the grammar has an ite alternative.
TermPtr flatten(const DecisionTree& t);

struct SolveStats {
  std::size_t rounds = 0;
  std::size_t points = 0;
  std::size_t terms_enumerated = 0;
  std::size_t preds_enumerated = 0;
  double wall_seconds = 0;
  bool progress_ok = true;  // every cex was uncovered and fresh when added
  std::vector<std::string> round_log;
};

struct SolveResult {
  enum class Kind { Solved, Exhausted, TimedOut };
  Kind kind = Kind::Exhausted;
  std::vector<Candidate> candidates;  // Solved
  SolveStats stats;
};

// CEGIS with divide-and-conquer unification for single-invocation
// problems; whole-term enumeration otherwise.  Single synth-fun only.
// Invariant problems are desugared on entry.
SolveResult solve(const Problem& p, const Budget& budget, SmtSession& smt);

} // namespace sygus
