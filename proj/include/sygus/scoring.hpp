#pragma once

#include "sygus/harness.hpp"

namespace sygus {

// Pseudo-logarithmic competition buckets.
// Time: [0,1) [1,3) [3,10) [10,30) [30,100) [100,300) [300,1000) [1000,3600) [3600,inf)
int time_bucket(double seconds);          // 0..8
// Size: [1,10) [10,30) [30,100) [100,300) [300,1000) [1000,inf)
int size_bucket(std::size_t size);        // 0..5

struct ScoreCard {
  std::string solver_id;
  std::size_t n = 0;       // benchmarks solved
  std::size_t f = 0;       // solved in the minimum time bucket
  std::size_t s = 0;       // solution in the minimum size bucket
  std::size_t unique = 0;  // solved by no other solver

  std::size_t score() const { return 5 * n + 3 * f + s; }
};

struct BenchmarkDetail {
  std::string benchmark_id;
  std::size_t solver_count = 0;              // solvers that solved it
  double min_time = 0, max_time = 0;         // over solvers that solved
  bool max_time_exceeded = false;            // someone hit the wall limit
  std::size_t min_size = 0, max_size = 0;    // over stored solutions
  std::vector<std::string> fastest;          // min time bucket
  std::vector<std::string> smallest;         // min size bucket
};

struct Scoring {
  std::vector<ScoreCard> cards;              // by descending score, then id
  std::vector<BenchmarkDetail> details;      // by benchmark id
};

// Aggregate records into per-solver cards: F and S compare buckets against
// the solvers that solved the benchmark; unsolved statuses contribute
// nothing.
// Throws on duplicate (solver, benchmark) pairs.
Scoring score(const std::vector<RunRecord>& records);

std::string scorecards_to_text(const std::vector<ScoreCard>& cards);
std::string scorecards_to_csv(const std::vector<ScoreCard>& cards);

} // namespace sygus
