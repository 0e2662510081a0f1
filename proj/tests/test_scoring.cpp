#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "sygus/scoring.hpp"

using namespace sygus;

namespace {

RunRecord rec(const std::string& solver, const std::string& bench, RunStatus status,
              double wall, std::optional<std::size_t> size = std::nullopt) {
  RunRecord r;
  r.solver_id = solver;
  r.benchmark_id = bench;
  r.status = status;
  r.wall_seconds = wall;
  r.solution_size = size;
  return r;
}

const ScoreCard& card_of(const Scoring& s, const std::string& solver) {
  for (const ScoreCard& c : s.cards)
    if (c.solver_id == solver) return c;
  throw std::out_of_range("no card for " + solver);
}

// Random records over a fixed roster; roughly half the pairs are solved.
std::vector<RunRecord> random_records(std::mt19937& rng, std::size_t solvers,
                                      std::size_t benchmarks) {
  std::uniform_real_distribution<double> time_dist(0.0, 5000.0);
  std::uniform_int_distribution<std::size_t> size_dist(1, 2000);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<RunRecord> records;
  for (std::size_t s = 0; s < solvers; s++) {
    for (std::size_t b = 0; b < benchmarks; b++) {
      bool solved = coin(rng) == 1;
      records.push_back(rec("s" + std::to_string(s), "b" + std::to_string(b),
                            solved ? RunStatus::Solved : RunStatus::Timeout,
                            solved ? time_dist(rng) : 3600.0,
                            solved ? std::optional<std::size_t>(size_dist(rng)) : std::nullopt));
    }
  }
  return records;
}

} // namespace

TEST_CASE("time buckets follow the half-open competition boundaries") {
  const double edges[] = {1, 3, 10, 30, 100, 300, 1000, 3600};
  CHECK(time_bucket(0.0) == 0);
  for (int i = 0; i < 8; i++) {
    CHECK(time_bucket(edges[i] - 1e-9) == i);
    CHECK(time_bucket(edges[i]) == i + 1);
    CHECK(time_bucket(edges[i] + 1e-9) == i + 1);
  }
  CHECK(time_bucket(3.0) == 2);
  CHECK(time_bucket(138.0) == 5);
  CHECK(time_bucket(3600.0) == 8);
  CHECK(time_bucket(1e9) == 8);
}

TEST_CASE("size buckets follow the half-open competition boundaries") {
  const std::size_t edges[] = {10, 30, 100, 300, 1000};
  CHECK(size_bucket(1) == 0);
  CHECK(size_bucket(3) == 0);
  for (int i = 0; i < 5; i++) {
    CHECK(size_bucket(edges[i] - 1) == i);
    CHECK(size_bucket(edges[i]) == i + 1);
  }
  CHECK(size_bucket(1000) == 5);
  CHECK(size_bucket(100000) == 5);
}

TEST_CASE("score weights are 5N + 3F + S") {
  ScoreCard c;
  c.n = 2;
  c.f = 1;
  c.s = 1;
  CHECK(c.score() == 14);

  auto s = score({
      rec("a", "b1", RunStatus::Solved, 0.5, 5),
      rec("b", "b1", RunStatus::Solved, 0.7, 5),
      rec("a", "b2", RunStatus::Solved, 50.0, 200),
      rec("b", "b2", RunStatus::Solved, 2.0, 12),
  });
  const ScoreCard& a = card_of(s, "a");
  CHECK(a.n == 2);
  CHECK(a.f == 1);
  CHECK(a.s == 1);
  CHECK(a.unique == 0);
  CHECK(a.score() == 14);
  const ScoreCard& b = card_of(s, "b");
  CHECK(b.score() == 18);
  CHECK(s.cards[0].solver_id == "b");  // descending by score
}

TEST_CASE("fastest compares buckets, not raw times") {
  auto s = score({
      rec("a", "t", RunStatus::Solved, 0.8),
      rec("b", "t", RunStatus::Solved, 2.5),
      rec("c", "t", RunStatus::Solved, 120.0),
  });
  CHECK(card_of(s, "a").f == 1);
  CHECK(card_of(s, "b").f == 0);
  CHECK(card_of(s, "c").f == 0);

  // Same bucket, different raw times: both count as fastest.
  auto tie = score({
      rec("a", "t", RunStatus::Solved, 1.1),
      rec("b", "t", RunStatus::Solved, 2.9),
  });
  CHECK(card_of(tie, "a").f == 1);
  CHECK(card_of(tie, "b").f == 1);
}

TEST_CASE("a t2-style benchmark spreads over six buckets") {
  // One solver needs 138 s where the quickest pair answer under a second.
  auto s = score({
      rec("cvc4_2018", "t2", RunStatus::Solved, 0.8, 5),
      rec("eusolver_2017", "t2", RunStatus::Solved, 0.9, 5),
      rec("cvc4_2017", "t2", RunStatus::Solved, 138.0, 5),
  });
  REQUIRE(s.details.size() == 1);
  const BenchmarkDetail& d = s.details[0];
  CHECK(d.solver_count == 3);
  CHECK(d.min_time == doctest::Approx(0.8));
  CHECK(d.max_time == doctest::Approx(138.0));
  CHECK(d.fastest == std::vector<std::string>{"cvc4_2018", "eusolver_2017"});
  CHECK(card_of(s, "cvc4_2017").f == 0);
  CHECK(card_of(s, "cvc4_2017").s == 1);  // same size bucket as everyone
}

TEST_CASE("unsolved statuses contribute nothing") {
  auto s = score({
      rec("a", "t", RunStatus::Timeout, 3600.0),
      rec("b", "t", RunStatus::SemanticReject, 1.0),
      rec("c", "t", RunStatus::Crash, 0.1),
  });
  for (const ScoreCard& c : s.cards) {
    CHECK(c.n == 0);
    CHECK(c.score() == 0);
  }
  REQUIRE(s.details.size() == 1);
  CHECK(s.details[0].solver_count == 0);
  CHECK(s.details[0].fastest.empty());
  CHECK(s.details[0].max_time_exceeded);
}

TEST_CASE("solutions without stored sizes earn no S points") {
  auto s = score({
      rec("a", "t", RunStatus::Solved, 0.5),
      rec("b", "t", RunStatus::Solved, 0.6),
  });
  CHECK(card_of(s, "a").s == 0);
  CHECK(card_of(s, "b").s == 0);
  CHECK(s.details[0].smallest.empty());
}

TEST_CASE("duplicate records are rejected") {
  std::vector<RunRecord> records = {
      rec("a", "t", RunStatus::Solved, 0.5),
      rec("a", "t", RunStatus::Timeout, 3600.0),
  };
  CHECK_THROWS_AS(score(records), std::invalid_argument);
}

TEST_CASE("unique counts benchmarks solved by exactly one solver") {
  std::mt19937 rng(20180701);
  for (int trial = 0; trial < 20; trial++) {
    auto records = random_records(rng, 4, 25);

    std::map<std::string, std::size_t> solvers_per_bench;
    for (const RunRecord& r : records)
      if (r.status == RunStatus::Solved) solvers_per_bench[r.benchmark_id]++;
    std::size_t lone = 0;
    for (const auto& [bench, count] : solvers_per_bench)
      if (count == 1) lone++;

    auto s = score(records);
    std::size_t claimed = 0;
    for (const ScoreCard& c : s.cards) claimed += c.unique;
    CHECK(claimed == lone);
  }
}

TEST_CASE("every solved benchmark names at least one fastest solver") {
  std::mt19937 rng(42);
  auto records = random_records(rng, 5, 40);
  auto s = score(records);
  for (const BenchmarkDetail& d : s.details) {
    if (d.solver_count == 0) {
      CHECK(d.fastest.empty());
      continue;
    }
    CHECK_FALSE(d.fastest.empty());
    CHECK(d.fastest.size() <= d.solver_count);
    CHECK(std::is_sorted(d.fastest.begin(), d.fastest.end()));
  }
}

TEST_CASE("F is invariant under within-bucket time jitter") {
  const double midpoints[] = {0.5, 2.0, 5.0, 20.0, 50.0, 200.0, 500.0, 2000.0, 4000.0};
  std::mt19937 rng(7);
  auto records = random_records(rng, 4, 30);
  auto baseline = score(records);

  auto jittered = records;
  for (RunRecord& r : jittered)
    if (r.status == RunStatus::Solved) r.wall_seconds = midpoints[time_bucket(r.wall_seconds)];
  auto moved = score(jittered);

  REQUIRE(baseline.cards.size() == moved.cards.size());
  for (std::size_t i = 0; i < baseline.cards.size(); i++) {
    CHECK(baseline.cards[i].solver_id == moved.cards[i].solver_id);
    CHECK(baseline.cards[i].f == moved.cards[i].f);
    CHECK(baseline.cards[i].score() == moved.cards[i].score());
  }
}

TEST_CASE("scoring is deterministic and order-insensitive") {
  std::mt19937 rng(99);
  auto records = random_records(rng, 4, 30);

  std::string once = scorecards_to_csv(score(records).cards);
  std::string twice = scorecards_to_csv(score(records).cards);
  CHECK(once == twice);

  auto shuffled = records;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(scorecards_to_csv(score(shuffled).cards) == once);
}

TEST_CASE("scorecard exports carry all five columns") {
  ScoreCard c;
  c.solver_id = "ref";
  c.n = 3;
  c.f = 2;
  c.s = 1;
  c.unique = 1;

  CHECK(scorecards_to_csv({c}) == "solver_id,n,f,s,unique,score\nref,3,2,1,1,22\n");

  std::string text = scorecards_to_text({c});
  CHECK(text.find("solver") != std::string::npos);
  CHECK(text.find("unique") != std::string::npos);
  CHECK(text.find("ref") != std::string::npos);
  CHECK(text.find("22") != std::string::npos);
}
