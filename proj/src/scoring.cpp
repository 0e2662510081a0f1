#include "sygus/scoring.hpp"

#include <algorithm>
#include <cstring>
#include <iomanip>
#include <set>
#include <sstream>

namespace sygus {

int time_bucket(double seconds) {
  static const double edges[] = {1, 3, 10, 30, 100, 300, 1000, 3600};
  int idx = 0;
  for (double edge : edges)
    if (seconds >= edge) idx++;
  return idx;
}

int size_bucket(std::size_t size) {
  static const std::size_t edges[] = {10, 30, 100, 300, 1000};
  int idx = 0;
  for (std::size_t edge : edges)
    if (size >= edge) idx++;
  return idx;
}

Scoring score(const std::vector<RunRecord>& records) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const RunRecord& r : records)
    if (!seen.insert({r.solver_id, r.benchmark_id}).second)
      throw std::invalid_argument("duplicate record for (" + r.solver_id + ", " +
                                  r.benchmark_id + ")");

  // Every solver that appears gets a card, even with nothing solved.
  std::map<std::string, ScoreCard> cards;
  for (const RunRecord& r : records) cards[r.solver_id].solver_id = r.solver_id;

  std::map<std::string, std::vector<const RunRecord*>> by_benchmark;
  for (const RunRecord& r : records) by_benchmark[r.benchmark_id].push_back(&r);

  Scoring out;
  for (const auto& [bench, rows] : by_benchmark) {
    BenchmarkDetail d;
    d.benchmark_id = bench;

    std::vector<const RunRecord*> solved;
    for (const RunRecord* r : rows) {
      if (r->status == RunStatus::Solved) solved.push_back(r);
      if (r->status == RunStatus::Timeout) d.max_time_exceeded = true;
    }
    d.solver_count = solved.size();

    if (!solved.empty()) {
      int min_tb = 9, min_sb = 6;
      bool have_size = false;
      d.min_time = d.max_time = solved.front()->wall_seconds;
      for (const RunRecord* r : solved) {
        d.min_time = std::min(d.min_time, r->wall_seconds);
        d.max_time = std::max(d.max_time, r->wall_seconds);
        min_tb = std::min(min_tb, time_bucket(r->wall_seconds));
        if (r->solution_size) {
          std::size_t size = *r->solution_size;
          if (!have_size) {
            d.min_size = d.max_size = size;
            have_size = true;
          } else {
            d.min_size = std::min(d.min_size, size);
            d.max_size = std::max(d.max_size, size);
          }
          min_sb = std::min(min_sb, size_bucket(size));
        }
      }
      for (const RunRecord* r : solved) {
        ScoreCard& card = cards[r->solver_id];
        card.n++;
        if (solved.size() == 1) card.unique++;
        if (time_bucket(r->wall_seconds) == min_tb) {
          card.f++;
          d.fastest.push_back(r->solver_id);
        }
        if (r->solution_size && size_bucket(*r->solution_size) == min_sb) {
          card.s++;
          d.smallest.push_back(r->solver_id);
        }
      }
      std::sort(d.fastest.begin(), d.fastest.end());
      std::sort(d.smallest.begin(), d.smallest.end());
    }
    out.details.push_back(std::move(d));
  }
  std::sort(out.details.begin(), out.details.end(),
            [](const BenchmarkDetail& a, const BenchmarkDetail& b) {
              return a.benchmark_id < b.benchmark_id;
            });

  for (auto& [id, card] : cards) out.cards.push_back(card);
  std::sort(out.cards.begin(), out.cards.end(), [](const ScoreCard& a, const ScoreCard& b) {
    if (a.score() != b.score()) return a.score() > b.score();
    return a.solver_id < b.solver_id;
  });
  return out;
}

std::string scorecards_to_text(const std::vector<ScoreCard>& cards) {
  std::size_t id_width = std::strlen("solver");
  for (const ScoreCard& c : cards) id_width = std::max(id_width, c.solver_id.size());

  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(id_width)) << "solver" << std::right
      << std::setw(7) << "N" << std::setw(7) << "F" << std::setw(7) << "S" << std::setw(8)
      << "unique" << std::setw(8) << "score" << '\n';
  for (const ScoreCard& c : cards) {
    out << std::left << std::setw(static_cast<int>(id_width)) << c.solver_id << std::right
        << std::setw(7) << c.n << std::setw(7) << c.f << std::setw(7) << c.s << std::setw(8)
        << c.unique << std::setw(8) << c.score() << '\n';
  }
  return out.str();
}

std::string scorecards_to_csv(const std::vector<ScoreCard>& cards) {
  std::ostringstream out;
  out << "solver_id,n,f,s,unique,score\n";
  for (const ScoreCard& c : cards)
    out << c.solver_id << ',' << c.n << ',' << c.f << ',' << c.s << ',' << c.unique << ','
        << c.score() << '\n';
  return out.str();
}

} // namespace sygus
