#include "sygus/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "sygus/grammar_engine.hpp"
#include "sygus/parser.hpp"

namespace sygus {

// -------------------------------------------------------- decision trees --

DecisionTree DecisionTree::leaf(TermPtr term) {
  DecisionTree t;
  t.term_ = std::move(term);
  return t;
}

DecisionTree DecisionTree::node(TermPtr pred, DecisionTree then_branch, DecisionTree else_branch) {
  DecisionTree t;
  t.pred_ = std::move(pred);
  t.then_ = std::make_shared<DecisionTree>(std::move(then_branch));
  t.else_ = std::make_shared<DecisionTree>(std::move(else_branch));
  return t;
}

TermPtr flatten(const DecisionTree& t) {
  if (t.is_leaf()) return t.term();
  return Term::apply("ite", {t.pred(), flatten(t.then_branch()), flatten(t.else_branch())});
}

// ------------------------------------------------------------- learn_tree --

namespace {

double entropy(const std::vector<std::size_t>& labels, const std::vector<std::size_t>& active) {
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t j : active) counts[labels[j]]++;
  if (counts.size() <= 1) return 0.0;
  double h = 0, n = static_cast<double>(active.size());
  for (const auto& [label, count] : counts) {
    double share = count / n;
    h -= share * std::log(share);
  }
  return h;
}

DecisionTree build_tree(const CoverMatrix& m, const std::vector<PredRow>& preds,
                        const std::vector<std::size_t>& labels,
                        const std::vector<std::size_t>& active) {
  for (std::size_t i = 0; i < m.terms.size(); i++) {
    bool covers_all = std::all_of(active.begin(), active.end(),
                                  [&](std::size_t j) { return m.covers[i][j]; });
    if (covers_all) return DecisionTree::leaf(m.terms[i]);
  }

  constexpr double eps = 1e-12;
  double base = entropy(labels, active);
  double best_gain = -1;
  std::size_t best = preds.size();
  for (std::size_t k = 0; k < preds.size(); k++) {
    std::size_t trues = 0;
    for (std::size_t j : active) trues += preds[k].truth[j] ? 1 : 0;
    if (trues == 0 || trues == active.size()) continue;  // does not split

    std::vector<std::size_t> yes, no;
    for (std::size_t j : active) (preds[k].truth[j] ? yes : no).push_back(j);
    double n = static_cast<double>(active.size());
    double gain =
        base - (yes.size() / n) * entropy(labels, yes) - (no.size() / n) * entropy(labels, no);

    bool better = gain > best_gain + eps;
    if (!better && std::abs(gain - best_gain) <= eps && best < preds.size())
      better = preds[k].pred->size() < preds[best].pred->size();
    if (better) {
      best_gain = gain;
      best = k;
    }
  }
  if (best == preds.size())
    throw NoSeparator("no predicate separates the remaining points");

  std::vector<std::size_t> yes, no;
  for (std::size_t j : active) (preds[best].truth[j] ? yes : no).push_back(j);
  return DecisionTree::node(preds[best].pred, build_tree(m, preds, labels, yes),
                            build_tree(m, preds, labels, no));
}

} // namespace

DecisionTree learn_tree(const CoverMatrix& m, const std::vector<PredRow>& preds) {
  std::vector<std::size_t> labels(m.point_count);
  std::vector<std::size_t> active(m.point_count);
  for (std::size_t j = 0; j < m.point_count; j++) {
    active[j] = j;
    bool found = false;
    for (std::size_t i = 0; i < m.terms.size() && !found; i++) {
      if (m.covers[i][j]) {
        labels[j] = i;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("learn_tree: point not covered by any term");
  }
  return build_tree(m, preds, labels, active);
}

// ------------------------------------------------------------------ solve --

namespace {

struct Deadline {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double limit;

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  bool expired() const { return elapsed() >= limit; }
};

bool mentions(const TermPtr& t, const std::string& name) {
  if (t->kind() == TermKind::Apply && t->name() == name) return true;
  for (const auto& a : t->args())
    if (mentions(a, name)) return true;
  return false;
}

void collect_applications(const TermPtr& t, const std::string& name,
                          std::vector<std::vector<TermPtr>>& out) {
  if (t->kind() == TermKind::Apply && t->name() == name) {
    bool known = std::any_of(out.begin(), out.end(), [&](const std::vector<TermPtr>& list) {
      if (list.size() != t->args().size()) return false;
      for (std::size_t i = 0; i < list.size(); i++)
        if (!structurally_equal(list[i], t->args()[i])) return false;
      return true;
    });
    if (!known) out.push_back(t->args());
  }
  for (const auto& a : t->args()) collect_applications(a, name, out);
}

std::string point_key(const Env& e) {
  std::string key;
  for (const auto& [name, value] : e.vars) {
    key += name;
    key += '=';
    key += value.to_text();
    key += ';';
  }
  return key;
}

// The per-round working state of one synthesis attempt.
struct Synth {
  const Problem& q;
  const SynthFun& f;
  const Grammar& grammar;
  const Budget& budget;
  const Deadline& deadline;
  SolveStats& stats;

  std::vector<std::vector<TermPtr>> arg_lists;
  bool single_invocation = false;
  // Whether the target occurs nested inside its own arguments.  Terms that
  // agree on every first-order binding can still differ under composition,
  // so observational dedup is off in that case.
  bool nested = false;
  std::vector<Env> points;

  Candidate as_candidate(TermPtr body) const {
    return Candidate{f.name, f.params, f.return_sort, std::move(body)};
  }

  bool covers(const TermPtr& body, const Env& point) const {
    return holds_at(q, {as_candidate(body)}, point);
  }

  // Parameter environment for evaluating candidate bodies and predicates
  // at a point, under one concrete argument list.
  Env binding(const std::vector<TermPtr>& args, const Env& point) const {
    Env full = point;
    full.defined_funs = &q.defined_funs;
    Env b;
    b.defined_funs = &q.defined_funs;
    for (std::size_t i = 0; i < f.params.size(); i++)
      b.vars[f.params[i].first] = eval(args[i], full);
    return b;
  }

  std::vector<Env> dedup_envs() const {
    std::vector<Env> out;
    for (const auto& args : arg_lists) {
      bool recursive = std::any_of(args.begin(), args.end(),
                                   [&](const TermPtr& a) { return mentions(a, f.name); });
      if (recursive) continue;
      for (const Env& p : points) out.push_back(binding(args, p));
    }
    return out;
  }

  std::optional<TermPtr> smallest_term() {
    TermEnumerator en(grammar, f.params, grammar.start, budget.max_term_size);
    auto t = en.next();
    stats.terms_enumerated += en.yielded();
    return t;
  }

  std::optional<TermPtr> whole_term_candidate(bool& timed_out) {
    TermEnumerator en(grammar, f.params, grammar.start, budget.max_term_size,
                      nested ? std::vector<Env>{} : dedup_envs());
    while (auto t = en.next()) {
      if (deadline.expired()) {
        timed_out = true;
        stats.terms_enumerated += en.yielded();
        return std::nullopt;
      }
      bool all = std::all_of(points.begin(), points.end(),
                             [&](const Env& p) { return covers(*t, p); });
      if (all) {
        stats.terms_enumerated += en.yielded();
        return *t;
      }
    }
    stats.terms_enumerated += en.yielded();
    return std::nullopt;
  }

  std::vector<TermPtr> comparison_preds(const std::vector<TermPtr>& terms) const {
    std::vector<TermPtr> out;
    Sort s = f.return_sort;
    std::vector<std::string> ops;
    if (s.is_int()) ops = {"<=", "="};
    else if (s.is_bitvec()) ops = {"bvule", "="};
    else ops = {"="};
    for (const TermPtr& a : terms) {
      for (const TermPtr& b : terms) {
        if (a->size() + b->size() + 1 > budget.max_pred_size) continue;
        for (const std::string& op : ops) out.push_back(Term::apply(op, {a, b}));
      }
    }
    return out;
  }

  std::optional<TermPtr> unify_candidate(bool& timed_out) {
    std::vector<Env> binds;
    for (const Env& p : points) binds.push_back(binding(arg_lists[0], p));

    CoverMatrix m;
    m.point_count = points.size();
    std::vector<bool> covered(points.size(), false);
    std::size_t uncovered = points.size();

    TermEnumerator en(grammar, f.params, grammar.start, budget.max_term_size, binds);
    while (uncovered > 0) {
      if (deadline.expired()) {
        timed_out = true;
        stats.terms_enumerated += en.yielded();
        return std::nullopt;
      }
      auto t = en.next();
      if (!t) break;
      std::vector<bool> row(points.size());
      bool useful = false;
      for (std::size_t j = 0; j < points.size(); j++) {
        row[j] = covers(*t, points[j]);
        if (row[j]) {
          useful = true;
          if (!covered[j]) {
            covered[j] = true;
            uncovered--;
          }
        }
      }
      if (useful) {
        m.terms.push_back(*t);
        m.covers.push_back(std::move(row));
      }
    }
    stats.terms_enumerated += en.yielded();
    if (uncovered > 0) return std::nullopt;  // the grammar cannot cover these points

    // Predicate stream: the first Bool nonterminal when the grammar has
    // one, else comparisons between the already-enumerated terms.
    const Production* bool_nt = nullptr;
    for (const Production& prod : grammar.productions) {
      if (prod.sort == Sort::boolean()) {
        bool_nt = &prod;
        break;
      }
    }
    std::optional<TermEnumerator> pred_en;
    std::vector<TermPtr> pool;
    std::size_t pool_pos = 0;
    if (bool_nt)
      pred_en.emplace(grammar, f.params, bool_nt->nonterminal, budget.max_pred_size, binds);
    else
      pool = comparison_preds(m.terms);

    auto next_pred = [&]() -> std::optional<TermPtr> {
      if (pred_en) return pred_en->next();
      if (pool_pos < pool.size()) return pool[pool_pos++];
      return std::nullopt;
    };

    std::vector<PredRow> preds;
    while (true) {
      if (deadline.expired()) {
        timed_out = true;
        return std::nullopt;
      }
      try {
        TermPtr body = flatten(learn_tree(m, preds));
        // A unified tree must stay inside the grammar (the ite composition
        // is only legal when the grammar provides it).
        if (!derives(grammar, f.params, body)) return std::nullopt;
        return body;
      } catch (const NoSeparator&) {
        bool grew = false;
        for (int i = 0; i < 32; i++) {
          auto pred = next_pred();
          if (!pred) break;
          stats.preds_enumerated++;
          PredRow row;
          row.pred = *pred;
          for (const Env& b : binds) row.truth.push_back(eval(*pred, b).as_bool());
          preds.push_back(std::move(row));
          grew = true;
        }
        if (!grew) return std::nullopt;  // predicate pool exhausted
      }
    }
  }
};

} // namespace

SolveResult solve(const Problem& original, const Budget& budget, SmtSession& smt) {
  if (original.synth_funs.size() != 1)
    throw std::invalid_argument("the reference solver supports exactly one synth-fun");

  Problem q = original.inv_constraints.empty() ? original : desugar_inv(original);
  const SynthFun& f = q.synth_funs[0];
  Grammar grammar =
      f.grammar ? *f.grammar : default_grammar(q.logic, f.params, f.return_sort);

  Deadline deadline{std::chrono::steady_clock::now(), budget.wall_seconds};
  SolveResult res;

  Synth synth{q, f, grammar, budget, deadline, res.stats, {}, false, false, {}};
  for (const TermPtr& c : q.constraints) collect_applications(c, f.name, synth.arg_lists);
  synth.single_invocation = synth.arg_lists.size() == 1;
  for (const auto& args : synth.arg_lists)
    for (const TermPtr& a : args)
      if (mentions(a, f.name)) {
        synth.single_invocation = false;
        synth.nested = true;
      }

  std::set<std::string> seen_points;
  auto log = [&](std::string line) { res.stats.round_log.push_back(std::move(line)); };

  while (true) {
    if (res.stats.rounds >= budget.max_rounds) {
      res.kind = SolveResult::Kind::Exhausted;
      log("round budget exhausted");
      break;
    }
    if (deadline.expired()) {
      res.kind = SolveResult::Kind::TimedOut;
      break;
    }
    res.stats.rounds++;

    bool timed_out = false;
    std::optional<TermPtr> body;
    if (synth.points.empty()) body = synth.smallest_term();
    else if (synth.single_invocation) body = synth.unify_candidate(timed_out);
    else body = synth.whole_term_candidate(timed_out);

    if (timed_out) {
      res.kind = SolveResult::Kind::TimedOut;
      break;
    }
    if (!body) {
      res.kind = SolveResult::Kind::Exhausted;
      log("round " + std::to_string(res.stats.rounds) + ": no candidate covers all " +
          std::to_string(synth.points.size()) + " points");
      break;
    }

    Verdict v = verify(q, {synth.as_candidate(*body)}, smt);
    std::string line = "round " + std::to_string(res.stats.rounds) + ": " +
                       std::to_string(synth.points.size()) + " points, candidate " +
                       print_term(*body) + " -> " + verdict_name(v.kind);
    log(line);

    if (v.kind == Verdict::Kind::Valid) {
      res.kind = SolveResult::Kind::Solved;
      res.candidates = {synth.as_candidate(*body)};
      break;
    }
    if (v.kind != Verdict::Kind::Invalid) {
      res.kind = SolveResult::Kind::Exhausted;
      break;
    }

    // verify machine-checked that the counterexample falsifies the
    // candidate; a repeat would mean no progress, so stop rather than loop.
    if (!seen_points.insert(point_key(v.counterexample)).second) {
      res.stats.progress_ok = false;
      res.kind = SolveResult::Kind::Exhausted;
      log("stalled: repeated counterexample");
      break;
    }
    synth.points.push_back(v.counterexample);
  }

  res.stats.points = synth.points.size();
  res.stats.wall_seconds = deadline.elapsed();
  return res;
}

} // namespace sygus
