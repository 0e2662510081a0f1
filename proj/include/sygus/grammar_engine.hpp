#pragma once

#include <map>
#include <optional>
#include <unordered_set>

#include "sygus/eval.hpp"
#include "sygus/problem.hpp"

namespace sygus {

// Syntactic membership: is t derivable from g's start nonterminal?
// (Constant S) matches any literal of sort S, including the (- k) spelling
// of negative integers; (Variable S) matches any parameter of sort S;
// let skeletons match let terms structurally (same bound names, same
// binding count).
bool derives(const Grammar& g, const Params& params, const TermPtr& t);
bool derives(const Grammar& g, const Params& params, const std::string& nonterminal,
             const TermPtr& t);

// Pull-based bottom-up enumerator.  Yields terms in nondecreasing size
// order; within one size, production order then lexicographic recursion
// over argument sizes.  Single consumer.  When dedup envs are supplied,
// a term whose value vector across them matches an earlier term of the
// same nonterminal is suppressed (observational dedup).
class TermEnumerator {
public:
  TermEnumerator(Grammar g, Params params, std::string start,
                 std::size_t max_size, std::vector<Env> dedup_envs = {});

  std::optional<TermPtr> next();

  std::size_t yielded() const { return yielded_; }

private:
  void fill_size(std::size_t size);
  std::vector<TermPtr> expand(const GTermPtr& node, std::size_t exact_size);
  bool admit(const std::string& nonterminal, const TermPtr& t);

  Grammar grammar_;
  Params params_;
  std::string start_;
  std::size_t max_size_;
  std::vector<Env> dedup_envs_;

  // terms of (nonterminal, exact size); cells_[nt][s], s in 1..max_size_
  std::map<std::string, std::vector<std::vector<TermPtr>>> cells_;
  // structural + observational dedup state per nonterminal
  std::map<std::string, std::unordered_set<std::string>> seen_;
  std::size_t current_size_ = 0;
  std::size_t buffer_pos_ = 0;
  std::size_t yielded_ = 0;
};

// Convenience wrappers over TermEnumerator (start = grammar start).
std::vector<TermPtr> enumerate_terms(const Grammar& g, const Params& params,
                                     std::size_t max_size);
std::vector<TermPtr> enumerate_distinct(const Grammar& g, const Params& params,
                                        std::size_t max_size,
                                        const std::vector<Env>& dedup_envs);

} // namespace sygus
