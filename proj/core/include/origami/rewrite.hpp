#pragma once

// Shortlex-oriented string rewriting and Knuth-Bendix completion.
//
// Every stored rule is strictly shortlex-decreasing, so rewriting always
// terminates.  Completion resolves overlap critical pairs in shortlex order
// of the overlap word and interreduces as it goes; when the pair queue
// drains the system is confluent and normal forms are canonical (in fact
// shortlex-minimal) representatives.  Completion of an arbitrary
// presentation may not halt within budget, so callers must be prepared for
// complete() == false and fall back to congruence enumeration.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "origami/presentation.hpp"
#include "origami/word.hpp"

namespace origami {

//! Thrown when a configurable resource budget is exhausted.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RewriteRule {
  Word lhs;
  Word rhs;
};

struct KbBudget {
  std::size_t max_rules = 20000;
  std::size_t max_pairs = 1000000;
};

struct RewriteStats {
  std::size_t pairs_processed = 0;
  std::size_t rules_added = 0;
  std::size_t rules_removed = 0;
};

class RewriteSystem {
 public:
  explicit RewriteSystem(Alphabet alphabet);
  //! Validates that every rule is shortlex-decreasing.
  RewriteSystem(Alphabet alphabet, std::vector<RewriteRule> rules,
                bool complete = false, RewriteStats stats = {});

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool complete() const { return complete_; }
  const RewriteStats& stats() const { return stats_; }

  //! Rewrites the leftmost applicable factor, breaking ties at one
  //! position by lowest rule index; absent if the word is irreducible.
  std::optional<Word> rewrite_once(const Word& w) const;

  //! Iterates rewrite_once to a fixed point.  Unique normal form when
  //! complete(); throws BudgetError after step_cap rewrites.
  Word normalize(const Word& w, std::size_t step_cap = 10000000) const;

  bool is_irreducible(const Word& w) const;

 private:
  struct TrieNode {
    std::vector<std::int32_t> next;
    std::int32_t rule = -1;
  };

  void index_rule(std::size_t rule_index);
  //! Lowest-index rule whose lhs starts at position pos, or -1.
  int match_at(const std::vector<int>& letters, std::size_t pos) const;

  Alphabet alphabet_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<int>> lhs_letters_;
  std::vector<std::vector<int>> rhs_letters_;
  std::vector<TrieNode> trie_;
  std::size_t max_lhs_ = 0;
  bool complete_ = false;
  RewriteStats stats_;
};

//! Knuth-Bendix completion of p.  Returns a partial system with
//! complete() == false if a budget is exceeded; deterministic.
RewriteSystem kb_complete(const Presentation& p, KbBudget budget = {});

//! Number of irreducible words (= monoid size); requires a complete
//! system and a finite monoid.  Throws std::logic_error if incomplete and
//! BudgetError if more than cap words are found.
std::uint64_t count_irreducible(const RewriteSystem& rs,
                                std::uint64_t cap = 10000000);

//! The irreducible words themselves, in shortlex order.
std::vector<Word> irreducible_words(const RewriteSystem& rs,
                                    std::uint64_t cap = 10000000);

//! One rule per line with "->"; round-trips with parse_rewrite_system.
std::string format_rewrite_system(const RewriteSystem& rs);
RewriteSystem parse_rewrite_system(std::istream& in, bool complete = false);

}  // namespace origami
