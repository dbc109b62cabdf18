#include "origami/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace origami {

namespace {

using Letters = std::vector<int>;

bool dense_shortlex_less(const Letters& a, const Letters& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

}  // namespace

////////////////////////////////////////////////////////////////////////
// RewriteSystem
////////////////////////////////////////////////////////////////////////

RewriteSystem::RewriteSystem(Alphabet alphabet)
    : alphabet_(std::move(alphabet)) {
  trie_.push_back(TrieNode{std::vector<std::int32_t>(alphabet_.size(), -1), -1});
}

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<RewriteRule> rules,
                             bool complete, RewriteStats stats)
    : RewriteSystem(std::move(alphabet)) {
  rules_ = std::move(rules);
  complete_ = complete;
  stats_ = stats;
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    if (shortlex_compare(rules_[k].lhs, rules_[k].rhs)
        != std::strong_ordering::greater) {
      throw std::invalid_argument(
          "RewriteSystem: rule is not shortlex-decreasing: "
          + format_word(rules_[k].lhs) + " -> " + format_word(rules_[k].rhs));
    }
    lhs_letters_.push_back(alphabet_.letters_of(rules_[k].lhs));
    rhs_letters_.push_back(alphabet_.letters_of(rules_[k].rhs));
    index_rule(k);
  }
}

void RewriteSystem::index_rule(std::size_t rule_index) {
  const auto& letters = lhs_letters_[rule_index];
  max_lhs_ = std::max(max_lhs_, letters.size());
  std::int32_t node = 0;
  for (int l : letters) {
    std::int32_t next = trie_[node].next[l];
    if (next < 0) {
      next = static_cast<std::int32_t>(trie_.size());
      trie_[node].next[l] = next;
      trie_.push_back(
          TrieNode{std::vector<std::int32_t>(alphabet_.size(), -1), -1});
    }
    node = next;
  }
  if (trie_[node].rule < 0) {
    trie_[node].rule = static_cast<std::int32_t>(rule_index);
  }
}

int RewriteSystem::match_at(const std::vector<int>& letters,
                            std::size_t pos) const {
  std::int32_t node = 0;
  int best = -1;
  for (std::size_t i = pos; i < letters.size(); ++i) {
    node = trie_[node].next[letters[i]];
    if (node < 0) {
      break;
    }
    std::int32_t r = trie_[node].rule;
    if (r >= 0 && (best < 0 || r < best)) {
      best = r;
    }
  }
  return best;
}

std::optional<Word> RewriteSystem::rewrite_once(const Word& w) const {
  Letters letters = alphabet_.letters_of(w);
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    int r = match_at(letters, pos);
    if (r >= 0) {
      Letters out(letters.begin(),
                  letters.begin() + static_cast<std::ptrdiff_t>(pos));
      out.insert(out.end(), rhs_letters_[r].begin(), rhs_letters_[r].end());
      out.insert(out.end(),
                 letters.begin()
                     + static_cast<std::ptrdiff_t>(pos + lhs_letters_[r].size()),
                 letters.end());
      return alphabet_.word_of(out);
    }
  }
  return std::nullopt;
}

Word RewriteSystem::normalize(const Word& w, std::size_t step_cap) const {
  Letters letters = alphabet_.letters_of(w);
  std::size_t from = 0;
  std::size_t steps = 0;
  std::size_t pos = 0;
  while (pos < letters.size()) {
    if (pos < from) {
      pos = from;
    }
    int r = match_at(letters, pos);
    if (r < 0) {
      ++pos;
      continue;
    }
    if (++steps > step_cap) {
      throw BudgetError("normalize: step budget exceeded");
    }
    const auto& lhs = lhs_letters_[r];
    const auto& rhs = rhs_letters_[r];
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(pos),
                  letters.begin() + static_cast<std::ptrdiff_t>(pos + lhs.size()));
    letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos),
                   rhs.begin(), rhs.end());
    // A new redex can only start inside the window reaching the rewrite.
    from = pos + 1 > max_lhs_ ? pos + 1 - max_lhs_ : 0;
    pos = from;
  }
  return alphabet_.word_of(letters);
}

bool RewriteSystem::is_irreducible(const Word& w) const {
  Letters letters = alphabet_.letters_of(w);
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    if (match_at(letters, pos) >= 0) {
      return false;
    }
  }
  return true;
}

////////////////////////////////////////////////////////////////////////
// Knuth-Bendix completion
////////////////////////////////////////////////////////////////////////

namespace {

class KbEngine {
 public:
  KbEngine(const Presentation& p, KbBudget budget)
      : alphabet_(p.alphabet), ngens_(p.alphabet.size()), budget_(budget) {
    trie_.push_back(Node{std::vector<std::int32_t>(ngens_, -1), -1});
    for (const Relation& r : p.relations) {
      equations_.push_back({alphabet_.letters_of(r.lhs),
                            alphabet_.letters_of(r.rhs)});
    }
  }

  RewriteSystem run() {
    bool ok = drain_equations();
    while (ok && !pending_.empty()) {
      if (stats_.pairs_processed >= budget_.max_pairs) {
        ok = false;
        break;
      }
      Pending pr = *pending_.begin();
      pending_.erase(pending_.begin());
      ++stats_.pairs_processed;
      Letters a = normalize(pr.left);
      Letters b = normalize(pr.right);
      if (a != b) {
        equations_.push_back({std::move(a), std::move(b)});
        ok = drain_equations();
      }
    }
    std::vector<RewriteRule> out;
    for (const Rule& r : rules_) {
      if (r.alive) {
        out.push_back(RewriteRule{alphabet_.word_of(r.lhs),
                                  alphabet_.word_of(r.rhs)});
      }
    }
    return RewriteSystem(alphabet_, std::move(out), ok, stats_);
  }

 private:
  struct Rule {
    Letters lhs;
    Letters rhs;
    bool alive = true;
  };

  struct Node {
    std::vector<std::int32_t> next;
    std::int32_t rule = -1;
  };

  struct Pending {
    Letters overlap;
    Letters left;
    Letters right;

    bool operator<(const Pending& o) const {
      if (dense_shortlex_less(overlap, o.overlap)) return true;
      if (dense_shortlex_less(o.overlap, overlap)) return false;
      if (left != o.left) return left < o.left;
      return right < o.right;
    }
  };

  int match_at(const Letters& w, std::size_t pos) const {
    std::int32_t node = 0;
    int best = -1;
    for (std::size_t i = pos; i < w.size(); ++i) {
      node = trie_[node].next[w[i]];
      if (node < 0) {
        break;
      }
      std::int32_t r = trie_[node].rule;
      if (r >= 0 && rules_[static_cast<std::size_t>(r)].alive
          && (best < 0 || r < best)) {
        best = r;
      }
    }
    return best;
  }

  Letters normalize(Letters w) const {
    std::size_t from = 0;
    std::size_t pos = 0;
    while (pos < w.size()) {
      if (pos < from) {
        pos = from;
      }
      int r = match_at(w, pos);
      if (r < 0) {
        ++pos;
        continue;
      }
      const Rule& rule = rules_[static_cast<std::size_t>(r)];
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos),
              w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()));
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), rule.rhs.begin(),
               rule.rhs.end());
      from = pos + 1 > max_lhs_ ? pos + 1 - max_lhs_ : 0;
      pos = from;
    }
    return w;
  }

  void insert_trie(std::size_t rule_index) {
    const Letters& letters = rules_[rule_index].lhs;
    max_lhs_ = std::max(max_lhs_, letters.size());
    std::int32_t node = 0;
    for (int l : letters) {
      std::int32_t next = trie_[node].next[l];
      if (next < 0) {
        next = static_cast<std::int32_t>(trie_.size());
        trie_[node].next[l] = next;
        trie_.push_back(Node{std::vector<std::int32_t>(ngens_, -1), -1});
      }
      node = next;
    }
    trie_[node].rule = static_cast<std::int32_t>(rule_index);
  }

  static bool contains_factor(const Letters& big, const Letters& small) {
    return std::search(big.begin(), big.end(), small.begin(), small.end())
           != big.end();
  }

  void push_overlaps(std::size_t r1, std::size_t r2) {
    const Letters& l1 = rules_[r1].lhs;
    const Letters& l2 = rules_[r2].lhs;
    for (std::size_t ofs = 1; ofs < l1.size(); ++ofs) {
      std::size_t shared = l1.size() - ofs;
      if (shared >= l2.size()) {
        continue;  // containment; impossible between live interreduced rules
      }
      if (!std::equal(l1.begin() + static_cast<std::ptrdiff_t>(ofs), l1.end(),
                      l2.begin())) {
        continue;
      }
      Letters overlap(l1);
      overlap.insert(overlap.end(),
                     l2.begin() + static_cast<std::ptrdiff_t>(shared),
                     l2.end());
      Letters left(rules_[r1].rhs);
      left.insert(left.end(), l2.begin() + static_cast<std::ptrdiff_t>(shared),
                  l2.end());
      Letters right(l1.begin(), l1.begin() + static_cast<std::ptrdiff_t>(ofs));
      right.insert(right.end(), rules_[r2].rhs.begin(), rules_[r2].rhs.end());
      pending_.insert(Pending{std::move(overlap), std::move(left),
                              std::move(right)});
    }
  }

  // Returns false if a budget was hit.
  bool drain_equations() {
    while (!equations_.empty()) {
      auto [u, v] = std::move(equations_.front());
      equations_.pop_front();
      Letters a = normalize(std::move(u));
      Letters b = normalize(std::move(v));
      if (a == b) {
        continue;
      }
      if (dense_shortlex_less(a, b)) {
        std::swap(a, b);
      }
      if (live_rules_ + 1 > budget_.max_rules) {
        return false;
      }
      std::size_t idx = rules_.size();
      rules_.push_back(Rule{std::move(a), std::move(b), true});
      ++live_rules_;
      ++stats_.rules_added;
      insert_trie(idx);
      // Interreduce: any older lhs containing the new lhs dies and is
      // reprocessed; reducible right-hand sides are renormalised in place.
      for (std::size_t k = 0; k < idx; ++k) {
        if (!rules_[k].alive) {
          continue;
        }
        if (contains_factor(rules_[k].lhs, rules_[idx].lhs)) {
          rules_[k].alive = false;
          --live_rules_;
          ++stats_.rules_removed;
          equations_.push_back({rules_[k].lhs, rules_[k].rhs});
        } else if (contains_factor(rules_[k].rhs, rules_[idx].lhs)) {
          rules_[k].rhs = normalize(rules_[k].rhs);
        }
      }
      for (std::size_t k = 0; k < rules_.size(); ++k) {
        if (!rules_[k].alive) {
          continue;
        }
        push_overlaps(idx, k);
        if (k != idx) {
          push_overlaps(k, idx);
        }
      }
    }
    return true;
  }

  Alphabet alphabet_;
  int ngens_;
  KbBudget budget_;
  std::vector<Rule> rules_;
  std::size_t live_rules_ = 0;
  std::vector<Node> trie_;
  std::size_t max_lhs_ = 0;
  std::set<Pending> pending_;
  std::deque<std::pair<Letters, Letters>> equations_;
  RewriteStats stats_;
};

}  // namespace

RewriteSystem kb_complete(const Presentation& p, KbBudget budget) {
  return KbEngine(p, budget).run();
}

////////////////////////////////////////////////////////////////////////
// Irreducible-word enumeration
////////////////////////////////////////////////////////////////////////

namespace {

// Trie over reversed left-hand sides: a word w*g is reducible iff some lhs
// is a suffix of it, checked by walking backwards from the end.
struct SuffixTrie {
  struct Node {
    std::vector<std::int32_t> next;
    bool terminal = false;
  };
  std::vector<Node> nodes;
  int ngens;

  explicit SuffixTrie(const RewriteSystem& rs)
      : ngens(rs.alphabet().size()) {
    nodes.push_back(Node{std::vector<std::int32_t>(ngens, -1), false});
    for (const RewriteRule& r : rs.rules()) {
      auto letters = rs.alphabet().letters_of(r.lhs);
      std::int32_t node = 0;
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        std::int32_t next = nodes[node].next[*it];
        if (next < 0) {
          next = static_cast<std::int32_t>(nodes.size());
          nodes[node].next[*it] = next;
          nodes.push_back(Node{std::vector<std::int32_t>(ngens, -1), false});
        }
        node = next;
      }
      nodes[node].terminal = true;
    }
  }

  bool has_suffix(const std::vector<int>& w) const {
    std::int32_t node = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      node = nodes[node].next[*it];
      if (node < 0) {
        return false;
      }
      if (nodes[node].terminal) {
        return true;
      }
    }
    return false;
  }
};

template <typename Visit>
std::uint64_t walk_irreducible(const RewriteSystem& rs, std::uint64_t cap,
                               Visit visit) {
  if (!rs.complete()) {
    throw std::logic_error(
        "count_irreducible: rewriting system is not complete");
  }
  SuffixTrie suffixes(rs);
  const int ngens = rs.alphabet().size();
  std::deque<std::vector<int>> frontier;
  frontier.push_back({});
  std::uint64_t count = 0;
  while (!frontier.empty()) {
    std::vector<int> w = std::move(frontier.front());
    frontier.pop_front();
    ++count;
    visit(w);
    if (count > cap) {
      throw BudgetError("count_irreducible: word cap exceeded");
    }
    w.push_back(0);
    for (int g = 0; g < ngens; ++g) {
      w.back() = g;
      if (!suffixes.has_suffix(w)) {
        frontier.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

std::uint64_t count_irreducible(const RewriteSystem& rs, std::uint64_t cap) {
  return walk_irreducible(rs, cap, [](const std::vector<int>&) {});
}

std::vector<Word> irreducible_words(const RewriteSystem& rs,
                                    std::uint64_t cap) {
  std::vector<Word> out;
  walk_irreducible(rs, cap, [&](const std::vector<int>& w) {
    out.push_back(rs.alphabet().word_of(w));
  });
  return out;
}

std::string format_rewrite_system(const RewriteSystem& rs) {
  std::string out;
  for (const RewriteRule& r : rs.rules()) {
    out += format_word(r.lhs);
    out += " -> ";
    out += format_word(r.rhs);
    out += '\n';
  }
  return out;
}

RewriteSystem parse_rewrite_system(std::istream& in, bool complete) {
  std::vector<RewriteRule> rules;
  int rank = 2;
  std::vector<Kind> kinds;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw std::invalid_argument("parse_rewrite_system: missing '->'");
    }
    Word lhs = parse_word(line.substr(0, arrow));
    Word rhs = parse_word(line.substr(arrow + 2));
    for (const Word* w : {&lhs, &rhs}) {
      for (Generator g : *w) {
        rank = std::max(rank, g.index + 1);
        if (std::find(kinds.begin(), kinds.end(), g.kind) == kinds.end()) {
          kinds.push_back(g.kind);
        }
      }
    }
    rules.push_back(RewriteRule{std::move(lhs), std::move(rhs)});
  }
  if (kinds.empty()) {
    kinds.push_back(Kind::H);
  }
  return RewriteSystem(Alphabet(rank, kinds), std::move(rules), complete);
}

}  // namespace origami
