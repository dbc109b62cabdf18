#include "origami/jones.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace origami {

namespace {

void check_planarity(int n, const std::vector<int>& match) {
  // Non-crossing in circular order <=> openers nest like parentheses.
  std::vector<int> stack;
  for (int p = 0; p < 2 * n; ++p) {
    if (match[p] > p) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != match[p]) {
        throw std::invalid_argument("JonesDiagram: matching is not planar");
      }
      stack.pop_back();
    }
  }
}

}  // namespace

JonesDiagram::JonesDiagram(int rank, std::vector<int> matching)
    : rank_(rank), match_(std::move(matching)) {
  if (rank_ < 1) {
    throw std::invalid_argument("JonesDiagram: rank must be positive");
  }
  if (match_.size() != static_cast<std::size_t>(2 * rank_)) {
    throw std::invalid_argument("JonesDiagram: matching has wrong size");
  }
  for (int p = 0; p < 2 * rank_; ++p) {
    int q = match_[p];
    if (q < 0 || q >= 2 * rank_ || q == p || match_[q] != p) {
      throw std::invalid_argument("JonesDiagram: not a perfect matching");
    }
  }
  check_planarity(rank_, match_);
}

JonesDiagram JonesDiagram::unchecked(int rank, std::vector<int> matching) {
  JonesDiagram d;
  d.rank_ = rank;
  d.match_ = std::move(matching);
  return d;
}

JonesDiagram JonesDiagram::identity(int n) {
  if (n < 1) {
    throw std::invalid_argument("identity diagram: rank must be positive");
  }
  std::vector<int> m(2 * n);
  for (int j = 1; j <= n; ++j) {
    m[top(j, n)] = bottom(j, n);
    m[bottom(j, n)] = top(j, n);
  }
  return unchecked(n, std::move(m));
}

JonesDiagram JonesDiagram::generator(int i, int n) {
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("generator diagram: index out of range");
  }
  std::vector<int> m(2 * n);
  for (int j = 1; j <= n; ++j) {
    m[top(j, n)] = bottom(j, n);
    m[bottom(j, n)] = top(j, n);
  }
  m[top(i, n)] = top(i + 1, n);
  m[top(i + 1, n)] = top(i, n);
  m[bottom(i, n)] = bottom(i + 1, n);
  m[bottom(i + 1, n)] = bottom(i, n);
  return unchecked(n, std::move(m));
}

int JonesDiagram::cap_count() const {
  int count = 0;
  for (int p = 0; p < rank_; ++p) {
    if (match_[p] < rank_ && match_[p] > p) {
      ++count;
    }
  }
  return count;
}

JonesDiagram JonesDiagram::transpose() const {
  // Conjugate by p -> 2n-1-p, which swaps T_j and B_j.
  int m = 2 * rank_;
  std::vector<int> out(m);
  for (int p = 0; p < m; ++p) {
    out[m - 1 - p] = m - 1 - match_[p];
  }
  return unchecked(rank_, std::move(out));
}

MulResult diagram_mul(const JonesDiagram& a, const JonesDiagram& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("diagram_mul: rank mismatch");
  }
  const int n = a.rank();
  // Walk paths through the interface (a's bottom row glued to b's top
  // row).  External endpoints are a's top and b's bottom.
  std::vector<char> seen(n + 1, 0);  // interface strands 1..n
  std::vector<int> match(2 * n, -1);

  // Returns the exit endpoint (a's top or b's bottom, shared coding).
  auto trace = [&](bool start_in_a, int pos) {
    bool in_a = start_in_a;
    int cur = pos;
    while (true) {
      int q = in_a ? a.partner(cur) : b.partner(cur);
      if (in_a) {
        if (q < n) {
          return q;  // exits at a's top
        }
        int strand = 2 * n - q;
        seen[strand] = 1;
        in_a = false;
        cur = JonesDiagram::top(strand, n);
      } else {
        if (q >= n) {
          return q;  // exits at b's bottom
        }
        int strand = q + 1;
        seen[strand] = 1;
        in_a = true;
        cur = JonesDiagram::bottom(strand, n);
      }
    }
  };

  for (int j = 1; j <= n; ++j) {
    int p = JonesDiagram::top(j, n);
    if (match[p] == -1) {
      int q = trace(true, p);
      match[p] = q;
      match[q] = p;
    }
    int p2 = JonesDiagram::bottom(j, n);
    if (match[p2] == -1) {
      int q = trace(false, p2);
      match[p2] = q;
      match[q] = p2;
    }
  }

  int loops = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) {
      continue;
    }
    // Trace the closed cycle through unvisited interface strands.
    int cur = s;
    do {
      seen[cur] = 1;
      int qa = a.partner(JonesDiagram::bottom(cur, n));
      int next_strand = 2 * n - qa;  // qa must be on a's bottom row
      seen[next_strand] = 1;
      int qb = b.partner(JonesDiagram::top(next_strand, n));
      cur = qb + 1;  // qb on b's top row
    } while (cur != s);
    ++loops;
  }

  return MulResult{JonesDiagram(n, std::move(match)), loops};
}

JonesDiagram diagram_of_word(const Word& w, int n) {
  JonesDiagram d = JonesDiagram::identity(n);
  for (Generator g : w) {
    if (g.index < 1 || g.index > n - 1) {
      throw std::invalid_argument("diagram_of_word: index out of range");
    }
    d = diagram_mul(d, JonesDiagram::generator(g.index, n)).diagram;
  }
  return d;
}

namespace {

std::string endpoint_name(int p, int n) {
  if (p < n) {
    return "T" + std::to_string(p + 1);
  }
  return "B" + std::to_string(2 * n - p);
}

// Sort key puts T1..Tn before B1..Bn.
std::pair<int, int> endpoint_key(int p, int n) {
  if (p < n) {
    return {0, p + 1};
  }
  return {1, 2 * n - p};
}

}  // namespace

std::string format_diagram(const JonesDiagram& d) {
  const int n = d.rank();
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < 2 * n; ++p) {
    if (endpoint_key(p, n) < endpoint_key(d.partner(p), n)) {
      pairs.push_back({p, d.partner(p)});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [&](auto x, auto y) {
    return endpoint_key(x.first, n) < endpoint_key(y.first, n);
  });
  std::string out = "[";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += '(' + endpoint_name(pairs[i].first, n) + ','
           + endpoint_name(pairs[i].second, n) + ')';
  }
  out += ']';
  return out;
}

JonesDiagram parse_diagram(const std::string& text, int n) {
  std::vector<int> match(2 * n, -1);
  std::string tok;
  auto parse_endpoint = [&](const std::string& s) {
    if (s.size() < 2 || (s[0] != 'T' && s[0] != 'B')) {
      throw std::invalid_argument("parse_diagram: bad endpoint '" + s + "'");
    }
    int j = std::stoi(s.substr(1));
    return s[0] == 'T' ? JonesDiagram::top(j, n) : JonesDiagram::bottom(j, n);
  };
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']' || c == '(' || c == ')' || c == ',') {
      cleaned += ' ';
    } else {
      cleaned += c;
    }
  }
  std::istringstream in(cleaned);
  std::vector<std::string> names;
  while (in >> tok) {
    names.push_back(tok);
  }
  if (names.size() != static_cast<std::size_t>(2 * n)) {
    throw std::invalid_argument("parse_diagram: wrong number of endpoints");
  }
  for (std::size_t i = 0; i < names.size(); i += 2) {
    int p = parse_endpoint(names[i]);
    int q = parse_endpoint(names[i + 1]);
    match[p] = q;
    match[q] = p;
  }
  return JonesDiagram(n, std::move(match));
}

std::size_t JnfWord::length() const {
  std::size_t len = 0;
  for (const JnfBlock& b : blocks) {
    len += static_cast<std::size_t>(b.top - b.bottom + 1);
  }
  return len;
}

Word JnfWord::to_word(Kind kind) const {
  Word out;
  out.reserve(length());
  for (const JnfBlock& b : blocks) {
    for (int i = b.top; i >= b.bottom; --i) {
      out.push_back({kind, i});
    }
  }
  return out;
}

std::vector<JnfWord> enumerate_jnf(int n) {
  if (n < 1) {
    throw std::invalid_argument("enumerate_jnf: rank must be positive");
  }
  std::vector<JnfWord> out;
  std::vector<JnfBlock> blocks;
  // Blocks (j, i) with strictly increasing j's and i's, i <= j <= n-1.
  auto rec = [&](auto&& self, int min_top, int min_bottom) -> void {
    out.push_back(JnfWord{blocks});
    for (int j = min_top; j <= n - 1; ++j) {
      for (int i = min_bottom; i <= j; ++i) {
        blocks.push_back({j, i});
        self(self, j + 1, i + 1);
        blocks.pop_back();
      }
    }
  };
  rec(rec, 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t catalan(int n) {
  if (n < 0) {
    throw std::invalid_argument("catalan: n must be nonnegative");
  }
  if (n > 33) {
    throw std::overflow_error("catalan: value exceeds 64 bits");
  }
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) {
    c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (k + 2);
  }
  return c;
}

JnfTable::JnfTable(int n) : n_(n), forms_(enumerate_jnf(n)) {
  diagrams_.reserve(forms_.size());
  index_.reserve(forms_.size());
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    diagrams_.push_back(diagram_of_word(forms_[i].to_word(Kind::H), n));
    index_.push_back({diagrams_.back().matching(), static_cast<int>(i)});
  }
  std::sort(index_.begin(), index_.end());
  for (std::size_t i = 1; i < index_.size(); ++i) {
    if (index_[i].first == index_[i - 1].first) {
      throw std::logic_error("JnfTable: normal forms are not injective");
    }
  }
}

const JonesDiagram& JnfTable::diagram_of(const JnfWord& f) const {
  auto it = std::lower_bound(forms_.begin(), forms_.end(), f);
  if (it == forms_.end() || *it != f) {
    throw std::invalid_argument("JnfTable: unknown normal form");
  }
  return diagrams_[static_cast<std::size_t>(it - forms_.begin())];
}

const JnfWord& JnfTable::jnf_of(const JonesDiagram& d) const {
  if (d.rank() != n_) {
    throw std::invalid_argument("JnfTable: rank mismatch");
  }
  auto it = std::lower_bound(
      index_.begin(), index_.end(), d.matching(),
      [](const auto& entry, const std::vector<int>& key) {
        return entry.first < key;
      });
  if (it == index_.end() || it->first != d.matching()) {
    throw std::invalid_argument("JnfTable: diagram not found");
  }
  return forms_[static_cast<std::size_t>(it->second)];
}

const JnfWord& JnfTable::jnf_of_reverse(const JnfWord& f) const {
  return jnf_of(diagram_of(f).transpose());
}

}  // namespace origami
