#include "origami/presentation.hpp"

#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace origami {

Relation::Relation(Word u, Word v) {
  if (shortlex_less(u, v)) {
    std::swap(u, v);
  }
  lhs = std::move(u);
  rhs = std::move(v);
}

namespace {

void require_rank(int n) {
  if (n < 2) {
    throw std::invalid_argument("presentation: rank must be at least 2");
  }
}

// Appends u = v if not already present; instantiation order is fixed so
// that builders are deterministic.
void add_relation(std::vector<Relation>& rels, std::set<std::pair<Word, Word>>& seen,
                  Word u, Word v) {
  Relation r(std::move(u), std::move(v));
  if (seen.insert({r.lhs, r.rhs}).second) {
    rels.push_back(std::move(r));
  }
}

}  // namespace

Presentation jones_presentation(int n) {
  require_rank(n);
  Presentation p{jones_alphabet(n), {}};
  std::set<std::pair<Word, Word>> seen;
  // (B) h_i h_j h_i = h_i, |i-j| = 1
  for (int i = 1; i <= n - 1; ++i) {
    for (int j : {i + 1, i - 1}) {
      if (j >= 1 && j <= n - 1) {
        add_relation(p.relations, seen, {h(i), h(j), h(i)}, {h(i)});
      }
    }
  }
  // (C) h_i^2 = h_i
  for (int i = 1; i <= n - 1; ++i) {
    add_relation(p.relations, seen, {h(i), h(i)}, {h(i)});
  }
  // (D) h_i h_j = h_j h_i, |i-j| >= 2
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      add_relation(p.relations, seen, {h(i), h(j)}, {h(j), h(i)});
    }
  }
  return p;
}

namespace {

Generator gen(Kind kind, int i) { return {kind, i}; }

Generator barred(Generator g) {
  return {g.kind == Kind::Alpha ? Kind::Beta : Kind::Alpha, g.index};
}

Word gg(Generator a) { return {a, barred(a)}; }  // gamma_i gamma_i-bar

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& w : parts) {
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

}  // namespace

Presentation origami_presentation(int n, bool include_redundant) {
  require_rank(n);
  Presentation p{origami_alphabet(n), {}};
  std::set<std::pair<Word, Word>> seen;
  auto& rels = p.relations;
  const Kind kinds[] = {Kind::Alpha, Kind::Beta};

  // (1) gamma_i^2 = gamma_i
  for (Kind k : kinds) {
    for (int i = 1; i <= n - 1; ++i) {
      Generator g = gen(k, i);
      add_relation(rels, seen, {g, g}, {g});
    }
  }
  // (2) gamma_i gamma_{i+1} gamma_i = gamma_i
  for (Kind k : kinds) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      add_relation(rels, seen, {gen(k, i), gen(k, i + 1), gen(k, i)},
                   {gen(k, i)});
    }
  }
  // (3) gamma_i gamma_{i-1} gamma_i = gamma_i
  for (Kind k : kinds) {
    for (int i = 2; i <= n - 1; ++i) {
      add_relation(rels, seen, {gen(k, i), gen(k, i - 1), gen(k, i)},
                   {gen(k, i)});
    }
  }
  // (4) gamma_i bar(gamma_j) = bar(gamma_j) gamma_i, i != j
  for (Kind k : kinds) {
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        if (i == j) {
          continue;
        }
        Generator a = gen(k, i);
        Generator b = barred(gen(k, j));
        add_relation(rels, seen, {a, b}, {b, a});
      }
    }
  }
  // (5) gamma_i gamma_j = gamma_j gamma_i, |i-j| >= 2
  for (Kind k : kinds) {
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j) {
        add_relation(rels, seen, {gen(k, i), gen(k, j)},
                     {gen(k, j), gen(k, i)});
      }
    }
  }
  // (1a) (gamma_i bar(gamma_i))^2 = gamma_i bar(gamma_i)
  for (Kind k : kinds) {
    for (int i = 1; i <= n - 1; ++i) {
      Word x = gg(gen(k, i));
      add_relation(rels, seen, concat({x, x}), x);
    }
  }
  // (2a), (3a)  gamma_i bar(gamma_i) gamma_j bar(gamma_j) gamma_i
  //             bar(gamma_i) = gamma_i bar(gamma_i) for j = i +- 1
  for (int step : {+1, -1}) {
    for (Kind k : kinds) {
      for (int i = 1; i <= n - 1; ++i) {
        int j = i + step;
        if (j < 1 || j > n - 1) {
          continue;
        }
        Word x = gg(gen(k, i));
        Word y = gg(gen(k, j));
        add_relation(rels, seen, concat({x, y, x}), x);
      }
    }
  }
  // (2b), (3b)  with gamma_i bar(gamma_i) gamma_i in place of the pair
  if (include_redundant) {
    for (int step : {+1, -1}) {
      for (Kind k : kinds) {
        for (int i = 1; i <= n - 1; ++i) {
          int j = i + step;
          if (j < 1 || j > n - 1) {
            continue;
          }
          Generator a = gen(k, i);
          Generator b = gen(k, j);
          Word x = {a, barred(a), a};
          Word y = {b, barred(b), b};
          add_relation(rels, seen, concat({x, y, x}), x);
        }
      }
    }
  }
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out;
  for (const Relation& r : p.relations) {
    out += format_word(r.lhs);
    out += " = ";
    out += format_word(r.rhs);
    out += '\n';
  }
  return out;
}

Presentation parse_presentation(std::istream& in) {
  std::vector<Relation> rels;
  int rank = 2;
  std::vector<Kind> kinds;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("parse_presentation: missing '=' in line: "
                                  + line);
    }
    Word u = parse_word(line.substr(0, eq));
    Word v = parse_word(line.substr(eq + 1));
    for (const Word* w : {&u, &v}) {
      for (Generator g : *w) {
        rank = std::max(rank, g.index + 1);
        if (std::find(kinds.begin(), kinds.end(), g.kind) == kinds.end()) {
          kinds.push_back(g.kind);
        }
      }
    }
    rels.emplace_back(std::move(u), std::move(v));
  }
  if (kinds.empty()) {
    kinds.push_back(Kind::H);
  }
  return Presentation{Alphabet(rank, kinds), std::move(rels)};
}

}  // namespace origami
