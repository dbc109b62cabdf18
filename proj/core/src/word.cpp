#include "origami/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace origami {

Word bar(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Generator g : w) {
    if (g.kind == Kind::H) {
      throw std::invalid_argument("bar: h-kind letter has no bar image");
    }
    out.push_back({g.kind == Kind::Alpha ? Kind::Beta : Kind::Alpha, g.index});
  }
  return out;
}

Word reverse_word(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

std::strong_ordering shortlex_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    return a.size() <=> b.size();
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != std::strong_ordering::equal) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

bool shortlex_less(const Word& a, const Word& b) {
  return shortlex_compare(a, b) == std::strong_ordering::less;
}

bool valid_for_rank(const Word& w, int rank) {
  return std::all_of(w.begin(), w.end(), [rank](Generator g) {
    return g.index >= 1 && g.index <= rank - 1;
  });
}

std::string format_generator(Generator g) {
  char c = g.kind == Kind::Alpha ? 'a' : g.kind == Kind::Beta ? 'b' : 'h';
  return c + std::to_string(g.index);
}

std::string format_word(const Word& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += format_generator(w[i]);
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") {
      continue;  // identity token contributes no letters
    }
    Kind kind;
    switch (tok[0]) {
      case 'a': kind = Kind::Alpha; break;
      case 'b': kind = Kind::Beta; break;
      case 'h': kind = Kind::H; break;
      default:
        throw std::invalid_argument("parse_word: bad token '" + tok + "'");
    }
    std::size_t pos = 0;
    int index = 0;
    try {
      index = std::stoi(tok.substr(1), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_word: bad token '" + tok + "'");
    }
    if (pos + 1 != tok.size() || index < 1) {
      throw std::invalid_argument("parse_word: bad token '" + tok + "'");
    }
    out.push_back({kind, index});
  }
  return out;
}

Alphabet::Alphabet(int rank, std::vector<Kind> kinds)
    : rank_(rank), kinds_(std::move(kinds)) {
  if (rank_ < 2) {
    throw std::invalid_argument("Alphabet: rank must be at least 2");
  }
  std::sort(kinds_.begin(), kinds_.end());
  kinds_.erase(std::unique(kinds_.begin(), kinds_.end()), kinds_.end());
  if (kinds_.empty()) {
    throw std::invalid_argument("Alphabet: no kinds given");
  }
}

int Alphabet::id(Generator g) const {
  auto it = std::find(kinds_.begin(), kinds_.end(), g.kind);
  if (it == kinds_.end() || g.index < 1 || g.index > rank_ - 1) {
    throw std::invalid_argument("Alphabet: generator "
                                + format_generator(g) + " not in alphabet");
  }
  auto block = static_cast<int>(it - kinds_.begin());
  return block * (rank_ - 1) + (g.index - 1);
}

Generator Alphabet::generator(int id) const {
  if (id < 0 || id >= size()) {
    throw std::invalid_argument("Alphabet: letter id out of range");
  }
  return {kinds_[id / (rank_ - 1)], id % (rank_ - 1) + 1};
}

bool Alphabet::contains(Generator g) const {
  return std::find(kinds_.begin(), kinds_.end(), g.kind) != kinds_.end()
         && g.index >= 1 && g.index <= rank_ - 1;
}

std::vector<int> Alphabet::letters_of(const Word& w) const {
  std::vector<int> out;
  out.reserve(w.size());
  for (Generator g : w) {
    out.push_back(id(g));
  }
  return out;
}

Word Alphabet::word_of(const std::vector<int>& letters) const {
  Word out;
  out.reserve(letters.size());
  for (int l : letters) {
    out.push_back(generator(l));
  }
  return out;
}

Alphabet jones_alphabet(int n) { return Alphabet(n, {Kind::H}); }

Alphabet origami_alphabet(int n) {
  return Alphabet(n, {Kind::Alpha, Kind::Beta});
}

}  // namespace origami
