#pragma once

// Generators, words and the fixed shortlex order used throughout:
// a1 < a2 < ... < a{n-1} < b1 < ... < b{n-1}, and h1 < ... < h{n-1} for
// the one-sorted Jones alphabet.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace origami {

enum class Kind : std::uint8_t { Alpha = 0, Beta = 1, H = 2 };

//! A typed generator symbol: a kind (alpha, beta or h) and a 1-based index.
struct Generator {
  Kind kind;
  int  index;

  friend constexpr auto operator<=>(const Generator&, const Generator&)
      = default;
};

constexpr Generator alpha(int i) { return {Kind::Alpha, i}; }
constexpr Generator beta(int i) { return {Kind::Beta, i}; }
constexpr Generator h(int i) { return {Kind::H, i}; }

//! A word is a finite sequence of generators; the empty word is the
//! identity.
using Word = std::vector<Generator>;

//! Swaps alpha_i <-> beta_i letterwise; throws std::invalid_argument on
//! h-kind letters. An involution.
Word bar(const Word& w);

//! The reversal w^R. An involution commuting with bar.
Word reverse_word(Word w);

//! Shortlex: shorter first, then lexicographic in the fixed generator
//! order.
std::strong_ordering shortlex_compare(const Word& a, const Word& b);

bool shortlex_less(const Word& a, const Word& b);

//! True if every letter has index in [1, rank - 1].
bool valid_for_rank(const Word& w, int rank);

//! Token form: "a1 b2", "h3"; the empty word prints as "1".
std::string format_word(const Word& w);

//! Inverse of format_word; throws std::invalid_argument on bad tokens.
Word parse_word(const std::string& text);

std::string format_generator(Generator g);

//! The ordered, dense letter coding of the generators in play for a fixed
//! rank: alpha block first, then beta, or the single h block.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(int rank, std::vector<Kind> kinds);

  int rank() const { return rank_; }
  const std::vector<Kind>& kinds() const { return kinds_; }
  int size() const { return static_cast<int>(kinds_.size()) * (rank_ - 1); }

  //! Dense id in [0, size()) respecting the generator order.
  int id(Generator g) const;
  Generator generator(int id) const;

  bool contains(Generator g) const;

  std::vector<int> letters_of(const Word& w) const;
  Word word_of(const std::vector<int>& letters) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int rank_ = 2;
  std::vector<Kind> kinds_;
};

//! Alphabet of the Jones monoid J_n (h-kind letters only).
Alphabet jones_alphabet(int n);

//! Alphabet of the origami monoid O_n (alpha and beta letters).
Alphabet origami_alphabet(int n);

}  // namespace origami
