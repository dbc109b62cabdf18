#pragma once

// Finitely presented monoids on the Jones and origami alphabets.  Relations
// are unordered word pairs, fully instantiated for a fixed rank; orienting
// them is the rewriting engine's concern.

#include <iosfwd>
#include <vector>

#include "origami/word.hpp"

namespace origami {

//! An unordered relation u = v, stored with the shortlex-larger side first.
struct Relation {
  Word lhs;
  Word rhs;

  Relation(Word u, Word v);

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
  Alphabet alphabet;
  std::vector<Relation> relations;

  int rank() const { return alphabet.rank(); }
};

//! Jones monoid J_n: h_i h_j h_i = h_i for |i-j| = 1, h_i^2 = h_i, and
//! h_i h_j = h_j h_i for |i-j| >= 2.  Throws std::invalid_argument if n < 2.
Presentation jones_presentation(int n);

//! Origami monoid O_n on alpha/beta letters.  Instantiates idempotence (1),
//! the two Jones-type rules (2), (3), inter-commutation (4), distant
//! commutation (5) and the substituted rules (1a), (2a), (3a); rules (2b)
//! and (3b) are added when include_redundant is true (they follow from the
//! others, so the quotient is unchanged either way).
Presentation origami_presentation(int n, bool include_redundant = true);

//! One relation per line, e.g. "a1 b2 = b2 a1"; round-trips exactly.
std::string format_presentation(const Presentation& p);
Presentation parse_presentation(std::istream& in);

}  // namespace origami
