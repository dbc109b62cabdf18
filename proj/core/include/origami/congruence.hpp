#pragma once

// Exact enumeration of a finite presented monoid: dense element ids,
// shortlex-minimal representatives, and both Cayley action tables.  The
// enumeration scans every relation at every class with on-the-fly filling
// and coincidence processing, then standardises so that ids follow
// shortlex discovery order; the result is canonical for a given
// presentation regardless of internal scheduling.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "origami/presentation.hpp"
#include "origami/word.hpp"

namespace origami {

using ElementId = std::uint32_t;

inline constexpr ElementId kIdentity = 0;

struct TcOptions {
  //! Live-class cap; exceeding it on a known-finite input indicates a bug.
  std::size_t element_cap = 2000000;
};

class MonoidTable {
 public:
  MonoidTable() = default;
  MonoidTable(Alphabet alphabet, std::vector<Word> reps,
              std::vector<ElementId> right, std::vector<ElementId> left);

  ElementId size() const { return static_cast<ElementId>(reps_.size()); }
  int rank() const { return alphabet_.rank(); }
  const Alphabet& alphabet() const { return alphabet_; }
  //! "jones" or "origami", inferred from the generator kinds.
  std::string family() const;

  const Word& rep(ElementId e) const { return reps_[e]; }
  const std::vector<Word>& reps() const { return reps_; }

  //! Element of reps[e] * g.
  ElementId right(ElementId e, int letter) const {
    return right_[static_cast<std::size_t>(e) * ngens_
                  + static_cast<std::size_t>(letter)];
  }
  //! Element of g * reps[e].
  ElementId left(ElementId e, int letter) const {
    return left_[static_cast<std::size_t>(e) * ngens_
                 + static_cast<std::size_t>(letter)];
  }

  //! Folds w through the right Cayley table from the identity.
  ElementId element_of(const Word& w) const;
  //! Element of reps[a] * reps[b].
  ElementId product(ElementId a, ElementId b) const;

  friend bool operator==(const MonoidTable&, const MonoidTable&) = default;

 private:
  Alphabet alphabet_;
  std::size_t ngens_ = 0;
  std::vector<Word> reps_;
  std::vector<ElementId> right_;  // size * ngens, row-major
  std::vector<ElementId> left_;
};

//! Enumerates the finite quotient of p.  Deterministic; throws BudgetError
//! if the element cap is exceeded.
MonoidTable tc_enumerate(const Presentation& p, TcOptions options = {});

//! Cache schema: {"family", "n", "size", "reps", "right_cayley",
//! "left_cayley"}; reps are word token strings.
void save_monoid_json(const MonoidTable& m, std::ostream& out);
MonoidTable load_monoid_json(std::istream& in);

}  // namespace origami
