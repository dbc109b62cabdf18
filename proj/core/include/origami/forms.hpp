#pragma once

// Origami-specific structure: the alpha/beta projections and the core,
// regular forms (one canonical gamma1*u*v*gamma2 word per element, chosen
// by form priority), the restricted candidate generator behind the
// normal-form count check, and the identity/submonoid verification sweeps.

#include <cstdint>
#include <optional>
#include <vector>

#include "origami/congruence.hpp"
#include "origami/jones.hpp"
#include "origami/report.hpp"
#include "origami/word.hpp"

namespace origami {

//! Deletes all beta letters, preserving order.  Throws on h-kind letters.
Word p_alpha(const Word& w);
//! Deletes all alpha letters.
Word p_beta(const Word& w);
//! p_alpha(w) concatenated with p_beta(w).
Word core_word(const Word& w);

enum class FormTag { UV, G1UV, UVG2, G1UVG2 };

//! The canonical gamma1 u v gamma2 writing of one element: u over alpha
//! and v over beta in Jones normal form, gamma1 = beta_i matching the
//! first letter of u, gamma2 = alpha_j matching the last letter of v.
struct RegularForm {
  std::optional<Generator> gamma1;
  JnfWord u;
  JnfWord v;
  std::optional<Generator> gamma2;
  FormTag tag = FormTag::UV;

  Word word() const;
};

//! Regular form of every element of an enumerated origami monoid, indexed
//! by element id.  One global pass over at most 4*C_n^2 candidates; throws
//! std::logic_error if any element receives no candidate.
std::vector<RegularForm> compute_regular_forms(const MonoidTable& m);

////////////////////////////////////////////////////////////////////////
// Restriction predicates for the conjectured normal forms.  The first
// group constrains a form with a leading beta_i (i = index of the first
// letter of u); the mirrored group constrains a trailing alpha_j and is
// obtained from the first by reversal symmetry, implemented on the
// transposed Jones diagram.
////////////////////////////////////////////////////////////////////////

//! Tops of consecutive blocks increase by exactly one.
bool jnf_tops_consecutive(const JnfWord& w);
//! Bottoms of consecutive blocks increase by exactly one.
bool jnf_bottoms_consecutive(const JnfWord& w);

//! Case (1..4) of the leading-gamma restriction satisfied by a nonempty v
//! relative to i, or 0 if none:
//!   1: v = b_i;  2: one block with top i-1;  3: first two tops are i-1
//!   and i+1, later tops consecutive;  4: singleton blocks ascending from
//!   i+1.
int leading_case(const JnfWord& v, int i);
//! Extra condition attached to case 1: bottoms of u consecutive and
//! ending at i.
bool leading_case1_extra(const JnfWord& u, int i);

//! Mirrored case for a nonempty u relative to j under a trailing alpha_j.
int trailing_case(const JnfWord& u, int j, const JnfTable& jnf);
//! Mirror of the case-1 extra, on v.
bool trailing_case1_extra(const JnfWord& v, int j, const JnfTable& jnf);

//! All candidate normal-form words for O_n, shortlex-sorted and
//! deduplicated.  |result| equals |O_n| for n = 3, 4.
std::vector<Word> conjecture_candidates(int n);

//! Element equalities of the derived identities, checked over every valid
//! index instance: (a) g'_i g_i g'_j g_j g'_i = g'_i g_i g_j, (b)
//! g'_i g_i g_j g'_i = rhs, (c) g'_i g_i g'_i g_j = rhs for |i-j| = 1,
//! plus contextual commutation: (i) both-sided g_m a_i b_i = g_m b_i a_i
//! for |m-i| >= 2 and (ii) x a_i b_i y = x b_i a_i y for all generators
//! x, y.
VerifyReport verify_identities(const MonoidTable& m);

//! The alpha- and beta-generated submonoids have Catalan(n) elements and
//! the index-preserving letter maps onto J_n are isomorphisms.
VerifyReport verify_submonoids(const MonoidTable& m);

//! p_alpha and p_beta are well-defined on elements: checked on every
//! defining relation, and exhaustively on all equal word pairs up to
//! max_len when exhaustive_len > 0.
VerifyReport verify_projections(const MonoidTable& m, int exhaustive_len = 0);

struct ConjectureReport {
  VerifyReport report;
  std::uint64_t candidates = 0;
  std::uint64_t monoid_size = 0;
  std::uint64_t distinct_elements = 0;  // elements hit by some candidate
  std::uint64_t collisions = 0;         // candidate pairs mapping together
  bool counts_match = false;
  bool injective = false;
};

//! Compares |conjecture_candidates(n)| with |O_n| and measures
//! injectivity.  Asserted for n = 3, 4 (failures reported); for larger n
//! the numbers are reported without assertion.
ConjectureReport verify_conjecture(const MonoidTable& m);

}  // namespace origami
