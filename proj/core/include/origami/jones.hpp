#pragma once

// Faithful diagram model of the Jones monoid J_n: non-crossing perfect
// matchings on n top and n bottom points, multiplied by stacking with loop
// removal.  Endpoints are coded 0..2n-1 in boundary circular order
// T1..Tn, Bn..B1, so planarity is a balanced-nesting check.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "origami/word.hpp"

namespace origami {

class JonesDiagram {
 public:
  //! Matching must be a fixed-point-free involution of 0..2n-1 that is
  //! planar in the circular order; throws std::invalid_argument otherwise.
  JonesDiagram(int rank, std::vector<int> matching);

  static JonesDiagram identity(int n);
  //! The generator h_i: caps T_i-T_{i+1} and B_i-B_{i+1}, lines elsewhere.
  static JonesDiagram generator(int i, int n);

  int rank() const { return rank_; }
  //! Partner of endpoint p in circular coding.
  int partner(int p) const { return match_[p]; }
  const std::vector<int>& matching() const { return match_; }

  //! Number of pairs with both endpoints on the top row (equals the
  //! number of bottom-row pairs).
  int cap_count() const;

  //! Top-bottom flip; models word reversal in J_n.
  JonesDiagram transpose() const;

  friend bool operator==(const JonesDiagram&, const JonesDiagram&) = default;

  //! Circular position of T_j (j in 1..n).
  static int top(int j, int /*n*/) { return j - 1; }
  //! Circular position of B_j.
  static int bottom(int j, int n) { return 2 * n - j; }

 private:
  JonesDiagram() = default;
  static JonesDiagram unchecked(int rank, std::vector<int> matching);

  int rank_ = 0;
  std::vector<int> match_;

  friend struct DiagramMul;
};

struct MulResult {
  JonesDiagram diagram;
  int loops;  // closed circles removed by the stacking
};

//! Stacks a on top of b, identifying a's bottom row with b's top row.
MulResult diagram_mul(const JonesDiagram& a, const JonesDiagram& b);

//! Left-to-right product of generator diagrams; loops are discarded.
//! The word must be over h-kind letters with indices < n.
JonesDiagram diagram_of_word(const Word& w, int n);

//! Text form "[(T1,T2),(T3,B3),(B1,B2)]", pairs normalised by sorting.
std::string format_diagram(const JonesDiagram& d);
JonesDiagram parse_diagram(const std::string& text, int n);

//! One block h[j,i] = h_j h_{j-1} ... h_i of a Jones normal form.
struct JnfBlock {
  int top;     // j
  int bottom;  // i <= j

  friend constexpr auto operator<=>(const JnfBlock&, const JnfBlock&)
      = default;
};

//! A word h[j_1,i_1]...h[j_k,i_k] with strictly increasing tops and
//! bottoms; the unique normal form of a J_n element.
struct JnfWord {
  std::vector<JnfBlock> blocks;

  bool empty() const { return blocks.empty(); }
  std::size_t length() const;
  //! Index of the first letter (= blocks.front().top); blocks must be
  //! nonempty.
  int first_index() const { return blocks.front().top; }
  //! Index of the last letter (= blocks.back().bottom).
  int last_index() const { return blocks.back().bottom; }

  Word to_word(Kind kind) const;

  friend auto operator<=>(const JnfWord&, const JnfWord&) = default;
};

//! All Jones normal forms for rank n, in increasing block-sequence order;
//! exactly catalan(n) of them.
std::vector<JnfWord> enumerate_jnf(int n);

//! C_n = binom(2n, n) / (n + 1).
std::uint64_t catalan(int n);

//! Bijection between diagrams and normal forms for one rank.
class JnfTable {
 public:
  explicit JnfTable(int n);

  int rank() const { return n_; }
  const std::vector<JnfWord>& forms() const { return forms_; }
  const JonesDiagram& diagram_of(const JnfWord& f) const;
  //! Normal form of a diagram; throws if the diagram has a different rank.
  const JnfWord& jnf_of(const JonesDiagram& d) const;
  //! Normal form of the reversed element, computed on the transposed
  //! diagram.
  const JnfWord& jnf_of_reverse(const JnfWord& f) const;

 private:
  int n_;
  std::vector<JnfWord> forms_;
  std::vector<JonesDiagram> diagrams_;
  std::vector<std::pair<std::vector<int>, int>> index_;  // matching -> form
};

}  // namespace origami
