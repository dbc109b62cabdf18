#pragma once

// Green's relations on an enumerated monoid.  R- and L-classes are the
// strongly connected components of the right and left Cayley graphs
// (reflexively closed), H their intersection, D the join, and J two-sided
// reachability; D = J is asserted rather than assumed.  Class ids are
// renumbered by least member so the structure is canonical.

#include <cstdint>
#include <optional>
#include <vector>

#include "origami/congruence.hpp"
#include "origami/report.hpp"

namespace origami {

struct GreensStructure {
  std::vector<std::uint32_t> r_class_of;
  std::vector<std::uint32_t> l_class_of;
  std::vector<std::uint32_t> h_class_of;
  std::vector<std::uint32_t> d_class_of;
  std::vector<std::uint32_t> j_class_of;

  std::vector<std::vector<ElementId>> r_members;
  std::vector<std::vector<ElementId>> l_members;
  std::vector<std::vector<ElementId>> h_members;
  std::vector<std::vector<ElementId>> d_members;

  //! leq[a][b] true iff D-class a is below-or-equal b in the ideal order.
  std::vector<std::vector<bool>> d_leq;

  std::size_t r_count() const { return r_members.size(); }
  std::size_t l_count() const { return l_members.size(); }
  std::size_t h_count() const { return h_members.size(); }
  std::size_t d_count() const { return d_members.size(); }

  //! Cover pairs (upper, lower) of the D-order Hasse diagram.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> d_covers() const;
};

GreensStructure compute_greens(const MonoidTable& m);

//! Rows are R-classes, columns L-classes, cells H-classes; rows and
//! columns ordered by least element.
struct EggBox {
  std::vector<std::uint32_t> row_r_classes;
  std::vector<std::uint32_t> col_l_classes;
  std::vector<std::vector<std::vector<ElementId>>> cells;
};

EggBox egg_box(const GreensStructure& g, std::uint32_t d_class);

struct AperiodicityResult {
  bool aperiodic = false;
  //! Max over elements of the least m with a^m = a^{m-1}.
  int max_exponent = 0;
  std::optional<ElementId> witness;  // an element violating aperiodicity
};

AperiodicityResult is_aperiodic(const MonoidTable& m);

//! Every H-class is a singleton and the monoid is aperiodic.
VerifyReport check_h_trivial(const MonoidTable& m, const GreensStructure& g);

//! w * w^R * w = w for every element; for tables of at most pair_limit
//! elements also checks that e -> element_of(reverse(rep(e))) is an
//! anti-automorphism on all pairs.
VerifyReport check_regular_r(const MonoidTable& m,
                             std::size_t pair_limit = 300);

//! Every element is D-related to its core p_alpha(w) p_beta(w).
VerifyReport check_core_d_related(const MonoidTable& m,
                                  const GreensStructure& g);

//! The projection-induced map is a bijection between the D-classes of the
//! origami table and pairs of D-classes of J_n, is an order isomorphism
//! onto the product of two chains, and the class count is
//! (floor(n/2)+1)^2.
VerifyReport check_theorem_main(const MonoidTable& om,
                                const GreensStructure& og,
                                const MonoidTable& jm,
                                const GreensStructure& jg);

}  // namespace origami
