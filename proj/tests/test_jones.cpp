#include <doctest.h>

#include <stdexcept>

#include <map>
#include <random>
#include <set>

#include "origami/congruence.hpp"
#include "origami/jones.hpp"

using namespace origami;

namespace {

std::vector<int> pairs_of(const JonesDiagram& d) { return d.matching(); }

Word random_h_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n - 1);
  Word w;
  for (int i = 0; i < len; ++i) {
    w.push_back(h(idx(rng)));
  }
  return w;
}

}  // namespace

TEST_CASE("identity and generator diagrams") {
  JonesDiagram id2 = JonesDiagram::identity(2);
  CHECK(id2.partner(JonesDiagram::top(1, 2)) == JonesDiagram::bottom(1, 2));
  CHECK(id2.partner(JonesDiagram::top(2, 2)) == JonesDiagram::bottom(2, 2));
  CHECK(id2.cap_count() == 0);

  JonesDiagram g = JonesDiagram::generator(1, 2);
  CHECK(g.partner(JonesDiagram::top(1, 2)) == JonesDiagram::top(2, 2));
  CHECK(g.partner(JonesDiagram::bottom(1, 2)) == JonesDiagram::bottom(2, 2));
  CHECK(g.cap_count() == 1);

  JonesDiagram g24 = JonesDiagram::generator(2, 4);
  CHECK(g24.partner(JonesDiagram::top(2, 4)) == JonesDiagram::top(3, 4));
  CHECK(g24.partner(JonesDiagram::bottom(2, 4)) == JonesDiagram::bottom(3, 4));
  CHECK(g24.partner(JonesDiagram::top(1, 4)) == JonesDiagram::bottom(1, 4));
  CHECK(g24.partner(JonesDiagram::top(4, 4)) == JonesDiagram::bottom(4, 4));

  CHECK_THROWS_AS(JonesDiagram::generator(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(JonesDiagram::generator(4, 4), std::invalid_argument);

  // Constructing all generators re-validates planarity and matching.
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i <= n - 1; ++i) {
      CHECK_NOTHROW(JonesDiagram(n, JonesDiagram::generator(i, n).matching()));
    }
  }
}

TEST_CASE("diagram constructor rejects bad matchings") {
  // Crossing: T1-B2, T2-B1 interleave in circular order.
  std::vector<int> crossing = {2, 3, 0, 1};
  CHECK_THROWS_AS(JonesDiagram(2, crossing), std::invalid_argument);
  std::vector<int> fixed_point = {0, 1, 3, 2};
  CHECK_THROWS_AS(JonesDiagram(2, fixed_point), std::invalid_argument);
}

TEST_CASE("identity law and multiplication examples") {
  for (int n = 2; n <= 5; ++n) {
    JonesDiagram id = JonesDiagram::identity(n);
    for (int i = 1; i <= n - 1; ++i) {
      JonesDiagram g = JonesDiagram::generator(i, n);
      auto left = diagram_mul(id, g);
      auto right = diagram_mul(g, id);
      CHECK(left.diagram == g);
      CHECK(right.diagram == g);
      CHECK(left.loops == 0);
      CHECK(right.loops == 0);
    }
  }

  // h1 * h1 removes one circle in J_2.
  auto sq = diagram_mul(JonesDiagram::generator(1, 2),
                        JonesDiagram::generator(1, 2));
  CHECK(sq.diagram == JonesDiagram::generator(1, 2));
  CHECK(sq.loops == 1);

  // h1 h2 h1 = h1 with no circles in J_3.
  auto first = diagram_mul(JonesDiagram::generator(1, 3),
                           JonesDiagram::generator(2, 3));
  auto second = diagram_mul(first.diagram, JonesDiagram::generator(1, 3));
  CHECK(second.diagram == JonesDiagram::generator(1, 3));
  CHECK(first.loops + second.loops == 0);

  // h1 h3 = h3 h1 in J_4.
  CHECK(diagram_of_word(parse_word("h1 h3"), 4)
        == diagram_of_word(parse_word("h3 h1"), 4));

  CHECK_THROWS_AS(diagram_mul(JonesDiagram::identity(2),
                              JonesDiagram::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("diagram_of_word basics") {
  CHECK(diagram_of_word(Word{}, 3) == JonesDiagram::identity(3));
  CHECK(diagram_of_word(parse_word("h1 h2"), 3)
        != diagram_of_word(parse_word("h2 h1"), 3));
  CHECK_THROWS_AS(diagram_of_word(parse_word("h3"), 3), std::invalid_argument);
}

TEST_CASE("diagram_of_word is a morphism") {
  std::mt19937 rng(17);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      Word u = random_h_word(rng, n, trial % 6);
      Word v = random_h_word(rng, n, (trial / 2) % 6);
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(diagram_of_word(uv, n)
            == diagram_mul(diagram_of_word(u, n), diagram_of_word(v, n))
                   .diagram);
    }
  }
}

TEST_CASE("diagrams are a faithful model of J_n") {
  for (int n = 2; n <= 5; ++n) {
    MonoidTable m = tc_enumerate(jones_presentation(n));
    std::set<std::vector<int>> distinct;
    for (ElementId e = 0; e < m.size(); ++e) {
      distinct.insert(pairs_of(diagram_of_word(m.rep(e), n)));
    }
    CHECK(distinct.size() == m.size());
    CHECK(m.size() == catalan(n));
  }
}

TEST_CASE("all 14 diagrams of J_4 arise from words of length <= 6") {
  std::set<std::vector<int>> seen;
  Word w;
  auto rec = [&](auto&& self) -> void {
    seen.insert(pairs_of(diagram_of_word(w, 4)));
    if (w.size() >= 6) {
      return;
    }
    for (int i = 1; i <= 3; ++i) {
      w.push_back(h(i));
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  CHECK(seen.size() == 14);
}

TEST_CASE("cap counts") {
  CHECK(JonesDiagram::identity(4).cap_count() == 0);
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i <= n - 1; ++i) {
      CHECK(JonesDiagram::generator(i, n).cap_count() == 1);
    }
  }
  CHECK(diagram_of_word(parse_word("h1 h3"), 5).cap_count() == 2);
}

TEST_CASE("transpose is an involution modelling reversal") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_h_word(rng, 5, trial % 7);
    JonesDiagram d = diagram_of_word(w, 5);
    CHECK(d.transpose().transpose() == d);
    CHECK(d.transpose() == diagram_of_word(reverse_word(w), 5));
  }
}

TEST_CASE("jones normal forms") {
  std::vector<JnfWord> two = enumerate_jnf(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].blocks.empty());
  CHECK(two[1].blocks == std::vector<JnfBlock>{{1, 1}});

  std::vector<JnfWord> three = enumerate_jnf(3);
  REQUIRE(three.size() == 5);
  // (1,1)(2,2) spells h1 h2.
  JnfWord h1h2{{{1, 1}, {2, 2}}};
  CHECK(std::find(three.begin(), three.end(), h1h2) != three.end());
  CHECK(h1h2.to_word(Kind::H) == parse_word("h1 h2"));
  JnfWord h2h1{{{2, 1}}};
  CHECK(h2h1.to_word(Kind::H) == parse_word("h2 h1"));

  CHECK(enumerate_jnf(6).size() == 132);
  for (int n = 2; n <= 7; ++n) {
    CHECK(enumerate_jnf(n).size() == catalan(n));
  }
}

TEST_CASE("normal forms biject with diagrams") {
  for (int n = 2; n <= 6; ++n) {
    // The constructor itself verifies injectivity of form -> diagram.
    JnfTable table(n);
    CHECK(table.forms().size() == catalan(n));
    // Every element's diagram is hit: faithful + equal counts.
    MonoidTable m = tc_enumerate(jones_presentation(n));
    for (ElementId e = 0; e < m.size(); ++e) {
      CHECK_NOTHROW(table.jnf_of(diagram_of_word(m.rep(e), n)));
    }
  }
}

TEST_CASE("jnf_of_reverse") {
  JnfTable table(3);
  JnfWord h1h2{{{1, 1}, {2, 2}}};
  JnfWord h2h1{{{2, 1}}};
  CHECK(table.jnf_of_reverse(h1h2) == h2h1);
  CHECK(table.jnf_of_reverse(h2h1) == h1h2);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(4) == 14);
  CHECK(catalan(7) == 429);
  CHECK(catalan(10) == 16796);
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("diagram text form") {
  JonesDiagram g = JonesDiagram::generator(1, 3);
  CHECK(format_diagram(g) == "[(T1,T2),(T3,B3),(B1,B2)]");
  CHECK(parse_diagram(format_diagram(g), 3) == g);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    JonesDiagram d = diagram_of_word(random_h_word(rng, 5, 5), 5);
    CHECK(parse_diagram(format_diagram(d), 5) == d);
  }
}
