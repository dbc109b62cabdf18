#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "origami/forms.hpp"
#include "origami/presentation.hpp"

using namespace origami;

namespace {

std::set<Word, decltype(&shortlex_less)> word_set(const std::vector<Word>& v) {
  return {v.begin(), v.end(), &shortlex_less};
}

JnfWord blocks(std::initializer_list<JnfBlock> bs) { return JnfWord{bs}; }

}  // namespace

TEST_CASE("projections and core") {
  CHECK(p_alpha(parse_word("b1 a1 b2")) == parse_word("a1"));
  CHECK(p_beta(parse_word("b1 a1 b2")) == parse_word("b1 b2"));
  CHECK(core_word(parse_word("b1 a1")) == parse_word("a1 b1"));
  CHECK(core_word(parse_word("a1 b1")) == parse_word("a1 b1"));
  CHECK(core_word(parse_word("b1 a1 b1")) == parse_word("a1 b1 b1"));
  CHECK_THROWS_AS(p_alpha(parse_word("h1")), std::invalid_argument);

  MonoidTable o2 = tc_enumerate(origami_presentation(2, true));
  CHECK(o2.element_of(core_word(parse_word("b1 a1 b1")))
        == o2.element_of(parse_word("a1 b1")));
}

TEST_CASE("regular forms of O_2") {
  MonoidTable m = tc_enumerate(origami_presentation(2, true));
  std::vector<RegularForm> forms = compute_regular_forms(m);
  REQUIRE(forms.size() == 7);

  const RegularForm& identity = forms[kIdentity];
  CHECK(identity.tag == FormTag::UV);
  CHECK(identity.u.empty());
  CHECK(identity.v.empty());
  CHECK(identity.word().empty());

  const RegularForm& ba = forms[m.element_of(parse_word("b1 a1"))];
  CHECK(ba.tag == FormTag::G1UV);
  REQUIRE(ba.gamma1.has_value());
  CHECK(*ba.gamma1 == beta(1));
  CHECK(ba.u.to_word(Kind::Alpha) == parse_word("a1"));
  CHECK(ba.v.empty());
  CHECK(!ba.gamma2.has_value());
}

TEST_CASE("regular forms are total, sound and single-valued") {
  for (int n = 2; n <= 4; ++n) {
    MonoidTable m = tc_enumerate(origami_presentation(n, true));
    std::vector<RegularForm> forms = compute_regular_forms(m);
    REQUIRE(forms.size() == m.size());
    std::set<Word, decltype(&shortlex_less)> words(&shortlex_less);
    for (ElementId e = 0; e < m.size(); ++e) {
      Word w = forms[e].word();
      CHECK(m.element_of(w) == e);  // evaluates back to its element
      words.insert(w);
    }
    CHECK(words.size() == m.size());  // pairwise distinct words
  }
}

TEST_CASE("restriction predicates on block sequences") {
  // u = a3 a2 a1 a4 a3 a2 a5 a4: consecutive tops 3, 4, 5.
  JnfWord u_plot1 = blocks({{3, 1}, {4, 2}, {5, 4}});
  CHECK(jnf_tops_consecutive(u_plot1));
  CHECK(u_plot1.to_word(Kind::Alpha)
        == parse_word("a3 a2 a1 a4 a3 a2 a5 a4"));
  CHECK(!jnf_tops_consecutive(blocks({{1, 1}, {3, 3}})));

  // u = a3 a2 a1 a4 a3 a2 a5 a4 a3: bottoms 1, 2, 3 end at i = 3.
  JnfWord u_plot2 = blocks({{3, 1}, {4, 2}, {5, 3}});
  CHECK(leading_case1_extra(u_plot2, 3));
  CHECK(!leading_case1_extra(u_plot2, 2));
  CHECK(!leading_case1_extra(blocks({{2, 1}}), 2));

  // v = b3 b2 b1: one block with top 3 = i - 1 for i = 4.
  JnfWord v_plot3 = blocks({{3, 1}});
  CHECK(leading_case(v_plot3, 4) == 2);
  CHECK(leading_case(v_plot3, 3) == 0);

  // v = b3 b2 b1 b5 b4 b6 b5 b7 b6 for i = 4: tops 3, 5, 6, 7.
  JnfWord v_plot4 = blocks({{3, 1}, {5, 4}, {6, 5}, {7, 6}});
  CHECK(v_plot4.to_word(Kind::Beta)
        == parse_word("b3 b2 b1 b5 b4 b6 b5 b7 b6"));
  CHECK(leading_case(v_plot4, 4) == 3);
  CHECK(leading_case(v_plot4, 5) == 0);

  // v = b3 b4 b5: singletons ascending from i + 1 for i = 2.
  JnfWord v_plot5 = blocks({{3, 3}, {4, 4}, {5, 5}});
  CHECK(leading_case(v_plot5, 2) == 4);
  CHECK(leading_case(v_plot5, 3) == 0);

  // v = b_i itself is case 1.
  CHECK(leading_case(blocks({{2, 2}}), 2) == 1);
}

TEST_CASE("form-2 candidates reproduce the worked rank-4 instance") {
  // With v = b2 b1 the leading index must be 3 and u one of a3, a3 a2,
  // a3 a2 a1.
  JnfWord v = blocks({{2, 1}});
  CHECK(leading_case(v, 3) == 2);
  for (int i : {1, 2}) {
    CHECK(leading_case(v, i) == 0);
  }

  std::vector<Word> cands = conjecture_candidates(4);
  auto set = word_set(cands);
  std::vector<Word> with_v;
  for (const Word& w : cands) {
    // Words of the shape b3 <alphas> b2 b1 with a nonempty alpha part.
    if (w.size() >= 4 && w.front() == beta(3)
        && w[w.size() - 2] == beta(2) && w.back() == beta(1)) {
      bool interior_alpha = true;
      for (std::size_t k = 1; k + 2 < w.size(); ++k) {
        interior_alpha = interior_alpha && w[k].kind == Kind::Alpha;
      }
      if (interior_alpha) {
        with_v.push_back(w);
      }
    }
  }
  auto ws = word_set(with_v);
  CHECK(ws.count(parse_word("b3 a3 b2 b1")) == 1);
  CHECK(ws.count(parse_word("b3 a3 a2 b2 b1")) == 1);
  CHECK(ws.count(parse_word("b3 a3 a2 a1 b2 b1")) == 1);
  CHECK(ws.size() == 3);
}

TEST_CASE("the seven admissible leading-form tails for rank 4") {
  // Across all i, the nonempty v's admitted next to a leading beta are
  // exactly b1, b2, b3, b1 b3, b2 b1, b2 b3, b1 b3 b2.
  std::set<Word, decltype(&shortlex_less)> tails(&shortlex_less);
  for (const JnfWord& v : enumerate_jnf(4)) {
    if (v.empty()) {
      continue;
    }
    for (int i = 1; i <= 3; ++i) {
      if (leading_case(v, i) != 0) {
        tails.insert(v.to_word(Kind::Beta));
      }
    }
  }
  std::set<Word, decltype(&shortlex_less)> expected(&shortlex_less);
  for (const char* s : {"b1", "b2", "b3", "b1 b3", "b2 b1", "b2 b3",
                        "b1 b3 b2"}) {
    expected.insert(parse_word(s));
  }
  CHECK(tails == expected);
}

TEST_CASE("conjecture candidate counts match the monoid sizes") {
  CHECK(conjecture_candidates(2).size() == 7);
  CHECK(conjecture_candidates(3).size() == 45);
  CHECK(conjecture_candidates(4).size() == 294);
}

TEST_CASE("candidates coincide with realized regular forms up to rank 4") {
  for (int n = 2; n <= 4; ++n) {
    MonoidTable m = tc_enumerate(origami_presentation(n, true));
    std::set<Word, decltype(&shortlex_less)> realized(&shortlex_less);
    for (const RegularForm& f : compute_regular_forms(m)) {
      realized.insert(f.word());
    }
    CHECK(realized == word_set(conjecture_candidates(n)));
  }
}

TEST_CASE("rank 5: counts agree but one element is written differently") {
  // The regular-form tie rule prefers a leading beta over a trailing
  // alpha at equal length, while the restricted candidate family only
  // admits the trailing-alpha writing of this element.  Both remain
  // systems of unique representatives.
  MonoidTable m = tc_enumerate(origami_presentation(5, true));
  std::set<Word, decltype(&shortlex_less)> realized(&shortlex_less);
  for (const RegularForm& f : compute_regular_forms(m)) {
    realized.insert(f.word());
  }
  auto cands = word_set(conjecture_candidates(5));
  CHECK(realized.size() == cands.size());

  std::vector<Word> only_realized;
  std::set_difference(realized.begin(), realized.end(), cands.begin(),
                      cands.end(), std::back_inserter(only_realized),
                      &shortlex_less);
  std::vector<Word> only_cands;
  std::set_difference(cands.begin(), cands.end(), realized.begin(),
                      realized.end(), std::back_inserter(only_cands),
                      &shortlex_less);
  REQUIRE(only_realized.size() == 1);
  REQUIRE(only_cands.size() == 1);
  CHECK(only_realized[0] == parse_word("b2 a2 a1 a4 a3 a2"));
  CHECK(only_cands[0] == parse_word("a2 a1 a4 a3 b2 a2"));
  CHECK(m.element_of(only_realized[0]) == m.element_of(only_cands[0]));
}

TEST_CASE("verify_identities") {
  MonoidTable o3 = tc_enumerate(origami_presentation(3, true));
  VerifyReport r3 = verify_identities(o3);
  CHECK(r3.ok());
  CHECK(r3.instances > 0);

  MonoidTable o4 = tc_enumerate(origami_presentation(4, true));
  VerifyReport r4 = verify_identities(o4);
  CHECK(r4.ok());

  // The five observed rank-4 rules hold as element equalities.
  auto eq = [&](const char* u, const char* v) {
    return o4.element_of(parse_word(u)) == o4.element_of(parse_word(v));
  };
  CHECK(eq("a3 a1 b1", "a3 b1 a1"));
  CHECK(eq("a1 a3 b3", "a1 b3 a3"));
  CHECK(eq("b3 a1 b1", "b3 b1 a1"));
  CHECK(eq("b1 a3 b3", "b1 b3 a3"));
  CHECK(eq("a1 a2 b2 b3", "a1 b2 a2 b3"));
  CHECK(eq("b3 a2 b2 a1", "b3 b2 a2 a1"));

  // Rank 2: parts (a)-(c) and (i) are vacuous, (ii) still has instances.
  MonoidTable o2 = tc_enumerate(origami_presentation(2, true));
  VerifyReport r2 = verify_identities(o2);
  CHECK(r2.ok());
  CHECK(r2.instances == 4);  // x a1 b1 y over x, y in {a1, b1}
  REQUIRE(r2.notes.size() == 2);
  CHECK(r2.notes[0].find("(a)-(c)") != std::string::npos);
}

TEST_CASE("verify_submonoids") {
  for (int n = 2; n <= 4; ++n) {
    MonoidTable m = tc_enumerate(origami_presentation(n, true));
    VerifyReport r = verify_submonoids(m);
    CHECK(r.ok());
    CHECK(r.instances > 0);
  }
}

TEST_CASE("verify_projections") {
  for (int n = 2; n <= 4; ++n) {
    MonoidTable m = tc_enumerate(origami_presentation(n, true));
    VerifyReport r = verify_projections(m, 6);
    CHECK(r.ok());
    CHECK(r.instances > 0);
  }
}

TEST_CASE("verify_conjecture asserts ranks 3 and 4") {
  for (int n : {3, 4}) {
    MonoidTable m = tc_enumerate(origami_presentation(n, true));
    ConjectureReport r = verify_conjecture(m);
    CHECK(r.report.ok());
    CHECK(r.counts_match);
    CHECK(r.injective);
    CHECK(r.distinct_elements == m.size());
  }
}
