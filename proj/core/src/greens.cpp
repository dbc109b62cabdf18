#include "origami/greens.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "origami/forms.hpp"
#include "origami/jones.hpp"

namespace origami {

namespace {

// Iterative Tarjan over a functional-ish graph given by an edge callback.
template <typename Succ>
std::vector<std::uint32_t> scc_ids(std::size_t size, int degree, Succ succ) {
  constexpr std::uint32_t kNone = 0xffffffff;
  std::vector<std::uint32_t> number(size, kNone);
  std::vector<std::uint32_t> low(size);
  std::vector<std::uint32_t> comp(size, kNone);
  std::vector<std::uint32_t> stack;
  std::vector<char> on_stack(size, 0);
  std::uint32_t next_number = 0;
  std::uint32_t next_comp = 0;

  struct Frame {
    std::uint32_t node;
    int edge;
  };
  std::vector<Frame> frames;

  for (std::size_t root = 0; root < size; ++root) {
    if (number[root] != kNone) {
      continue;
    }
    frames.push_back({static_cast<std::uint32_t>(root), 0});
    number[root] = low[root] = next_number++;
    stack.push_back(static_cast<std::uint32_t>(root));
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < degree) {
        std::uint32_t t = succ(f.node, f.edge++);
        if (number[t] == kNone) {
          number[t] = low[t] = next_number++;
          stack.push_back(t);
          on_stack[t] = 1;
          frames.push_back({t, 0});
        } else if (on_stack[t]) {
          low[f.node] = std::min(low[f.node], number[t]);
        }
        continue;
      }
      std::uint32_t v = f.node;
      frames.pop_back();
      if (!frames.empty()) {
        low[frames.back().node] = std::min(low[frames.back().node], low[v]);
      }
      if (low[v] == number[v]) {
        while (true) {
          std::uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = next_comp;
          if (w == v) {
            break;
          }
        }
        ++next_comp;
      }
    }
  }
  return comp;
}

// Renumber class ids so that classes are ordered by least member, and
// collect members in element order.
void canonicalize(std::vector<std::uint32_t>& class_of,
                  std::vector<std::vector<ElementId>>* members = nullptr) {
  std::uint32_t count = 0;
  for (std::uint32_t c : class_of) {
    count = std::max(count, c + 1);
  }
  std::vector<std::uint32_t> remap(count, 0xffffffff);
  std::uint32_t next = 0;
  for (std::uint32_t& c : class_of) {
    if (remap[c] == 0xffffffff) {
      remap[c] = next++;
    }
    c = remap[c];
  }
  if (members) {
    members->assign(next, {});
    for (std::size_t e = 0; e < class_of.size(); ++e) {
      (*members)[class_of[e]].push_back(static_cast<ElementId>(e));
    }
  }
}

struct Duf {
  std::vector<std::uint32_t> parent;
  explicit Duf(std::size_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
};

}  // namespace

std::vector<std::pair<std::uint32_t, std::uint32_t>>
GreensStructure::d_covers() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;
  const std::size_t k = d_count();
  for (std::uint32_t upper = 0; upper < k; ++upper) {
    for (std::uint32_t lower = 0; lower < k; ++lower) {
      if (lower == upper || !d_leq[lower][upper]) {
        continue;
      }
      bool covered = true;
      for (std::uint32_t mid = 0; mid < k && covered; ++mid) {
        if (mid != upper && mid != lower && d_leq[lower][mid]
            && d_leq[mid][upper]) {
          covered = false;
        }
      }
      if (covered) {
        covers.push_back({upper, lower});
      }
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

GreensStructure compute_greens(const MonoidTable& m) {
  GreensStructure g;
  const std::size_t size = m.size();
  const int ngens = m.alphabet().size();

  g.r_class_of = scc_ids(size, ngens, [&](std::uint32_t e, int a) {
    return m.right(e, a);
  });
  canonicalize(g.r_class_of, &g.r_members);

  g.l_class_of = scc_ids(size, ngens, [&](std::uint32_t e, int a) {
    return m.left(e, a);
  });
  canonicalize(g.l_class_of, &g.l_members);

  // H = R meet L.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> h_ids;
  g.h_class_of.resize(size);
  for (std::size_t e = 0; e < size; ++e) {
    auto key = std::pair{g.r_class_of[e], g.l_class_of[e]};
    auto it = h_ids.insert({key, static_cast<std::uint32_t>(h_ids.size())}).first;
    g.h_class_of[e] = it->second;
  }
  canonicalize(g.h_class_of, &g.h_members);

  // D = join of R and L.
  Duf duf(size);
  for (const auto& cls : {g.r_members, g.l_members}) {
    for (const auto& members : cls) {
      for (std::size_t k = 1; k < members.size(); ++k) {
        duf.unite(members[0], members[k]);
      }
    }
  }
  g.d_class_of.resize(size);
  for (std::size_t e = 0; e < size; ++e) {
    g.d_class_of[e] = duf.find(static_cast<std::uint32_t>(e));
  }
  canonicalize(g.d_class_of, &g.d_members);

  // J from two-sided reachability: SCCs of the union graph.  In these
  // finite monoids D and J coincide; certify rather than assume.
  g.j_class_of = scc_ids(size, 2 * ngens, [&](std::uint32_t e, int a) {
    return a < ngens ? m.right(e, a) : m.left(e, a - ngens);
  });
  canonicalize(g.j_class_of);
  if (g.j_class_of != g.d_class_of) {
    throw std::logic_error("compute_greens: D and J partitions differ");
  }

  // Ideal order on D-classes via reachability in the union graph,
  // propagated over the class quotient.
  const std::size_t dk = g.d_count();
  g.d_leq.assign(dk, std::vector<bool>(dk, false));
  for (std::uint32_t c = 0; c < dk; ++c) {
    // BFS downward from class c.
    std::vector<char> seen(dk, 0);
    std::vector<std::uint32_t> queue{c};
    seen[c] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (ElementId e : g.d_members[queue[q]]) {
        for (int a = 0; a < ngens; ++a) {
          for (ElementId t : {m.right(e, a), m.left(e, a)}) {
            std::uint32_t tc = g.d_class_of[t];
            if (!seen[tc]) {
              seen[tc] = 1;
              queue.push_back(tc);
            }
          }
        }
      }
    }
    for (std::uint32_t lower = 0; lower < dk; ++lower) {
      if (seen[lower]) {
        g.d_leq[lower][c] = true;
      }
    }
  }
  return g;
}

EggBox egg_box(const GreensStructure& g, std::uint32_t d_class) {
  if (d_class >= g.d_count()) {
    throw std::invalid_argument("egg_box: no such D-class");
  }
  EggBox box;
  std::set<std::uint32_t> rows;
  std::set<std::uint32_t> cols;
  for (ElementId e : g.d_members[d_class]) {
    rows.insert(g.r_class_of[e]);
    cols.insert(g.l_class_of[e]);
  }
  box.row_r_classes.assign(rows.begin(), rows.end());
  box.col_l_classes.assign(cols.begin(), cols.end());
  box.cells.assign(box.row_r_classes.size(),
                   std::vector<std::vector<ElementId>>(box.col_l_classes.size()));
  for (ElementId e : g.d_members[d_class]) {
    auto r = std::lower_bound(box.row_r_classes.begin(),
                              box.row_r_classes.end(), g.r_class_of[e])
             - box.row_r_classes.begin();
    auto c = std::lower_bound(box.col_l_classes.begin(),
                              box.col_l_classes.end(), g.l_class_of[e])
             - box.col_l_classes.begin();
    box.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
        .push_back(e);
  }
  return box;
}

AperiodicityResult is_aperiodic(const MonoidTable& m) {
  AperiodicityResult res{true, 0, std::nullopt};
  for (ElementId e = 0; e < m.size(); ++e) {
    // Power sequence e, e^2, ... stabilises within |M| steps; aperiodic
    // iff the eventual cycle is a fixed point.
    std::vector<ElementId> powers{e};
    ElementId cur = e;
    int exponent = 0;
    while (true) {
      cur = m.product(cur, e);
      ++exponent;
      if (cur == powers.back()) {
        // a^{exponent+1} = a^{exponent}
        res.max_exponent = std::max(res.max_exponent, exponent + 1);
        break;
      }
      if (std::find(powers.begin(), powers.end(), cur) != powers.end()) {
        res.aperiodic = false;
        res.witness = e;
        return res;
      }
      powers.push_back(cur);
    }
  }
  return res;
}

VerifyReport check_h_trivial(const MonoidTable& m, const GreensStructure& g) {
  VerifyReport report{"h-trivial", m.family(), m.rank(), 0, {}, {}};
  for (const auto& members : g.h_members) {
    ++report.instances;
    if (members.size() != 1) {
      report.failures.push_back("H-class of " + format_word(m.rep(members[0]))
                                + " has " + std::to_string(members.size())
                                + " elements");
    }
  }
  AperiodicityResult ap = is_aperiodic(m);
  report.instances += m.size();
  if (!ap.aperiodic) {
    report.failures.push_back("not aperiodic; witness "
                              + format_word(m.rep(*ap.witness)));
  } else {
    report.notes.push_back("aperiodic; max stabilisation exponent "
                           + std::to_string(ap.max_exponent));
  }
  return report;
}

VerifyReport check_regular_r(const MonoidTable& m, std::size_t pair_limit) {
  VerifyReport report{"regular-r", m.family(), m.rank(), 0, {}, {}};
  std::vector<ElementId> rev_of(m.size());
  for (ElementId e = 0; e < m.size(); ++e) {
    rev_of[e] = m.element_of(reverse_word(m.rep(e)));
    Word w = m.rep(e);
    Word www = w;
    Word r = reverse_word(w);
    www.insert(www.end(), r.begin(), r.end());
    www.insert(www.end(), w.begin(), w.end());
    ++report.instances;
    if (m.element_of(www) != e) {
      report.failures.push_back("w w^R w != w for " + format_word(w));
    }
  }
  if (m.size() <= pair_limit) {
    for (ElementId a = 0; a < m.size(); ++a) {
      for (ElementId b = 0; b < m.size(); ++b) {
        ++report.instances;
        if (rev_of[m.product(a, b)] != m.product(rev_of[b], rev_of[a])) {
          report.failures.push_back(
              "(vw)^R != w^R v^R for v=" + format_word(m.rep(a))
              + " w=" + format_word(m.rep(b)));
        }
      }
    }
    report.notes.push_back("anti-automorphism checked on all pairs");
  }
  return report;
}

VerifyReport check_core_d_related(const MonoidTable& m,
                                  const GreensStructure& g) {
  if (m.family() != "origami") {
    throw std::invalid_argument("check_core_d_related: origami table required");
  }
  VerifyReport report{"core-d", m.family(), m.rank(), 0, {}, {}};
  for (ElementId e = 0; e < m.size(); ++e) {
    ++report.instances;
    ElementId c = m.element_of(core_word(m.rep(e)));
    if (g.d_class_of[e] != g.d_class_of[c]) {
      report.failures.push_back("core not D-related for "
                                + format_word(m.rep(e)));
    }
  }
  return report;
}

VerifyReport check_theorem_main(const MonoidTable& om,
                                const GreensStructure& og,
                                const MonoidTable& jm,
                                const GreensStructure& jg) {
  if (om.family() != "origami" || jm.family() != "jones") {
    throw std::invalid_argument(
        "check_theorem_main: origami and Jones tables required");
  }
  VerifyReport report{"theorem", om.family(), om.rank(), 0, {}, {}};
  const int n = om.rank();

  auto as_h_word = [](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Generator g : w) {
      out.push_back(h(g.index));
    }
    return out;
  };

  // Projection pair of D-classes, per element; must be constant on
  // D-classes of O_n.
  const std::uint32_t dk = static_cast<std::uint32_t>(og.d_count());
  std::vector<std::optional<std::pair<std::uint32_t, std::uint32_t>>>
      class_pair(dk);
  for (ElementId e = 0; e < om.size(); ++e) {
    ++report.instances;
    Word w = om.rep(e);
    std::uint32_t da =
        jg.d_class_of[jm.element_of(as_h_word(p_alpha(w)))];
    std::uint32_t db = jg.d_class_of[jm.element_of(as_h_word(p_beta(w)))];
    auto& slot = class_pair[og.d_class_of[e]];
    if (!slot) {
      slot = {da, db};
    } else if (*slot != std::pair{da, db}) {
      report.failures.push_back(
          "projection pair not constant on the D-class of "
          + format_word(w));
    }
  }

  // Bijectivity onto D(J_n) x D(J_n).
  std::set<std::pair<std::uint32_t, std::uint32_t>> image;
  for (const auto& slot : class_pair) {
    if (slot) {
      image.insert(*slot);
    }
  }
  const std::size_t jdk = jg.d_count();
  if (image.size() != dk) {
    report.failures.push_back("projection map on D-classes is not injective");
  }
  if (image.size() != jdk * jdk) {
    report.failures.push_back("projection map on D-classes is not onto");
  }
  const std::size_t expected = static_cast<std::size_t>(n / 2 + 1);
  if (dk != expected * expected) {
    report.failures.push_back("D-class count " + std::to_string(dk)
                              + " != " + std::to_string(expected * expected));
  }
  if (jdk != expected) {
    report.failures.push_back("J_n D-class count " + std::to_string(jdk)
                              + " != " + std::to_string(expected));
  }

  // Order isomorphism onto the product of two chains: the J_n D-order is
  // a chain, and covers of the product order differ by one step in one
  // coordinate.
  std::vector<std::vector<bool>> j_leq = jg.d_leq;
  for (std::uint32_t a = 0; a < jdk; ++a) {
    for (std::uint32_t b = 0; b < jdk; ++b) {
      if (!j_leq[a][b] && !j_leq[b][a]) {
        report.failures.push_back("D-order of J_n is not a chain");
      }
    }
  }
  for (std::uint32_t c = 0; c < dk; ++c) {
    for (std::uint32_t d = 0; d < dk; ++d) {
      if (!class_pair[c] || !class_pair[d]) {
        continue;
      }
      bool product_leq = j_leq[class_pair[c]->first][class_pair[d]->first]
                         && j_leq[class_pair[c]->second][class_pair[d]->second];
      if (og.d_leq[c][d] != product_leq) {
        report.failures.push_back(
            "D-order does not match the product order at classes "
            + std::to_string(c) + ", " + std::to_string(d));
      }
    }
  }
  return report;
}

}  // namespace origami
