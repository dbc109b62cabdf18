#include "origami/congruence.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "origami/rewrite.hpp"  // BudgetError

#include <nlohmann/json.hpp>

namespace origami {

MonoidTable::MonoidTable(Alphabet alphabet, std::vector<Word> reps,
                         std::vector<ElementId> right,
                         std::vector<ElementId> left)
    : alphabet_(std::move(alphabet)),
      ngens_(static_cast<std::size_t>(alphabet_.size())),
      reps_(std::move(reps)),
      right_(std::move(right)),
      left_(std::move(left)) {
  if (right_.size() != reps_.size() * ngens_
      || left_.size() != reps_.size() * ngens_) {
    throw std::invalid_argument("MonoidTable: table shape mismatch");
  }
}

std::string MonoidTable::family() const {
  return alphabet_.kinds() == std::vector<Kind>{Kind::H} ? "jones"
                                                         : "origami";
}

ElementId MonoidTable::element_of(const Word& w) const {
  ElementId e = kIdentity;
  for (Generator g : w) {
    e = right(e, alphabet_.id(g));
  }
  return e;
}

ElementId MonoidTable::product(ElementId a, ElementId b) const {
  ElementId e = a;
  for (Generator g : reps_[b]) {
    e = right(e, alphabet_.id(g));
  }
  return e;
}

namespace {

constexpr ElementId kUndef = std::numeric_limits<ElementId>::max();

class Enumerator {
 public:
  Enumerator(const Presentation& p, TcOptions options)
      : alphabet_(p.alphabet),
        ngens_(static_cast<std::size_t>(p.alphabet.size())),
        cap_(options.element_cap) {
    relations_.reserve(p.relations.size());
    for (const Relation& r : p.relations) {
      relations_.push_back({alphabet_.letters_of(r.lhs),
                            alphabet_.letters_of(r.rhs)});
    }
    new_node();
  }

  MonoidTable run() {
    std::size_t swept = 0;
    while (true) {
      while (swept < parent_.size()) {
        ElementId c = static_cast<ElementId>(swept++);
        if (find(c) != c) {
          continue;
        }
        for (const auto& rel : relations_) {
          ElementId x = trace_fill(c, rel.first);
          ElementId y = trace_fill(c, rel.second);
          if (x != y) {
            merge(x, y);
          }
          if (find(c) != c) {
            break;  // c was merged away; its class is already covered
          }
        }
      }
      // The relation sweeps fill every edge on a relation path; any
      // remaining holes (generators absent from all relation fronts) get
      // fresh classes and are then swept in turn.
      bool defined = false;
      for (ElementId c = 0; c < parent_.size() && !defined; ++c) {
        if (find(c) != c) {
          continue;
        }
        for (std::size_t g = 0; g < ngens_; ++g) {
          if (entry(c, g) == kUndef) {
            set_entry(c, g, new_node());
            defined = true;
            break;
          }
        }
      }
      if (!defined) {
        break;
      }
    }
    return standardize();
  }

 private:
  ElementId find(ElementId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  ElementId entry(ElementId c, std::size_t g) const {
    return table_[static_cast<std::size_t>(c) * ngens_ + g];
  }
  void set_entry(ElementId c, std::size_t g, ElementId v) {
    table_[static_cast<std::size_t>(c) * ngens_ + g] = v;
  }

  ElementId new_node() {
    if (live_ + 1 > cap_) {
      throw BudgetError("tc_enumerate: element cap exceeded");
    }
    ElementId id = static_cast<ElementId>(parent_.size());
    parent_.push_back(id);
    table_.resize(table_.size() + ngens_, kUndef);
    ++live_;
    return id;
  }

  ElementId trace_fill(ElementId c, const std::vector<int>& letters) {
    ElementId cur = c;
    for (int a : letters) {
      cur = find(cur);
      ElementId t = entry(cur, static_cast<std::size_t>(a));
      if (t == kUndef) {
        ElementId m = new_node();
        set_entry(cur, static_cast<std::size_t>(a), m);
        cur = m;
      } else {
        ElementId ft = find(t);
        set_entry(cur, static_cast<std::size_t>(a), ft);
        cur = ft;
      }
    }
    return find(cur);
  }

  void merge(ElementId a, ElementId b) {
    pending_.push_back({a, b});
    while (!pending_.empty()) {
      auto [x, y] = pending_.back();
      pending_.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) {
        continue;
      }
      if (x > y) {
        std::swap(x, y);
      }
      parent_[y] = x;
      --live_;
      for (std::size_t g = 0; g < ngens_; ++g) {
        ElementId ty = entry(y, g);
        if (ty == kUndef) {
          continue;
        }
        ElementId tx = entry(x, g);
        if (tx == kUndef) {
          set_entry(x, g, ty);
        } else {
          pending_.push_back({tx, ty});
        }
      }
    }
  }

  //! Renumbers classes in shortlex discovery order and builds both Cayley
  //! tables and the canonical representatives.
  MonoidTable standardize() {
    std::vector<ElementId> number(parent_.size(), kUndef);
    std::vector<ElementId> order;  // new id -> old id
    order.reserve(live_);
    ElementId root = find(0);
    number[root] = 0;
    order.push_back(root);
    struct Parent {
      ElementId node;
      int letter;
    };
    std::vector<Parent> via{{kUndef, -1}};
    for (std::size_t k = 0; k < order.size(); ++k) {
      ElementId c = order[k];
      for (std::size_t g = 0; g < ngens_; ++g) {
        ElementId t = find(entry(c, g));
        if (number[t] == kUndef) {
          number[t] = static_cast<ElementId>(order.size());
          order.push_back(t);
          via.push_back({static_cast<ElementId>(k), static_cast<int>(g)});
        }
      }
    }

    const std::size_t size = order.size();
    std::vector<Word> reps(size);
    for (std::size_t e = 1; e < size; ++e) {
      reps[e] = reps[via[e].node];
      reps[e].push_back(alphabet_.generator(via[e].letter));
    }
    std::vector<ElementId> right(size * ngens_);
    for (std::size_t e = 0; e < size; ++e) {
      for (std::size_t g = 0; g < ngens_; ++g) {
        right[e * ngens_ + g] = number[find(entry(order[e], g))];
      }
    }
    // left[e][g] = g * rep(e); built along the discovery forest.
    std::vector<ElementId> left(size * ngens_);
    for (std::size_t g = 0; g < ngens_; ++g) {
      left[0 * ngens_ + g] = right[0 * ngens_ + g];
    }
    for (std::size_t e = 1; e < size; ++e) {
      std::size_t p = via[e].node;
      std::size_t a = static_cast<std::size_t>(via[e].letter);
      for (std::size_t g = 0; g < ngens_; ++g) {
        left[e * ngens_ + g] = right[left[p * ngens_ + g] * ngens_ + a];
      }
    }
    return MonoidTable(alphabet_, std::move(reps), std::move(right),
                       std::move(left));
  }

  Alphabet alphabet_;
  std::size_t ngens_;
  std::size_t cap_;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations_;
  std::vector<ElementId> parent_;
  std::vector<ElementId> table_;
  std::vector<std::pair<ElementId, ElementId>> pending_;
  std::size_t live_ = 0;
};

}  // namespace

MonoidTable tc_enumerate(const Presentation& p, TcOptions options) {
  return Enumerator(p, options).run();
}

void save_monoid_json(const MonoidTable& m, std::ostream& out) {
  nlohmann::json j;
  j["family"] = m.family();
  j["n"] = m.rank();
  j["size"] = m.size();
  auto& reps = j["reps"] = nlohmann::json::array();
  for (ElementId e = 0; e < m.size(); ++e) {
    reps.push_back(format_word(m.rep(e)));
  }
  auto& right = j["right_cayley"] = nlohmann::json::array();
  auto& left = j["left_cayley"] = nlohmann::json::array();
  const int ngens = m.alphabet().size();
  for (ElementId e = 0; e < m.size(); ++e) {
    nlohmann::json r = nlohmann::json::array();
    nlohmann::json l = nlohmann::json::array();
    for (int g = 0; g < ngens; ++g) {
      r.push_back(m.right(e, g));
      l.push_back(m.left(e, g));
    }
    right.push_back(std::move(r));
    left.push_back(std::move(l));
  }
  out << j.dump(1) << '\n';
}

MonoidTable load_monoid_json(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  const int n = j.at("n").get<int>();
  const std::string family = j.at("family").get<std::string>();
  Alphabet alphabet =
      family == "jones" ? jones_alphabet(n) : origami_alphabet(n);
  const std::size_t size = j.at("size").get<std::size_t>();
  std::vector<Word> reps;
  reps.reserve(size);
  for (const auto& s : j.at("reps")) {
    reps.push_back(parse_word(s.get<std::string>()));
  }
  const std::size_t ngens = static_cast<std::size_t>(alphabet.size());
  std::vector<ElementId> right;
  std::vector<ElementId> left;
  right.reserve(size * ngens);
  left.reserve(size * ngens);
  for (const auto& row : j.at("right_cayley")) {
    for (const auto& v : row) {
      right.push_back(v.get<ElementId>());
    }
  }
  for (const auto& row : j.at("left_cayley")) {
    for (const auto& v : row) {
      left.push_back(v.get<ElementId>());
    }
  }
  if (reps.size() != size) {
    throw std::runtime_error("load_monoid_json: reps/size mismatch");
  }
  MonoidTable m(alphabet, std::move(reps), std::move(right), std::move(left));
  for (ElementId e = 0; e < m.size(); ++e) {
    for (int g = 0; g < alphabet.size(); ++g) {
      if (m.right(e, g) >= m.size() || m.left(e, g) >= m.size()) {
        throw std::runtime_error("load_monoid_json: element id out of range");
      }
    }
  }
  return m;
}

}  // namespace origami
