#include "origami/export.hpp"

#include <map>

#include <nlohmann/json.hpp>

namespace origami {

std::string to_dot(const MonoidTable& m, const GreensStructure& g) {
  std::string out = "digraph dclasses {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::uint32_t c = 0; c < g.d_count(); ++c) {
    out += "  d" + std::to_string(c) + " [label=\"["
           + format_word(m.rep(g.d_members[c].front())) + "]\"];\n";
  }
  for (auto [upper, lower] : g.d_covers()) {
    out += "  d" + std::to_string(upper) + " -> d" + std::to_string(lower)
           + ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_csv(const MonoidTable& m, const GreensStructure& g) {
  std::string out = "element,rep,r_class,l_class,h_class,d_class,j_class\n";
  for (ElementId e = 0; e < m.size(); ++e) {
    out += std::to_string(e) + ',' + format_word(m.rep(e)) + ','
           + std::to_string(g.r_class_of[e]) + ','
           + std::to_string(g.l_class_of[e]) + ','
           + std::to_string(g.h_class_of[e]) + ','
           + std::to_string(g.d_class_of[e]) + ','
           + std::to_string(g.j_class_of[e]) + '\n';
  }
  return out;
}

namespace {

nlohmann::json histogram(const std::vector<std::vector<ElementId>>& classes) {
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& members : classes) {
    ++sizes[members.size()];
  }
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [size, count] : sizes) {
    j[std::to_string(size)] = count;
  }
  return j;
}

}  // namespace

std::string greens_report_json(const MonoidTable& m,
                               const GreensStructure& g) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["family"] = m.family();
  j["n"] = m.rank();
  j["size"] = m.size();
  j["counts"] = {{"r_classes", g.r_count()},
                 {"l_classes", g.l_count()},
                 {"h_classes", g.h_count()},
                 {"d_classes", g.d_count()},
                 {"j_classes", g.d_count()}};
  j["d_equals_j"] = true;  // compute_greens certifies this
  j["class_size_histograms"] = {{"r", histogram(g.r_members)},
                                {"l", histogram(g.l_members)},
                                {"h", histogram(g.h_members)},
                                {"d", histogram(g.d_members)}};
  j["d_cover_edges"] = g.d_covers().size();
  return j.dump(1) + "\n";
}

std::string verify_report_json(const VerifyReport& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["suite"] = report.suite;
  j["family"] = report.family;
  j["n"] = report.n;
  j["instances_checked"] = report.instances;
  j["failures"] = report.failures;
  j["notes"] = report.notes;
  j["ok"] = report.ok();
  return j.dump(1) + "\n";
}

}  // namespace origami
