#include "strig/report.hpp"

#include <json.hpp>
#include <algorithm>
#include <sstream>

namespace strig {

namespace {

std::string joinedG(const std::vector<int>& g) {
  std::string out = "[";
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g[i]);
  }
  out += "]";
  return out;
}

std::string dotEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::vector<std::string> sortedMemberLabels(const HassePoset& h, int node) {
  std::vector<std::string> labels;
  for (int m : h.nodes[node].members) labels.push_back(h.universe[m].label);
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace

std::vector<CompatRow> compatibilityRows(const Algebra& a,
                                         const std::vector<RigidObject>& universe) {
  std::vector<CompatRow> rows;
  for (size_t i = 0; i < universe.size(); ++i) {
    const RigidObject& c = universe[i];
    if (c.kind != ObjectKind::String) continue;
    CompatRow row;
    row.object = static_cast<int>(i);
    for (size_t j = 0; j < universe.size(); ++j) {
      if (j == i) continue;
      const RigidObject& d = universe[j];
      if (d.kind == ObjectKind::String) {
        if (!rigidTo(a, c, d)) continue;
        row.compatible.push_back(static_cast<int>(j));
        row.mutual.push_back(rigidTo(a, d, c) ? 1 : 0);
      } else {
        if (c.support[d.shiftVertex]) continue;
        row.compatible.push_back(static_cast<int>(j));
        row.mutual.push_back(1);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string reportJson(const Algebra& a, const HassePoset& h) {
  nlohmann::ordered_json doc;
  doc["algebra"] = a.name();
  doc["pairCount"] = h.nodes.size();

  doc["rigid"] = nlohmann::ordered_json::array();
  for (const CompatRow& row : compatibilityRows(a, h.universe)) {
    const RigidObject& c = h.universe[row.object];
    nlohmann::ordered_json entry;
    entry["label"] = c.label;
    entry["display"] = renderWord(a, c.minimalRep);
    entry["hook"] = renderWord(a, c.closure);
    entry["g"] = c.g;
    entry["compatible"] = nlohmann::ordered_json::array();
    entry["mutual"] = nlohmann::ordered_json::array();
    for (size_t k = 0; k < row.compatible.size(); ++k) {
      entry["compatible"].push_back(h.universe[row.compatible[k]].label);
      entry["mutual"].push_back(row.mutual[k] != 0);
    }
    doc["rigid"].push_back(std::move(entry));
  }

  doc["pairs"] = nlohmann::ordered_json::array();
  for (const SupportTauTiltingPair& p : h.nodes) {
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (int m : p.members) members.push_back(h.universe[m].label);
    doc["pairs"].push_back(std::move(members));
  }

  nlohmann::ordered_json hasse;
  hasse["acceptedLen"] = h.acceptedLen;
  hasse["top"] = h.top + 1;
  hasse["bottom"] = h.bottom + 1;
  hasse["nodes"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < h.nodes.size(); ++i) {
    nlohmann::ordered_json node;
    node["id"] = i + 1;
    node["members"] = nlohmann::ordered_json::array();
    for (int m : h.nodes[i].members) node["members"].push_back(h.universe[m].label);
    hasse["nodes"].push_back(std::move(node));
  }
  hasse["edges"] = nlohmann::ordered_json::array();
  for (const auto& [from, to] : h.edges)
    hasse["edges"].push_back({from + 1, to + 1});
  doc["hasse"] = std::move(hasse);

  return doc.dump(1) + "\n";
}

std::string reportText(const Algebra& a, const HassePoset& h) {
  std::ostringstream out;
  out << "algebra " << a.name() << ": " << a.vertexCount() << " vertices, dimension "
      << a.dimension() << "\n";
  out << "support tau-tilting pairs: " << h.nodes.size()
      << " (complete at string length " << h.acceptedLen << ")\n\n";

  out << "rigid objects (* marks mutual compatibility):\n";
  for (const CompatRow& row : compatibilityRows(a, h.universe)) {
    const RigidObject& c = h.universe[row.object];
    out << "  " << c.label << "  g=" << joinedG(c.g) << "\n";
    out << "    string: " << renderWord(a, c.minimalRep) << "\n";
    out << "    hook:   " << renderWord(a, c.closure) << "\n";
    out << "    compatible:";
    for (size_t k = 0; k < row.compatible.size(); ++k) {
      out << " " << h.universe[row.compatible[k]].label;
      if (row.mutual[k]) out << "*";
    }
    out << "\n";
  }

  out << "\npairs:\n";
  for (size_t i = 0; i < h.nodes.size(); ++i) {
    out << "  " << (i + 1) << ": {";
    const auto& members = h.nodes[i].members;
    for (size_t k = 0; k < members.size(); ++k) {
      if (k) out << ", ";
      out << h.universe[members[k]].label;
    }
    out << "}\n";
  }

  out << "\nexchange graph: " << h.nodes.size() << " nodes, " << h.edges.size()
      << " arrows, top " << (h.top + 1) << ", bottom " << (h.bottom + 1) << "\n";
  for (const auto& [from, to] : h.edges)
    out << "  " << (from + 1) << " -> " << (to + 1) << "\n";
  return out.str();
}

std::string renderDot(const Algebra& a, const HassePoset& h) {
  std::ostringstream out;
  out << "digraph \"" << dotEscape(a.name()) << "\" {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box];\n";
  for (size_t i = 0; i < h.nodes.size(); ++i) {
    std::vector<std::string> labels = sortedMemberLabels(h, static_cast<int>(i));
    std::string joined;
    for (size_t k = 0; k < labels.size(); ++k) {
      if (k) joined += " | ";
      joined += labels[k];
    }
    out << "  n" << (i + 1) << " [label=\"" << dotEscape(joined) << "\"];\n";
  }
  for (const auto& [from, to] : h.edges)
    out << "  n" << (from + 1) << " -> n" << (to + 1) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace strig
