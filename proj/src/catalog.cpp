#include "strig/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "strig/errors.hpp"

namespace strig {

namespace detail {
struct CatalogBlob {
  const char* stem;
  const char* algebraJson;
  const char* goldenJson;
};
extern const CatalogBlob kCatalogBlobs[];
extern const int kCatalogBlobCount;
}  // namespace detail

namespace {

const detail::CatalogBlob& blobFor(const std::string& name) {
  for (int i = 0; i < detail::kCatalogBlobCount; ++i) {
    const auto& b = detail::kCatalogBlobs[i];
    if (nlohmann::json::parse(b.algebraJson).at("name").get<std::string>() == name) return b;
  }
  throw UnknownCatalogName(name);
}

std::string joinInts(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

// Figures draw each string in an arbitrary reading direction, so rendered
// words are compared up to orientation.
bool renderMatches(const Algebra& a, const StringWord& w, const std::string& wanted) {
  return renderWord(a, w) == wanted || renderWord(a, inverseWord(w)) == wanted;
}

}  // namespace

const std::vector<std::string>& catalogNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (int i = 0; i < detail::kCatalogBlobCount; ++i)
      out.push_back(nlohmann::json::parse(detail::kCatalogBlobs[i].algebraJson)
                        .at("name")
                        .get<std::string>());
    return out;
  }();
  return names;
}

Algebra catalogAlgebra(const std::string& name) {
  return Algebra::fromJson(blobFor(name).algebraJson);
}

GoldenData goldenResults(const std::string& name) {
  const nlohmann::json j = nlohmann::json::parse(blobFor(name).goldenJson);
  GoldenData g;
  g.name = j.at("name").get<std::string>();
  g.pairCount = j.at("pairCount").get<int>();
  for (const auto& r : j.at("rigid")) {
    GoldenRigid row;
    row.name = r.at("name").get<std::string>();
    row.display = r.at("display").get<std::string>();
    row.hook = r.at("hook").get<std::string>();
    row.g = r.at("g").get<std::vector<int>>();
    for (const auto& o : r.at("others"))
      row.others.push_back({o.at("name").get<std::string>(), o.at("mutual").get<bool>()});
    g.rigid.push_back(std::move(row));
  }
  for (const auto& n : j.at("hasse").at("nodes"))
    g.nodes.push_back(
        {n.at("id").get<std::string>(), n.at("members").get<std::vector<std::string>>()});
  for (const auto& e : j.at("hasse").at("edges"))
    g.edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return g;
}

std::vector<std::string> compareWithGolden(const std::string& name) {
  std::vector<std::string> issues;
  auto complain = [&](const std::string& s) { issues.push_back(name + ": " + s); };

  Algebra a = catalogAlgebra(name);
  GoldenData gold = goldenResults(name);
  HassePoset h = buildHasse(a);

  if (static_cast<int>(h.nodes.size()) != gold.pairCount)
    complain("pair count " + std::to_string(h.nodes.size()) + " differs from published " +
             std::to_string(gold.pairCount));

  std::vector<int> stringIdx;
  for (std::size_t i = 0; i < h.universe.size(); ++i)
    if (h.universe[i].kind == ObjectKind::String) stringIdx.push_back(static_cast<int>(i));
  if (stringIdx.size() != gold.rigid.size())
    complain("rigid class count " + std::to_string(stringIdx.size()) +
             " differs from published " + std::to_string(gold.rigid.size()));

  std::map<std::vector<int>, int> byG;
  for (int i : stringIdx) {
    if (!byG.emplace(h.universe[i].g, i).second)
      complain("duplicate computed g-vector " + joinInts(h.universe[i].g));
  }

  // Name resolution for compatibility rows and graph nodes: golden string
  // names resolve through their row's g-vector, shifted names through the
  // computed labels.
  std::map<std::string, int> byName;
  for (const GoldenRigid& row : gold.rigid) {
    auto it = byG.find(row.g);
    if (it == byG.end()) {
      complain("no computed rigid class with g-vector " + joinInts(row.g) + " for " + row.name);
      continue;
    }
    byName[row.name] = it->second;
  }
  for (std::size_t i = 0; i < h.universe.size(); ++i)
    if (h.universe[i].kind == ObjectKind::ShiftedProjective)
      byName[h.universe[i].label] = static_cast<int>(i);

  for (const GoldenRigid& row : gold.rigid) {
    auto named = byName.find(row.name);
    if (named == byName.end()) continue;
    const RigidObject& c = h.universe[named->second];
    if (!renderMatches(a, c.minimalRep, row.display))
      complain(row.name + " displays as " + renderWord(a, c.minimalRep) + " not published " +
               row.display);
    if (!renderMatches(a, c.closure, row.hook))
      complain(row.name + " completes to " + renderWord(a, c.closure) + " not published " +
               row.hook);

    std::map<int, bool> expected;
    for (std::size_t j = 0; j < h.universe.size(); ++j) {
      const RigidObject& d = h.universe[j];
      if (static_cast<int>(j) == named->second) continue;
      if (d.kind == ObjectKind::String) {
        if (rigidTo(a, c, d)) expected[static_cast<int>(j)] = rigidTo(a, d, c);
      } else if (!c.support[d.shiftVertex]) {
        expected[static_cast<int>(j)] = true;
      }
    }
    std::set<int> listed;
    for (const GoldenOther& o : row.others) {
      auto oit = byName.find(o.name);
      if (oit == byName.end()) {
        complain(row.name + " lists unknown object " + o.name);
        continue;
      }
      listed.insert(oit->second);
      auto eit = expected.find(oit->second);
      if (eit == expected.end())
        complain(row.name + " should not list " + o.name);
      else if (eit->second != o.mutual)
        complain(row.name + " and " + o.name + " mutuality differs from published");
    }
    for (const auto& [j, mutual] : expected)
      if (!listed.count(j))
        complain(row.name + " misses " + h.universe[j].label + " from its row");
  }

  // Exchange graph comparison keyed by the multiset of string-member
  // g-vectors of each node.
  using NodeKey = std::vector<std::vector<int>>;
  auto goldenKey = [&](const GoldenNode& n) {
    NodeKey k;
    for (const std::string& m : n.members) {
      for (const GoldenRigid& row : gold.rigid)
        if (row.name == m) k.push_back(row.g);
    }
    std::sort(k.begin(), k.end());
    return k;
  };
  auto computedKey = [&](const SupportTauTiltingPair& p) {
    NodeKey k;
    for (int m : p.members)
      if (h.universe[m].kind == ObjectKind::String) k.push_back(h.universe[m].g);
    std::sort(k.begin(), k.end());
    return k;
  };

  std::map<std::string, NodeKey> goldenNodeKey;
  std::set<NodeKey> goldenKeys;
  for (const GoldenNode& n : gold.nodes) {
    NodeKey k = goldenKey(n);
    if (k.size() != n.members.size())
      complain("node " + n.id + " has unresolved members");
    goldenNodeKey[n.id] = k;
    if (!goldenKeys.insert(k).second) complain("published node " + n.id + " is ambiguous");
  }
  std::set<NodeKey> computedKeys;
  for (const auto& p : h.nodes) {
    NodeKey k = computedKey(p);
    if (!computedKeys.insert(k).second) complain("computed nodes are ambiguous");
  }
  if (computedKeys != goldenKeys) complain("node sets differ from the published graph");

  std::set<std::pair<NodeKey, NodeKey>> goldenEdges;
  for (const auto& [from, to] : gold.edges)
    goldenEdges.emplace(goldenNodeKey[from], goldenNodeKey[to]);
  std::set<std::pair<NodeKey, NodeKey>> computedEdges;
  for (const auto& [from, to] : h.edges)
    computedEdges.emplace(computedKey(h.nodes[from]), computedKey(h.nodes[to]));
  if (goldenEdges != computedEdges) complain("edge sets differ from the published graph");

  return issues;
}

}  // namespace strig
