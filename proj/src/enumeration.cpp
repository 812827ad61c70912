#include "strig/enumeration.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "strig/errors.hpp"

namespace strig {

namespace {

struct WordCmp {
  bool operator()(const StringWord& x, const StringWord& y) const { return wordLess(x, y); }
};

bool shorterRep(const StringWord& x, const StringWord& y) {
  if (x.letters.size() != y.letters.size()) return x.letters.size() < y.letters.size();
  return wordLess(x, y);
}

std::string gLabel(const std::vector<int>& g) {
  std::string s = "M[";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + "]";
}

std::vector<std::vector<char>> compatibilityMatrix(const Algebra& a,
                                                   const std::vector<RigidObject>& universe) {
  int n = static_cast<int>(universe.size());
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = rigidTo(a, universe[i], universe[j]) ? 1 : 0;
  std::vector<std::vector<char>> c(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = r[i][j] && r[j][i];
  return c;
}

}  // namespace

std::vector<RigidObject> rigidObjects(const Algebra& a, int maxLen) {
  std::map<StringWord, StringWord, WordCmp> reps;
  for (const StringWord& w : enumerateStrings(a, maxLen)) {
    StringWord key = canonicalWord(hookClosure(a, w));
    auto [it, fresh] = reps.try_emplace(key, w);
    if (!fresh && shorterRep(w, it->second)) it->second = w;
  }

  std::vector<RigidObject> out;
  for (const auto& [key, rep] : reps) {
    ClosureShape shape = analyzeClosure(a, key);
    if (!isCRigidClosed(a, shape, shape)) continue;
    RigidObject o;
    o.kind = ObjectKind::String;
    o.minimalRep = rep;
    o.closure = key;
    o.shape = shape;
    o.complex = presentationComplex(a, shape);
    o.g = closedGVector(a, shape);
    o.support = closedSupport(a, shape);
    o.label = key.letters.empty() ? "P_" + a.vertexName(key.trivialVertex) : gLabel(o.g);
    out.push_back(std::move(o));
  }
  for (int v = 0; v < a.vertexCount(); ++v) {
    RigidObject o;
    o.kind = ObjectKind::ShiftedProjective;
    o.shiftVertex = v;
    o.complex = stalkMinusOne(v);
    o.g.assign(a.vertexCount(), 0);
    o.g[v] = -1;
    o.support.assign(a.vertexCount(), 0);
    o.label = "P_" + a.vertexName(v) + "^∨";
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [](const RigidObject& x, const RigidObject& y) {
    if (x.g != y.g) return x.g > y.g;
    return x.label < y.label;
  });
  return out;
}

std::vector<SupportTauTiltingPair> supportTauTiltingPairs(
    const Algebra& a, const std::vector<RigidObject>& universe) {
  auto comp = compatibilityMatrix(a, universe);
  int n = static_cast<int>(universe.size());
  int want = a.vertexCount();
  std::vector<SupportTauTiltingPair> pairs;
  std::vector<int> chosen;
  auto extend = [&](auto&& self, int from) -> void {
    if (static_cast<int>(chosen.size()) == want) {
      pairs.push_back({chosen});
      return;
    }
    for (int k = from; k < n; ++k) {
      bool fits = true;
      for (int c : chosen)
        if (!comp[c][k]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      chosen.push_back(k);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return pairs;
}

bool orderLeq(const Algebra& a, const std::vector<RigidObject>& universe,
              const SupportTauTiltingPair& n, const SupportTauTiltingPair& m) {
  for (int x : m.members)
    for (int y : n.members)
      if (!rigidTo(a, universe[x], universe[y])) return false;
  return true;
}

std::pair<SupportTauTiltingPair, SupportTauTiltingPair> mutationCompletions(
    const Algebra& a, const std::vector<int>& almostComplete,
    const std::vector<RigidObject>& universe) {
  std::vector<SupportTauTiltingPair> found;
  for (int z = 0; z < static_cast<int>(universe.size()); ++z) {
    if (std::find(almostComplete.begin(), almostComplete.end(), z) != almostComplete.end())
      continue;
    bool fits = true;
    for (int c : almostComplete)
      if (!compatible(a, universe[c], universe[z])) {
        fits = false;
        break;
      }
    if (!fits) continue;
    SupportTauTiltingPair p{almostComplete};
    p.members.push_back(z);
    std::sort(p.members.begin(), p.members.end());
    found.push_back(std::move(p));
  }
  if (found.size() != 2) throw CompletionCountMismatch(static_cast<int>(found.size()));
  return {found[0], found[1]};
}

HassePoset buildHasse(const Algebra& a, int initialLen, int maxLenCap) {
  int len = initialLen < 0 ? a.dimension() : initialLen;
  if (len < 1) len = 1;
  for (;; len *= 2) {
    if (len > maxLenCap) throw LengthCapExceeded(maxLenCap);
    HassePoset poset;
    poset.universe = rigidObjects(a, len);
    poset.nodes = supportTauTiltingPairs(a, poset.universe);
    int count = static_cast<int>(poset.nodes.size());
    if (count == 0) continue;

    std::vector<std::pair<int, int>> undirected;
    std::vector<int> degree(count, 0);
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) {
        std::vector<int> common;
        std::set_intersection(poset.nodes[i].members.begin(), poset.nodes[i].members.end(),
                              poset.nodes[j].members.begin(), poset.nodes[j].members.end(),
                              std::back_inserter(common));
        if (static_cast<int>(common.size()) == a.vertexCount() - 1) {
          undirected.emplace_back(i, j);
          ++degree[i];
          ++degree[j];
        }
      }
    }
    bool regular = std::all_of(degree.begin(), degree.end(),
                               [&](int d) { return d == a.vertexCount(); });
    if (!regular) continue;

    std::vector<char> seen(count, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int visited = 1;
    while (!bfs.empty()) {
      int at = bfs.front();
      bfs.pop();
      for (const auto& [i, j] : undirected) {
        int other = i == at ? j : j == at ? i : -1;
        if (other >= 0 && !seen[other]) {
          seen[other] = 1;
          ++visited;
          bfs.push(other);
        }
      }
    }
    if (visited != count) continue;

    for (const auto& [i, j] : undirected) {
      bool jLeqI = orderLeq(a, poset.universe, poset.nodes[j], poset.nodes[i]);
      bool iLeqJ = orderLeq(a, poset.universe, poset.nodes[i], poset.nodes[j]);
      if (jLeqI == iLeqJ)
        throw std::logic_error("mutation edge is not strictly ordered");
      poset.edges.emplace_back(jLeqI ? std::make_pair(i, j) : std::make_pair(j, i));
    }

    for (int i = 0; i < count; ++i) {
      bool allProj = true;
      bool allShift = true;
      for (int x : poset.nodes[i].members) {
        const RigidObject& o = poset.universe[x];
        if (o.kind != ObjectKind::String || !o.closure.letters.empty()) allProj = false;
        if (o.kind != ObjectKind::ShiftedProjective) allShift = false;
      }
      if (allProj) poset.top = i;
      if (allShift) poset.bottom = i;
    }
    poset.acceptedLen = len;
    return poset;
  }
}

}  // namespace strig
