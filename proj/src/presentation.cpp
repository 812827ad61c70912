#include "strig/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace strig {

namespace {

constexpr std::size_t kPathCountCap = std::size_t(1) << 20;

std::string joinNames(const Algebra& a, std::span<const int> arrowSeq) {
  std::string out;
  for (int x : arrowSeq) out += a.arrow(x).name;
  return out;
}

}  // namespace

int Algebra::vertexIndex(const std::string& name) const {
  for (int v = 0; v < vertexCount(); ++v)
    if (vertexNames_[v] == name) return v;
  throw AlgebraError("UnknownVertex", name);
}

int Algebra::arrowIndex(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(arrows_.size()); ++i)
    if (arrows_[i].name == name) return i;
  throw AlgebraError("UnknownArrow", name);
}

bool Algebra::composable(std::span<const int> arrowSeq) const {
  for (std::size_t i = 0; i + 1 < arrowSeq.size(); ++i)
    if (arrows_[arrowSeq[i]].target != arrows_[arrowSeq[i + 1]].source) return false;
  return true;
}

bool Algebra::inIdeal(std::span<const int> arrowSeq) const {
  for (const auto& rel : relations_) {
    if (rel.size() > arrowSeq.size()) continue;
    for (std::size_t off = 0; off + rel.size() <= arrowSeq.size(); ++off) {
      if (std::equal(rel.begin(), rel.end(), arrowSeq.begin() + off)) return true;
    }
  }
  return false;
}

bool Algebra::pathNonzero(std::span<const int> arrowSeq) const {
  return composable(arrowSeq) && !inIdeal(arrowSeq);
}

Algebra Algebra::make(std::string name, std::vector<std::string> vertexNames,
                      std::vector<ArrowDef> arrowDefs,
                      std::vector<std::vector<std::string>> relationDefs) {
  Algebra a;
  a.name_ = std::move(name);

  std::set<std::string> seen;
  for (const auto& v : vertexNames) {
    if (!seen.insert(v).second) throw AlgebraError("DuplicateName", "vertex " + v);
  }
  a.vertexNames_ = std::move(vertexNames);
  a.arrowsOut_.resize(a.vertexNames_.size());
  a.arrowsIn_.resize(a.vertexNames_.size());

  for (const auto& [an, src, tgt] : arrowDefs) {
    if (seen.count(an)) throw AlgebraError("DuplicateName", "arrow " + an);
    seen.insert(an);
    Arrow arr;
    arr.name = an;
    arr.source = a.vertexIndex(src);
    arr.target = a.vertexIndex(tgt);
    int idx = static_cast<int>(a.arrows_.size());
    a.arrows_.push_back(arr);
    a.arrowsOut_[arr.source].push_back(idx);
    a.arrowsIn_[arr.target].push_back(idx);
  }

  for (const auto& rel : relationDefs) {
    std::vector<int> seq;
    seq.reserve(rel.size());
    for (const auto& an : rel) seq.push_back(a.arrowIndex(an));
    if (seq.size() < 2)
      throw AlgebraError("RelationTooShort", "relation " + joinNames(a, seq));
    if (!a.composable(seq))
      throw AlgebraError("RelationNotComposable", "relation " + joinNames(a, seq));
    a.maxRelLen_ = std::max(a.maxRelLen_, static_cast<int>(seq.size()));
    a.relations_.push_back(std::move(seq));
  }

  a.validateAndBuild();
  return a;
}

void Algebra::validateAndBuild() {
  for (int v = 0; v < vertexCount(); ++v) {
    if (arrowsOut_[v].size() > 2)
      report_.issues.push_back({"TooManyArrowsOut", "vertex " + vertexNames_[v]});
    if (arrowsIn_[v].size() > 2)
      report_.issues.push_back({"TooManyArrowsIn", "vertex " + vertexNames_[v]});
  }

  // Bounded breadth-first growth of the nonzero paths. A nonzero path
  // beyond this length forces a relation-free cycle, so the algebra is
  // infinite dimensional.
  const int lengthBound = static_cast<int>(arrows_.size()) * (1 + maxRelLen_);
  std::vector<Path> basis;
  std::vector<Path> frontier;
  for (int v = 0; v < vertexCount(); ++v) {
    Path lazy;
    lazy.source = lazy.target = v;
    basis.push_back(lazy);
    frontier.push_back(std::move(lazy));
  }
  bool infinite = false;
  std::string witness;
  while (!frontier.empty() && !infinite) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (int x : arrowsOut_[p.target]) {
        Path q = p;
        q.arrows.push_back(x);
        q.target = arrows_[x].target;
        // The prefix is relation-free, so only a relation ending at the
        // new arrow can appear.
        bool zero = false;
        for (const auto& rel : relations_) {
          if (rel.size() > q.arrows.size()) continue;
          if (std::equal(rel.begin(), rel.end(), q.arrows.end() - rel.size())) {
            zero = true;
            break;
          }
        }
        if (zero) continue;
        if (q.length() > lengthBound) {
          infinite = true;
          witness = joinNames(*this, q.arrows);
          break;
        }
        basis.push_back(q);
        next.push_back(std::move(q));
        if (basis.size() > kPathCountCap) {
          infinite = true;
          witness = "path count exceeds " + std::to_string(kPathCountCap);
          break;
        }
      }
      if (infinite) break;
    }
    frontier = std::move(next);
  }
  if (infinite) {
    report_.issues.push_back({"InfiniteDimensional", witness});
    return;
  }

  // Unique continuation: a nonzero path extends by at most one arrow on
  // each side.
  for (const Path& p : basis) {
    if (p.length() == 0) continue;
    int rightExt = 0;
    for (int x : arrowsOut_[p.target]) {
      std::vector<int> seq = p.arrows;
      seq.push_back(x);
      if (!inIdeal(seq)) ++rightExt;
    }
    if (rightExt > 1) {
      report_.issues.push_back(
          {"ContinuationNotUnique", "path " + joinNames(*this, p.arrows) + " extends right"});
    }
    int leftExt = 0;
    for (int x : arrowsIn_[p.source]) {
      std::vector<int> seq;
      seq.reserve(p.arrows.size() + 1);
      seq.push_back(x);
      seq.insert(seq.end(), p.arrows.begin(), p.arrows.end());
      if (!inIdeal(seq)) ++leftExt;
    }
    if (leftExt > 1) {
      report_.issues.push_back(
          {"ContinuationNotUnique", "path " + joinNames(*this, p.arrows) + " extends left"});
    }
  }
  if (!report_.ok()) return;

  std::sort(basis.begin(), basis.end(), [this](const Path& x, const Path& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    if (x.length() == 0) return std::tie(x.source, x.target) < std::tie(y.source, y.target);
    return joinNames(*this, x.arrows) < joinNames(*this, y.arrows);
  });
  pathBasis_ = std::move(basis);
  dimension_ = static_cast<int>(pathBasis_.size());
  pathTable_.assign(vertexCount(), std::vector<std::vector<Path>>(vertexCount()));
  for (const Path& p : pathBasis_) pathTable_[p.source][p.target].push_back(p);
}

void Algebra::requireValid() const {
  if (report_.ok()) return;
  const auto& first = report_.issues.front();
  throw AlgebraError(first.code, first.detail);
}

const std::vector<Path>& Algebra::pathBasis() const {
  requireValid();
  return pathBasis_;
}

const std::vector<Path>& Algebra::paths(int from, int to) const {
  requireValid();
  return pathTable_.at(from).at(to);
}

int Algebra::dimension() const {
  requireValid();
  return dimension_;
}

Algebra Algebra::fromJson(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw AlgebraError("SyntaxError", e.what());
  }
  if (!j.is_object()) throw AlgebraError("SyntaxError", "top level must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "name" && key != "vertices" && key != "arrows" && key != "relations")
      throw AlgebraError("UnknownField", key);
  }

  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw AlgebraError("SyntaxError", "name must be a string");
    name = j["name"].get<std::string>();
  }

  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw AlgebraError("SyntaxError", "vertices must be an array of strings");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw AlgebraError("SyntaxError", "vertices must be an array of strings");
    vertices.push_back(v.get<std::string>());
  }

  if (!j.contains("arrows") || !j["arrows"].is_array())
    throw AlgebraError("SyntaxError", "arrows must be an array of objects");
  std::vector<ArrowDef> arrowDefs;
  for (const auto& arr : j["arrows"]) {
    if (!arr.is_object()) throw AlgebraError("SyntaxError", "arrows must be an array of objects");
    for (const auto& [key, value] : arr.items()) {
      (void)value;
      if (key != "name" && key != "source" && key != "target")
        throw AlgebraError("UnknownField", "arrows." + key);
    }
    for (const char* field : {"name", "source", "target"}) {
      if (!arr.contains(field) || !arr[field].is_string())
        throw AlgebraError("SyntaxError", std::string("arrow field ") + field + " must be a string");
    }
    arrowDefs.push_back({arr["name"].get<std::string>(), arr["source"].get<std::string>(),
                         arr["target"].get<std::string>()});
  }

  if (!j.contains("relations") || !j["relations"].is_array())
    throw AlgebraError("SyntaxError", "relations must be an array of arrays");
  std::vector<std::vector<std::string>> relationDefs;
  for (const auto& rel : j["relations"]) {
    if (!rel.is_array()) throw AlgebraError("SyntaxError", "relations must be an array of arrays");
    std::vector<std::string> names;
    for (const auto& an : rel) {
      if (!an.is_string()) throw AlgebraError("SyntaxError", "relation entries must be arrow names");
      names.push_back(an.get<std::string>());
    }
    relationDefs.push_back(std::move(names));
  }

  return make(std::move(name), std::move(vertices), std::move(arrowDefs), std::move(relationDefs));
}

Algebra parseAlgebra(const std::string& text) {
  Algebra a = Algebra::fromJson(text);
  a.requireValid();
  return a;
}

}  // namespace strig
