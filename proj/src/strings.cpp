#include "strig/strings.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace strig {

namespace {

std::string describeWord(const Algebra& a, const std::vector<Letter>& letters) {
  std::string out;
  for (Letter l : letters) {
    out += a.arrow(l.arrow).name;
    if (l.inverse) out += "^-";
  }
  return out;
}

std::optional<IllegalWord> findViolation(const Algebra& a, const std::vector<Letter>& letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i].arrow == letters[i - 1].arrow && letters[i].inverse != letters[i - 1].inverse)
      return IllegalWord(IllegalWord::Clause::InverseAdjacency, describeWord(a, letters));
    if (walkTarget(a, letters[i - 1]) != walkSource(a, letters[i]))
      return IllegalWord(IllegalWord::Clause::JunctionMismatch, describeWord(a, letters));
  }
  std::size_t b = 0;
  while (b < letters.size()) {
    std::size_t e = b + 1;
    while (e < letters.size() && letters[e].inverse == letters[b].inverse) ++e;
    std::vector<int> direct;
    direct.reserve(e - b);
    if (letters[b].inverse) {
      for (std::size_t i = e; i > b; --i) direct.push_back(letters[i - 1].arrow);
    } else {
      for (std::size_t i = b; i < e; ++i) direct.push_back(letters[i].arrow);
    }
    if (a.inIdeal(direct))
      return IllegalWord(IllegalWord::Clause::RelationSubword, describeWord(a, letters));
    b = e;
  }
  return std::nullopt;
}

}  // namespace

int walkVertex(const Algebra& a, const StringWord& w, int i) {
  if (w.trivial()) return w.trivialVertex;
  if (i == 0) return walkSource(a, w.letters.front());
  return walkTarget(a, w.letters.at(i - 1));
}

StringWord trivialString(const Algebra& a, int vertex, bool inverse) {
  if (vertex < 0 || vertex >= a.vertexCount())
    throw AlgebraError("UnknownVertex", std::to_string(vertex));
  StringWord w;
  w.trivialVertex = vertex;
  w.trivialInverse = inverse;
  return w;
}

StringWord makeString(const Algebra& a, std::vector<Letter> letters) {
  if (letters.empty())
    throw IllegalWord(IllegalWord::Clause::JunctionMismatch, "empty word has no walk");
  if (auto bad = findViolation(a, letters)) throw *bad;
  StringWord w;
  w.letters = std::move(letters);
  return w;
}

bool validString(const Algebra& a, const std::vector<Letter>& letters) {
  return !letters.empty() && !findViolation(a, letters);
}

bool canAppend(const Algebra& a, const StringWord& w, Letter next) {
  if (w.trivial()) return walkSource(a, next) == w.trivialVertex;
  Letter last = w.letters.back();
  if (next.arrow == last.arrow && next.inverse != last.inverse) return false;
  if (walkTarget(a, last) != walkSource(a, next)) return false;
  if (next.inverse != last.inverse) return true;
  // The trailing maximal run grows by one letter; recheck its direct path.
  std::size_t b = w.letters.size();
  while (b > 0 && w.letters[b - 1].inverse == next.inverse) --b;
  std::vector<int> direct;
  direct.reserve(w.letters.size() - b + 1);
  if (next.inverse) {
    direct.push_back(next.arrow);
    for (std::size_t i = w.letters.size(); i > b; --i) direct.push_back(w.letters[i - 1].arrow);
  } else {
    for (std::size_t i = b; i < w.letters.size(); ++i) direct.push_back(w.letters[i].arrow);
    direct.push_back(next.arrow);
  }
  return !a.inIdeal(direct);
}

StringWord inverseWord(const StringWord& w) {
  StringWord out;
  if (w.trivial()) {
    out.trivialVertex = w.trivialVertex;
    out.trivialInverse = !w.trivialInverse;
    return out;
  }
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->arrow, !it->inverse});
  return out;
}

StringWord canonicalWord(const StringWord& w) {
  if (w.trivial()) {
    StringWord out = w;
    out.trivialInverse = false;
    return out;
  }
  StringWord rev = inverseWord(w);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    int kf = letterKey(w.letters[i]);
    int kb = letterKey(rev.letters[i]);
    if (kf < kb) return w;
    if (kb < kf) return rev;
  }
  return w;
}

bool wordLess(const StringWord& x, const StringWord& y) {
  if (x.length() != y.length()) return x.length() < y.length();
  if (x.trivial()) {
    if (x.trivialVertex != y.trivialVertex) return x.trivialVertex < y.trivialVertex;
    return x.trivialInverse < y.trivialInverse;
  }
  for (int i = 0; i < x.length(); ++i) {
    int kx = letterKey(x.letters[i]);
    int ky = letterKey(y.letters[i]);
    if (kx != ky) return kx < ky;
  }
  return false;
}

std::vector<DirectedFactor> factorDirected(const Algebra& a, const StringWord& w) {
  std::vector<DirectedFactor> out;
  if (w.trivial()) return out;
  int n = w.length();
  int b = 0;
  while (b < n) {
    int e = b + 1;
    while (e < n && w.letters[e].inverse == w.letters[b].inverse) ++e;
    DirectedFactor f;
    f.begin = b;
    f.end = e;
    f.inverse = w.letters[b].inverse;
    f.direct.arrows.reserve(e - b);
    if (f.inverse) {
      for (int i = e; i > b; --i) f.direct.arrows.push_back(w.letters[i - 1].arrow);
      f.direct.source = walkVertex(a, w, e);
      f.direct.target = walkVertex(a, w, b);
    } else {
      for (int i = b; i < e; ++i) f.direct.arrows.push_back(w.letters[i].arrow);
      f.direct.source = walkVertex(a, w, b);
      f.direct.target = walkVertex(a, w, e);
    }
    out.push_back(std::move(f));
    b = e;
  }
  return out;
}

std::vector<IntermediatePoint> intermediatePoints(const Algebra& a, const StringWord& w) {
  std::vector<IntermediatePoint> out;
  if (w.trivial()) {
    out.push_back({0, w.trivialVertex, PointKind::Upper});
    return out;
  }
  auto factors = factorDirected(a, w);
  int l = static_cast<int>(factors.size());
  for (int i = 0; i <= l; ++i) {
    IntermediatePoint p;
    p.index = i;
    p.vertex = walkVertex(a, w, i == 0 ? 0 : factors[i - 1].end);
    if (i == 0) {
      p.kind = factors.front().inverse ? PointKind::Lower : PointKind::Upper;
    } else if (i == l) {
      p.kind = factors.back().inverse ? PointKind::Upper : PointKind::Lower;
    } else {
      p.kind = factors[i - 1].inverse && !factors[i].inverse ? PointKind::Upper : PointKind::Lower;
    }
    out.push_back(p);
  }
  return out;
}

namespace {

int designatedArrowOut(const Algebra& a, int v) {
  int best = -1;
  for (int x : a.arrowsOut(v)) {
    if (best < 0 || a.arrow(x).name < a.arrow(best).name) best = x;
  }
  return best;
}

// No arrow extends the direct version of the end factor to a nonzero path.
bool looseEnd(const Algebra& a, const DirectedFactor& f) {
  for (int x : a.arrowsOut(f.direct.target)) {
    std::vector<int> seq = f.direct.arrows;
    seq.push_back(x);
    if (!a.inIdeal(seq)) return false;
  }
  return true;
}

bool leftLoose(const Algebra& a, const std::vector<DirectedFactor>& factors) {
  return factors.front().inverse && looseEnd(a, factors.front());
}

bool rightLoose(const Algebra& a, const std::vector<DirectedFactor>& factors) {
  return !factors.back().inverse && looseEnd(a, factors.back());
}

StringWord dropFront(const Algebra& a, const StringWord& w,
                     const std::vector<DirectedFactor>& factors) {
  const DirectedFactor& f = factors.front();
  if (factors.size() == 1) return trivialString(a, walkVertex(a, w, f.end));
  StringWord out;
  out.letters.assign(w.letters.begin() + f.end, w.letters.end());
  return out;
}

StringWord dropBack(const Algebra& a, const StringWord& w,
                    const std::vector<DirectedFactor>& factors) {
  const DirectedFactor& f = factors.back();
  if (factors.size() == 1) return trivialString(a, walkVertex(a, w, f.begin));
  StringWord out;
  out.letters.assign(w.letters.begin(), w.letters.begin() + f.begin);
  return out;
}

StringWord tryAppend(const Algebra& a, const StringWord& w) {
  int found = -1;
  for (int x = 0; x < static_cast<int>(a.arrows().size()); ++x) {
    if (!canAppend(a, w, {x, false})) continue;
    if (found >= 0)
      throw AlgebraError("ContinuationNotUnique",
                         "hook extension of " + describeWord(a, w.letters) + " is ambiguous");
    found = x;
  }
  if (found < 0) return w;
  StringWord out = w;
  out.letters.push_back({found, false});
  return out;
}

StringWord tryPrepend(const Algebra& a, const StringWord& w) {
  StringWord rev = inverseWord(w);
  int found = -1;
  for (int x = 0; x < static_cast<int>(a.arrows().size()); ++x) {
    if (!canAppend(a, rev, {x, false})) continue;
    if (found >= 0)
      throw AlgebraError("ContinuationNotUnique",
                         "hook extension of " + describeWord(a, w.letters) + " is ambiguous");
    found = x;
  }
  if (found < 0) return w;
  StringWord out;
  out.letters.reserve(w.letters.size() + 1);
  out.letters.push_back({found, true});
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

StringWord leftOp(const Algebra& a, const StringWord& w) {
  if (w.trivial()) return w;
  auto factors = factorDirected(a, w);
  if (leftLoose(a, factors)) return dropFront(a, w, factors);
  return tryPrepend(a, w);
}

StringWord rightOp(const Algebra& a, const StringWord& w) {
  if (w.trivial()) return w;
  auto factors = factorDirected(a, w);
  if (rightLoose(a, factors)) return dropBack(a, w, factors);
  return tryAppend(a, w);
}

}  // namespace

StringWord hookClosure(const Algebra& a, const StringWord& w) {
  a.requireValid();
  if (w.trivial()) {
    int d = designatedArrowOut(a, w.trivialVertex);
    if (d < 0) return trivialString(a, w.trivialVertex);
    StringWord seed;
    seed.letters.push_back({d, true});
    return rightOp(a, seed);
  }
  auto factors = factorDirected(a, w);
  if (factors.size() == 1) {
    // A single loose factor leaves first on its loose side, so the other
    // side is completed first.
    if (leftLoose(a, factors)) return leftOp(a, rightOp(a, w));
    if (rightLoose(a, factors)) return rightOp(a, leftOp(a, w));
  }
  StringWord mid = leftOp(a, w);
  if (mid.trivial()) return mid;
  return rightOp(a, mid);
}

ClosureShape analyzeClosure(const Algebra& a, const StringWord& closed) {
  ClosureShape shape;
  shape.word = closed;
  shape.factors = factorDirected(a, closed);
  shape.points = intermediatePoints(a, closed);
  for (const IntermediatePoint& p : shape.points) {
    if (p.kind == PointKind::Upper)
      shape.upperPoints.push_back(p.index);
    else
      shape.lowerPoints.push_back(p.index);
  }
  return shape;
}

std::vector<int> adjacentFactors(const ClosureShape& shape, int index) {
  std::vector<int> out;
  if (shape.word.trivial()) return out;
  int l = static_cast<int>(shape.factors.size());
  if (index >= 1) out.push_back(index - 1);
  if (index < l) out.push_back(index);
  return out;
}

std::vector<int> closedGVector(const Algebra& a, const ClosureShape& shape) {
  std::vector<int> g(a.vertexCount(), 0);
  for (const IntermediatePoint& p : shape.points)
    g[p.vertex] += p.kind == PointKind::Upper ? 1 : -1;
  return g;
}

std::vector<char> closedSupport(const Algebra& a, const ClosureShape& shape) {
  std::vector<char> supp(a.vertexCount(), 0);
  int l = static_cast<int>(shape.factors.size());
  for (const IntermediatePoint& p : shape.points) {
    if (p.kind == PointKind::Lower && p.index > 0 && p.index < l) supp[p.vertex] = 1;
  }
  for (const IntermediatePoint& p : shape.points) {
    if (p.kind != PointKind::Upper) continue;
    std::vector<int> adj = adjacentFactors(shape, p.index);
    for (int e = 0; e < a.vertexCount(); ++e) {
      if (supp[e]) continue;
      for (const Path& w : a.paths(p.vertex, e)) {
        bool factored = false;
        for (int fi : adj) {
          const auto& pre = shape.factors[fi].direct.arrows;
          if (pre.size() <= w.arrows.size() &&
              std::equal(pre.begin(), pre.end(), w.arrows.begin())) {
            factored = true;
            break;
          }
        }
        if (!factored) {
          supp[e] = 1;
          break;
        }
      }
    }
  }
  return supp;
}

std::vector<int> gVector(const Algebra& a, const StringWord& w) {
  return closedGVector(a, analyzeClosure(a, hookClosure(a, w)));
}

std::vector<int> supportVertices(const Algebra& a, const StringWord& w) {
  std::vector<char> supp = closedSupport(a, analyzeClosure(a, hookClosure(a, w)));
  std::vector<int> out;
  for (int e = 0; e < a.vertexCount(); ++e)
    if (supp[e]) out.push_back(e);
  return out;
}

std::string renderWord(const Algebra& a, const StringWord& w) {
  if (w.trivial()) return a.vertexName(w.trivialVertex);
  auto factors = factorDirected(a, w);
  std::string out = a.vertexName(walkVertex(a, w, 0));
  for (const DirectedFactor& f : factors) {
    out += f.inverse ? " ←" : " →";
    for (int x : f.direct.arrows) out += a.arrow(x).name;
    out += " " + a.vertexName(walkVertex(a, w, f.end));
  }
  return out;
}

std::vector<StringWord> enumerateStrings(const Algebra& a, int maxLen) {
  a.requireValid();
  struct Cmp {
    bool operator()(const StringWord& x, const StringWord& y) const { return wordLess(x, y); }
  };
  std::set<StringWord, Cmp> out;
  for (int v = 0; v < a.vertexCount(); ++v) out.insert(trivialString(a, v));

  std::vector<StringWord> level;
  if (maxLen >= 1) {
    for (int x = 0; x < static_cast<int>(a.arrows().size()); ++x) {
      for (bool inv : {false, true}) {
        StringWord w;
        w.letters.push_back({x, inv});
        out.insert(canonicalWord(w));
        level.push_back(std::move(w));
      }
    }
  }
  for (int len = 2; len <= maxLen && !level.empty(); ++len) {
    std::vector<StringWord> next;
    for (const StringWord& w : level) {
      for (int x = 0; x < static_cast<int>(a.arrows().size()); ++x) {
        for (bool inv : {false, true}) {
          Letter letter{x, inv};
          if (!canAppend(a, w, letter)) continue;
          StringWord w2 = w;
          w2.letters.push_back(letter);
          out.insert(canonicalWord(w2));
          next.push_back(std::move(w2));
        }
      }
    }
    level = std::move(next);
  }
  return std::vector<StringWord>(out.begin(), out.end());
}

}  // namespace strig
