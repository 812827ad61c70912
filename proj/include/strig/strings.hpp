#pragma once

#include <string>
#include <vector>

#include "strig/presentation.hpp"

namespace strig {

// One letter of a walk word: an arrow traversed forwards or backwards.
struct Letter {
  int arrow = -1;
  bool inverse = false;
  bool operator==(const Letter&) const = default;
};

// A string: either a reduced walk word (letters nonempty) or a lazy walk at
// a vertex. Lazy walks carry a polarity bit; inverting flips it, and the
// canonical form clears it.
struct StringWord {
  std::vector<Letter> letters;
  int trivialVertex = -1;
  bool trivialInverse = false;

  bool trivial() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const StringWord&) const = default;
};

inline int walkSource(const Algebra& a, Letter l) {
  const Arrow& arr = a.arrow(l.arrow);
  return l.inverse ? arr.target : arr.source;
}
inline int walkTarget(const Algebra& a, Letter l) {
  const Arrow& arr = a.arrow(l.arrow);
  return l.inverse ? arr.source : arr.target;
}

// Vertex of the walk after its first `i` letters.
int walkVertex(const Algebra& a, const StringWord& w, int i);
inline int stringSource(const Algebra& a, const StringWord& w) { return walkVertex(a, w, 0); }
inline int stringTarget(const Algebra& a, const StringWord& w) {
  return walkVertex(a, w, w.length());
}

StringWord trivialString(const Algebra& a, int vertex, bool inverse = false);
// Builds a string from letters, throwing IllegalWord on the violated clause:
// consecutive mutually inverse letters, a walk discontinuity, or a maximal
// directed run whose path lies in the ideal.
StringWord makeString(const Algebra& a, std::vector<Letter> letters);
bool validString(const Algebra& a, const std::vector<Letter>& letters);
// Incremental validity of w extended by one letter on the right.
bool canAppend(const Algebra& a, const StringWord& w, Letter next);

StringWord inverseWord(const StringWord& w);
// Orders a letter against its peers: arrows first by index, direct before
// inverse.
inline int letterKey(Letter l) { return 2 * l.arrow + (l.inverse ? 1 : 0); }
// The lexicographically smaller of w and its inverse.
StringWord canonicalWord(const StringWord& w);
// Order by length, then trivial vertex, then letter keys.
bool wordLess(const StringWord& x, const StringWord& y);

// Human-readable walk with explicit vertices, e.g. "1 <-b 0 ->ab 1".
std::string renderWord(const Algebra& a, const StringWord& w);

// A maximal directed run letters[begin..end), stored with its direct path
// version regardless of orientation.
struct DirectedFactor {
  int begin = 0;
  int end = 0;
  bool inverse = false;
  Path direct;
};

std::vector<DirectedFactor> factorDirected(const Algebra& a, const StringWord& w);

enum class PointKind { Upper, Lower };

struct IntermediatePoint {
  int index = 0;
  int vertex = -1;
  PointKind kind = PointKind::Upper;
};

// The l+1 walk boundary points of w with their peak/valley kinds; a lazy
// walk has the single upper point at its vertex.
std::vector<IntermediatePoint> intermediatePoints(const Algebra& a, const StringWord& w);

// Two-sided hook completion: extends or trims each end so the word presents
// the module it generates.  Not idempotent in general.
StringWord hookClosure(const Algebra& a, const StringWord& w);

struct ClosureShape {
  StringWord word;
  std::vector<DirectedFactor> factors;
  std::vector<IntermediatePoint> points;
  std::vector<int> upperPoints;
  std::vector<int> lowerPoints;
};

ClosureShape analyzeClosure(const Algebra& a, const StringWord& closed);

// Indices of the factors touching point `index`: the incoming factor
// index-1 and the outgoing factor index, where present.
std::vector<int> adjacentFactors(const ClosureShape& shape, int index);

std::vector<int> closedGVector(const Algebra& a, const ClosureShape& shape);
std::vector<char> closedSupport(const Algebra& a, const ClosureShape& shape);

// Closure-level invariants of an arbitrary string.
std::vector<int> gVector(const Algebra& a, const StringWord& w);
std::vector<int> supportVertices(const Algebra& a, const StringWord& w);

// All strings of length at most maxLen, one canonical representative each,
// sorted by wordLess.
std::vector<StringWord> enumerateStrings(const Algebra& a, int maxLen);

}  // namespace strig
