#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strig/rigidity.hpp"

namespace strig {

// All rigid objects reachable from strings of length at most maxLen: one
// object per self-rigid module class (keyed by its completed word, labeled
// by its shortest member) plus one shifted projective per vertex. Sorted by
// g-vector, descending lexicographically, so the projectives lead.
std::vector<RigidObject> rigidObjects(const Algebra& a, int maxLen);

// A full pairwise-compatible selection of |A| rigid objects, stored as
// ascending indices into the universe it was built from.
struct SupportTauTiltingPair {
  std::vector<int> members;
  bool operator==(const SupportTauTiltingPair&) const = default;
};

std::vector<SupportTauTiltingPair> supportTauTiltingPairs(
    const Algebra& a, const std::vector<RigidObject>& universe);

// Partial order on pairs: n <= m when Hom(T_m, T_n[1]) vanishes summand by
// summand, i.e. rigidTo(x, y) for every member x of m and y of n.
bool orderLeq(const Algebra& a, const std::vector<RigidObject>& universe,
              const SupportTauTiltingPair& n, const SupportTauTiltingPair& m);

// The exactly-two ways of extending a compatible set of |A|-1 objects to a
// full pair within the universe. Throws CompletionCountMismatch otherwise.
std::pair<SupportTauTiltingPair, SupportTauTiltingPair> mutationCompletions(
    const Algebra& a, const std::vector<int>& almostComplete,
    const std::vector<RigidObject>& universe);

struct HassePoset {
  std::vector<RigidObject> universe;
  std::vector<SupportTauTiltingPair> nodes;
  // Covering arrows, oriented from the greater node to the lesser one.
  std::vector<std::pair<int, int>> edges;
  int top = -1;
  int bottom = -1;
  int acceptedLen = 0;
};

// Iterative deepening over the string length: enumerate pairs, connect the
// ones differing in a single member, and accept once the undirected graph
// is |A|-regular and connected, which certifies completeness. The length
// starts at initialLen (dimension of the algebra when negative) and doubles
// up to maxLenCap; past the cap throws LengthCapExceeded.
HassePoset buildHasse(const Algebra& a, int initialLen = -1, int maxLenCap = 64);

}  // namespace strig
