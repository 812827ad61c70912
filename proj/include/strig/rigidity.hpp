#pragma once

#include <string>
#include <vector>

#include "strig/homoracle.hpp"
#include "strig/strings.hpp"

namespace strig {

// String-combinatorial test that the module of shapeD is rigid relative to
// the module of shapeC, equivalent to Hom(T(C), T(D)[1]) = 0 for their
// presentation complexes. Both shapes must come from completed (closed)
// words. The overlap scan of the second condition runs over all point
// coincidences including the boundary points; restricting to interior
// points misses overlaps where one word ends flush inside the other.
bool isCRigidClosed(const Algebra& a, const ClosureShape& c, const ClosureShape& d,
                    bool includeIndexZero = true);

bool isCRigid(const Algebra& a, const StringWord& c, const StringWord& d);
bool isSelfRigid(const Algebra& a, const StringWord& c);

enum class ObjectKind { String, ShiftedProjective };

// A candidate direct summand of a support tau-tilting pair: either the
// module class of a self-rigid string, or a shifted indecomposable
// projective standing in for an unsupported vertex.
struct RigidObject {
  ObjectKind kind = ObjectKind::String;
  StringWord minimalRep;
  StringWord closure;
  ClosureShape shape;
  TwoTermComplex complex;
  int shiftVertex = -1;
  std::vector<int> g;
  std::vector<char> support;
  std::string label;
};

bool rigidTo(const Algebra& a, const RigidObject& x, const RigidObject& y);
bool compatible(const Algebra& a, const RigidObject& x, const RigidObject& y);

// Full agreement audit between the combinatorial predicates and the exact
// linear-algebra computations, over every ordered pair of module classes
// reachable from strings of length at most maxLen.
struct CrossCheckReport {
  int classCount = 0;
  long long pairChecks = 0;
  long long supportChecks = 0;
  long long matrixCount = 0;
  std::vector<std::string> discrepancies;
  std::vector<std::string> rankDisagreements;
  bool ok() const { return discrepancies.empty() && rankDisagreements.empty(); }
};

CrossCheckReport oracleCrossCheck(const Algebra& a, int maxLen);

}  // namespace strig
