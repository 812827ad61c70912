#pragma once

#include <vector>

#include "strig/presentation.hpp"
#include "strig/strings.hpp"

namespace strig {

// One component of the differential of a two-term complex of projectives:
// the map P_{degMinus1[fromM]} -> P_{deg0[to0]} given by left
// multiplication with `path`, a nonzero path from deg0[to0] to
// degMinus1[fromM].
struct DiffEntry {
  int to0 = -1;
  int fromM = -1;
  Path path;
};

// Complex P^{-1} -> P^0 of projectives, each degree a direct sum of
// indecomposables P_v listed by vertex.
struct TwoTermComplex {
  std::vector<int> degMinus1;
  std::vector<int> deg0;
  std::vector<DiffEntry> diff;
};

// Minimal projective presentation of the module presented by a closed
// string: degree 0 summands come from the upper points, degree -1 summands
// from the lower points, and the differential components are the direct
// versions of the factors. A length zero closure gives the stalk complex
// of its projective.
TwoTermComplex presentationComplex(const Algebra& a, const ClosureShape& shape);

TwoTermComplex stalkZero(int vertex);
TwoTermComplex stalkMinusOne(int vertex);

// Matrix of the homotopy map Hom(c^0, d^0) + Hom(c^{-1}, d^{-1}) ->
// Hom(c^{-1}, d^0), (Y, X) -> Y.dc - dd.X, over the nonzero path bases.
// Hom(c, d[1]) in the homotopy category vanishes exactly when this matrix
// has full row rank.
std::vector<std::vector<int>> vanishingMatrix(const Algebra& a, const TwoTermComplex& c,
                                              const TwoTermComplex& d);

// Exact rank over the rationals (fraction-free elimination on big
// integers) and rank over the prime field GF(p).
int rankExact(const std::vector<std::vector<int>>& m);
int rankMod(const std::vector<std::vector<int>>& m, int p);

// Exact determinant of a square integer matrix.
long long detExact(const std::vector<std::vector<int>>& m);

// Whether Hom(c, d[1]) = 0 in the homotopy category of projectives.
bool homShiftVanishes(const Algebra& a, const TwoTermComplex& c, const TwoTermComplex& d);

// Homological support test: Hom(P_e[1], d[1]) = 0, which holds exactly
// when e is outside the support of the module d presents.
bool oracleSupportVanishes(const Algebra& a, int e, const TwoTermComplex& d);

}  // namespace strig
