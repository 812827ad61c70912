#include "strig/rigidity.hpp"

#include <algorithm>
#include <set>

namespace strig {

namespace {

Letter factorFirstLetter(const ClosureShape& s, int oneBased) {
  return s.word.letters[s.factors[oneBased - 1].begin];
}

Letter factorLastLetter(const ClosureShape& s, int oneBased) {
  return s.word.letters[s.factors[oneBased - 1].end - 1];
}

bool factorsEqual(const ClosureShape& c, int fc, const ClosureShape& d, int fd) {
  const DirectedFactor& f = c.factors[fc - 1];
  const DirectedFactor& g = d.factors[fd - 1];
  if (f.inverse != g.inverse || f.end - f.begin != g.end - g.begin) return false;
  for (int i = 0; i < f.end - f.begin; ++i) {
    if (!(c.word.letters[f.begin + i] == d.word.letters[g.begin + i])) return false;
  }
  return true;
}

// Orientation normalization of the overlap scan: successor factors must
// start alike and predecessor factors must end alike, where both exist.
bool admissibleView(const ClosureShape& c, int i, const ClosureShape& d, int jv) {
  int m = static_cast<int>(c.factors.size());
  int n = static_cast<int>(d.factors.size());
  if (i + 1 <= m && jv + 1 <= n &&
      !(factorFirstLetter(c, i + 1) == factorFirstLetter(d, jv + 1)))
    return false;
  if (i >= 1 && jv >= 1 && !(factorLastLetter(c, i) == factorLastLetter(d, jv)))
    return false;
  return true;
}

// Walks the maximal run of equal factors away from the coincident points in
// both directions and checks the boundary alternatives: leaving the word at
// an upper point on c's side or a lower point on d's side, or a strict
// one-sided factor overhang of the right shape.
bool viewPasses(const ClosureShape& c, int i, const ClosureShape& d, int jv) {
  int m = static_cast<int>(c.factors.size());
  int n = static_cast<int>(d.factors.size());
  for (int sigma : {1, -1}) {
    int t = sigma == 1 ? 1 : 0;
    int e = 0;
    while (true) {
      int inext = i + sigma * (e + 1);
      int jnext = jv + sigma * (e + 1);
      if (inext < 0 || inext > m || jnext < 0 || jnext > n) break;
      if (!factorsEqual(c, i + sigma * e + t, d, jv + sigma * e + t)) break;
      ++e;
    }
    int p = i + sigma * e;
    int q = jv + sigma * e;
    if (c.points[p].kind != d.points[q].kind) continue;
    if (c.points[p].kind == PointKind::Upper) {
      if (sigma == 1 ? p == m : p == 0) return true;
      bool dValid = sigma == 1 ? q + 1 <= n : q - 1 >= 0;
      if (dValid) {
        const auto& dp = d.factors[q + t - 1].direct.arrows;
        const auto& cp = c.factors[p + t - 1].direct.arrows;
        if (dp.size() < cp.size() && std::equal(dp.begin(), dp.end(), cp.begin())) return true;
      }
    } else {
      if (sigma == 1 ? q == n : q == 0) return true;
      bool cValid = sigma == 1 ? p + 1 <= m : p - 1 >= 0;
      if (cValid) {
        const auto& cp = c.factors[p + t - 1].direct.arrows;
        const auto& dp = d.factors[q + t - 1].direct.arrows;
        if (cp.size() < dp.size() &&
            std::equal(cp.begin(), cp.end(), dp.end() - cp.size()))
          return true;
      }
    }
  }
  return false;
}

}  // namespace

bool isCRigidClosed(const Algebra& a, const ClosureShape& c, const ClosureShape& d,
                    bool includeIndexZero) {
  // First condition: every direct path from an upper point of d to a lower
  // point of c starts with an adjacent factor of the former or ends with an
  // adjacent factor of the latter.
  for (const IntermediatePoint& pc : c.points) {
    if (pc.kind != PointKind::Lower) continue;
    std::vector<int> adjC = adjacentFactors(c, pc.index);
    for (const IntermediatePoint& pd : d.points) {
      if (pd.kind != PointKind::Upper) continue;
      std::vector<int> adjD = adjacentFactors(d, pd.index);
      for (const Path& w : a.paths(pd.vertex, pc.vertex)) {
        bool factors = false;
        for (int fi : adjD) {
          const auto& pre = d.factors[fi].direct.arrows;
          if (pre.size() <= w.arrows.size() &&
              std::equal(pre.begin(), pre.end(), w.arrows.begin())) {
            factors = true;
            break;
          }
        }
        if (!factors) {
          for (int fi : adjC) {
            const auto& suf = c.factors[fi].direct.arrows;
            if (suf.size() <= w.arrows.size() &&
                std::equal(suf.begin(), suf.end(), w.arrows.end() - suf.size())) {
              factors = true;
              break;
            }
          }
        }
        if (!factors) return false;
      }
    }
  }

  // Second condition: each same-kind point coincidence between the two
  // words must resolve along some direction of the overlap scan.
  int m = static_cast<int>(c.factors.size());
  int n = static_cast<int>(d.factors.size());
  int lo = includeIndexZero ? 0 : 1;
  ClosureShape dFlip = analyzeClosure(a, inverseWord(d.word));
  for (int i = lo; i <= m; ++i) {
    for (int j = lo; j <= n; ++j) {
      if (c.points[i].vertex != d.points[j].vertex || c.points[i].kind != d.points[j].kind)
        continue;
      bool admDirect = admissibleView(c, i, d, j);
      bool admFlip = admissibleView(c, i, dFlip, n - j);
      bool pass = false;
      if (admDirect && viewPasses(c, i, d, j)) pass = true;
      if (!pass && admFlip && viewPasses(c, i, dFlip, n - j)) pass = true;
      if (!pass && !admDirect && !admFlip &&
          (viewPasses(c, i, d, j) || viewPasses(c, i, dFlip, n - j)))
        pass = true;
      if (!pass) return false;
    }
  }
  return true;
}

bool isCRigid(const Algebra& a, const StringWord& c, const StringWord& d) {
  ClosureShape sc = analyzeClosure(a, canonicalWord(hookClosure(a, c)));
  ClosureShape sd = analyzeClosure(a, canonicalWord(hookClosure(a, d)));
  return isCRigidClosed(a, sc, sd);
}

bool isSelfRigid(const Algebra& a, const StringWord& c) {
  ClosureShape s = analyzeClosure(a, canonicalWord(hookClosure(a, c)));
  return isCRigidClosed(a, s, s);
}

bool rigidTo(const Algebra& a, const RigidObject& x, const RigidObject& y) {
  if (x.kind == ObjectKind::String && y.kind == ObjectKind::String)
    return isCRigidClosed(a, x.shape, y.shape);
  if (x.kind == ObjectKind::String) return true;
  if (y.kind == ObjectKind::String) return !y.support[x.shiftVertex];
  return true;
}

bool compatible(const Algebra& a, const RigidObject& x, const RigidObject& y) {
  return rigidTo(a, x, y) && rigidTo(a, y, x);
}

CrossCheckReport oracleCrossCheck(const Algebra& a, int maxLen) {
  CrossCheckReport r;
  struct Cmp {
    bool operator()(const StringWord& x, const StringWord& y) const { return wordLess(x, y); }
  };
  std::set<StringWord, Cmp> classes;
  for (const StringWord& w : enumerateStrings(a, maxLen))
    classes.insert(canonicalWord(hookClosure(a, w)));

  std::vector<ClosureShape> shapes;
  std::vector<TwoTermComplex> complexes;
  for (const StringWord& cls : classes) {
    shapes.push_back(analyzeClosure(a, cls));
    complexes.push_back(presentationComplex(a, shapes.back()));
  }
  r.classCount = static_cast<int>(shapes.size());

  auto auditRanks = [&](const std::vector<std::vector<int>>& m, const std::string& what) -> int {
    int rq = rankExact(m);
    ++r.matrixCount;
    if (rankMod(m, 2) != rq || rankMod(m, 3) != rq)
      r.rankDisagreements.push_back(what + ": rational and prime field ranks differ");
    return rq;
  };

  for (std::size_t x = 0; x < shapes.size(); ++x) {
    for (std::size_t y = 0; y < shapes.size(); ++y) {
      bool comb = isCRigidClosed(a, shapes[x], shapes[y]);
      auto m = vanishingMatrix(a, complexes[x], complexes[y]);
      std::string tag = "C=" + renderWord(a, shapes[x].word) + " D=" + renderWord(a, shapes[y].word);
      bool homological = auditRanks(m, tag) == static_cast<int>(m.size());
      ++r.pairChecks;
      if (comb != homological) {
        r.discrepancies.push_back("rigidity mismatch " + tag + " combinatorial=" +
                                  (comb ? "1" : "0") + " oracle=" + (homological ? "1" : "0"));
      }
    }
  }

  for (std::size_t x = 0; x < shapes.size(); ++x) {
    std::vector<char> supp = closedSupport(a, shapes[x]);
    for (int e = 0; e < a.vertexCount(); ++e) {
      auto m = vanishingMatrix(a, stalkMinusOne(e), complexes[x]);
      std::string tag = "supp vertex " + a.vertexName(e) + " C=" + renderWord(a, shapes[x].word);
      bool oracleInSupport = auditRanks(m, tag) != static_cast<int>(m.size());
      ++r.supportChecks;
      if (oracleInSupport != static_cast<bool>(supp[e])) {
        r.discrepancies.push_back("support mismatch " + tag + " combinatorial=" +
                                  (supp[e] ? "1" : "0") + " oracle=" +
                                  (oracleInSupport ? "1" : "0"));
      }
    }
  }
  return r;
}

}  // namespace strig
