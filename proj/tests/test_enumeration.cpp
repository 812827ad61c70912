#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "strig/enumeration.hpp"
#include "strig/errors.hpp"
#include "strig/homoracle.hpp"

using fixtures::word;
using strig::Algebra;
using strig::HassePoset;
using strig::RigidObject;
using strig::SupportTauTiltingPair;

namespace {

std::multiset<std::vector<int>> gMultiset(const std::vector<RigidObject>& objs) {
  std::multiset<std::vector<int>> s;
  for (const auto& o : objs) s.insert(o.g);
  return s;
}

int findLabel(const std::vector<RigidObject>& objs, const std::string& label) {
  for (std::size_t i = 0; i < objs.size(); ++i)
    if (objs[i].label == label) return static_cast<int>(i);
  return -1;
}

std::set<std::set<std::string>> pairLabelSets(const std::vector<RigidObject>& universe,
                                              const std::vector<SupportTauTiltingPair>& pairs) {
  std::set<std::set<std::string>> out;
  for (const auto& p : pairs) {
    std::set<std::string> names;
    for (int m : p.members) names.insert(universe[m].label);
    out.insert(std::move(names));
  }
  return out;
}

}  // namespace

TEST_CASE("rigid objects of the loop-plus-cycle algebra") {
  Algebra a = fixtures::r2ab();
  auto objs = strig::rigidObjects(a, 7);
  REQUIRE(objs.size() == 8);

  std::multiset<std::vector<int>> expected{{1, 0},  {0, 1},  {1, -2}, {-1, 2},
                                           {1, -1}, {-1, 1}, {-1, 0}, {0, -1}};
  CHECK(gMultiset(objs) == expected);

  int p0 = findLabel(objs, "P_0");
  REQUIRE(p0 >= 0);
  CHECK(objs[p0].g == std::vector<int>{1, 0});
  CHECK(objs[p0].kind == strig::ObjectKind::String);
  CHECK(strig::renderWord(a, objs[p0].minimalRep) == "1 ←β 0 →αβ 1");

  int x = findLabel(objs, "M[1,-2]");
  REQUIRE(x >= 0);
  CHECK(strig::renderWord(a, objs[x].minimalRep) == "0 →α 0");
  CHECK(objs[x].support == std::vector<char>{1, 0});

  int sh1 = findLabel(objs, "P_1^∨");
  REQUIRE(sh1 >= 0);
  CHECK(objs[sh1].kind == strig::ObjectKind::ShiftedProjective);
  CHECK(objs[sh1].g == std::vector<int>{0, -1});

  // Sorted by descending g-vector, so the projective at 0 leads.
  CHECK(objs[0].label == "P_0");

  auto ms = gMultiset(objs);
  std::set<std::vector<int>> distinct(ms.begin(), ms.end());
  CHECK(distinct.size() == objs.size());
}

TEST_CASE("support pairs of the loop-plus-cycle algebra") {
  Algebra a = fixtures::r2ab();
  auto objs = strig::rigidObjects(a, 7);
  auto pairs = strig::supportTauTiltingPairs(a, objs);
  CHECK(pairs.size() == 8);

  std::set<std::set<std::string>> expect{
      {"P_0", "P_1"},        {"M[-1,2]", "P_1"},     {"P_0", "M[1,-1]"},
      {"M[-1,2]", "M[-1,1]"}, {"M[1,-2]", "M[1,-1]"}, {"M[-1,1]", "P_0^∨"},
      {"M[1,-2]", "P_1^∨"},  {"P_0^∨", "P_1^∨"}};
  CHECK(pairLabelSets(objs, pairs) == expect);

  for (const auto& p : pairs) {
    std::vector<std::vector<int>> m;
    for (int i : p.members) m.push_back(objs[i].g);
    long long det = strig::detExact(m);
    CHECK((det == 1 || det == -1));
  }
}

TEST_CASE("pair order and mutation completions") {
  Algebra a = fixtures::w2b();
  auto objs = strig::rigidObjects(a, 6);
  REQUIRE(objs.size() == 6);
  auto pairs = strig::supportTauTiltingPairs(a, objs);
  REQUIRE(pairs.size() == 6);

  int p0 = findLabel(objs, "P_0");
  int p1 = findLabel(objs, "P_1");
  int y = findLabel(objs, "M[1,-1]");
  int yv = findLabel(objs, "M[-1,1]");
  int s0 = findLabel(objs, "P_0^∨");
  int s1 = findLabel(objs, "P_1^∨");
  REQUIRE((p0 >= 0 && p1 >= 0 && y >= 0 && yv >= 0 && s0 >= 0 && s1 >= 0));

  auto pairOf = [&](int u, int v) {
    SupportTauTiltingPair p{{std::min(u, v), std::max(u, v)}};
    REQUIRE(std::find(pairs.begin(), pairs.end(), p) != pairs.end());
    return p;
  };
  SupportTauTiltingPair top = pairOf(p0, p1);
  SupportTauTiltingPair bottom = pairOf(s0, s1);
  SupportTauTiltingPair py = pairOf(p0, y);
  SupportTauTiltingPair yShift = pairOf(y, s1);
  SupportTauTiltingPair yvShift = pairOf(yv, s0);

  for (const auto& p : pairs) {
    CHECK(strig::orderLeq(a, objs, p, p));
    CHECK(strig::orderLeq(a, objs, bottom, p));
    CHECK(strig::orderLeq(a, objs, p, top));
  }
  CHECK(strig::orderLeq(a, objs, yShift, py));
  CHECK_FALSE(strig::orderLeq(a, objs, py, yShift));
  CHECK_FALSE(strig::orderLeq(a, objs, yvShift, py));
  CHECK_FALSE(strig::orderLeq(a, objs, py, yvShift));

  auto [c1, c2] = strig::mutationCompletions(a, {p1}, objs);
  std::set<std::set<std::string>> want{{"P_0", "P_1"}, {"M[-1,1]", "P_1"}};
  CHECK(pairLabelSets(objs, {c1, c2}) == want);

  auto [d1, d2] = strig::mutationCompletions(a, {y}, objs);
  std::set<std::set<std::string>> wantY{{"P_0", "M[1,-1]"}, {"M[1,-1]", "P_1^∨"}};
  CHECK(pairLabelSets(objs, {d1, d2}) == wantY);

  CHECK_THROWS_AS(strig::mutationCompletions(a, {p0, p1}, objs),
                  strig::CompletionCountMismatch);
}

TEST_CASE("hasse poset of the loop-plus-cycle algebra is the 8-cycle") {
  Algebra a = fixtures::r2ab();
  HassePoset h = strig::buildHasse(a);
  CHECK(h.nodes.size() == 8);
  CHECK(h.edges.size() == 8);
  CHECK(h.acceptedLen == 7);

  std::vector<int> outDeg(h.nodes.size(), 0), inDeg(h.nodes.size(), 0);
  for (const auto& [from, to] : h.edges) {
    ++outDeg[from];
    ++inDeg[to];
  }
  REQUIRE(h.top >= 0);
  REQUIRE(h.bottom >= 0);
  CHECK(inDeg[h.top] == 0);
  CHECK(outDeg[h.top] == 2);
  CHECK(outDeg[h.bottom] == 0);
  CHECK(inDeg[h.bottom] == 2);
  int sources = 0, sinks = 0;
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    CHECK(inDeg[i] + outDeg[i] == 2);
    if (inDeg[i] == 0) ++sources;
    if (outDeg[i] == 0) ++sinks;
  }
  CHECK(sources == 1);
  CHECK(sinks == 1);
}

TEST_CASE("hasse poset of the radical-square-zero cycle is the hexagon") {
  Algebra a = fixtures::w2b();
  HassePoset h = strig::buildHasse(a);
  CHECK(h.nodes.size() == 6);
  CHECK(h.edges.size() == 6);
}

TEST_CASE("three-vertex enumerations match the published counts") {
  Algebra a = fixtures::r3abd();
  auto objs = strig::rigidObjects(a, 15);
  CHECK(objs.size() == 18);
  auto pairs = strig::supportTauTiltingPairs(a, objs);
  CHECK(pairs.size() == 32);

  HassePoset h = strig::buildHasse(a);
  CHECK(h.nodes.size() == 32);
  CHECK(h.edges.size() == 48);

  Algebra c = fixtures::r3c();
  REQUIRE(c.validation().ok());
  CHECK(c.dimension() == 9);
  auto cObjs = strig::rigidObjects(c, 9);
  int stringClasses = 0;
  for (const auto& o : cObjs)
    if (o.kind == strig::ObjectKind::String) ++stringClasses;
  CHECK(stringClasses == 11);
  CHECK(strig::supportTauTiltingPairs(c, cObjs).size() == 24);
}

TEST_CASE("enumeration is stable past the acceptance length") {
  Algebra a = fixtures::r2ab();
  auto objs = strig::rigidObjects(a, 7);
  auto objsWider = strig::rigidObjects(a, 11);
  REQUIRE(objs.size() == objsWider.size());
  for (std::size_t i = 0; i < objs.size(); ++i) {
    CHECK(objs[i].g == objsWider[i].g);
    CHECK(objs[i].label == objsWider[i].label);
    CHECK_FALSE(strig::wordLess(objs[i].minimalRep, objsWider[i].minimalRep));
    CHECK_FALSE(strig::wordLess(objsWider[i].minimalRep, objs[i].minimalRep));
  }
  CHECK(pairLabelSets(objs, strig::supportTauTiltingPairs(a, objs)) ==
        pairLabelSets(objsWider, strig::supportTauTiltingPairs(a, objsWider)));
}
