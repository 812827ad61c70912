#include <optional>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "strig/strings.hpp"

using fixtures::letters;
using fixtures::word;
using strig::Algebra;
using strig::IllegalWord;
using strig::PointKind;
using strig::StringWord;

namespace {

StringWord closure(const Algebra& a, const StringWord& w) { return strig::hookClosure(a, w); }

StringWord canonClosure(const Algebra& a, const StringWord& w) {
  return strig::canonicalWord(strig::hookClosure(a, w));
}

}  // namespace

TEST_CASE("word validation clauses") {
  Algebra a = fixtures::r2ab();
  CHECK_THROWS_AS(word(a, {{"β", false}, {"β", true}}), IllegalWord);
  CHECK_THROWS_AS(word(a, {{"β", false}, {"α", false}}), IllegalWord);
  CHECK_THROWS_AS(word(a, {{"α", false}, {"α", false}}), IllegalWord);
  CHECK_THROWS_AS(word(a, {{"γ", false}, {"α", false}, {"β", false}}), IllegalWord);

  auto clauseOf = [&](std::vector<strig::Letter> ls) -> std::optional<IllegalWord::Clause> {
    try {
      strig::makeString(a, std::move(ls));
    } catch (const IllegalWord& e) {
      return e.clause();
    }
    return std::nullopt;
  };
  CHECK(clauseOf(letters(a, {{"β", false}, {"β", true}})) == IllegalWord::Clause::InverseAdjacency);
  CHECK(clauseOf(letters(a, {{"β", false}, {"α", false}})) == IllegalWord::Clause::JunctionMismatch);
  CHECK(clauseOf(letters(a, {{"α", false}, {"α", false}})) == IllegalWord::Clause::RelationSubword);

  CHECK(strig::validString(a, letters(a, {{"γ", false}, {"α", false}})));
  CHECK_FALSE(strig::validString(a, letters(a, {{"γ", false}, {"β", false}})));
  // Mixed-orientation walk through the loop.
  CHECK(strig::validString(a, letters(a, {{"γ", false}, {"α", true}, {"β", false}})));
}

TEST_CASE("walks, factors and intermediate points") {
  Algebra a = fixtures::r2ab();
  StringWord w = word(a, {{"β", true}, {"α", false}, {"β", false}});
  CHECK(strig::stringSource(a, w) == 1);
  CHECK(strig::stringTarget(a, w) == 1);

  auto factors = strig::factorDirected(a, w);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].inverse);
  CHECK(factors[0].direct.arrows == std::vector<int>{a.arrowIndex("β")});
  CHECK(factors[0].direct.source == 0);
  CHECK(factors[0].direct.target == 1);
  CHECK_FALSE(factors[1].inverse);
  CHECK(factors[1].direct.arrows ==
        std::vector<int>{a.arrowIndex("α"), a.arrowIndex("β")});

  auto pts = strig::intermediatePoints(a, w);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].vertex == 1);
  CHECK(pts[0].kind == PointKind::Lower);
  CHECK(pts[1].vertex == 0);
  CHECK(pts[1].kind == PointKind::Upper);
  CHECK(pts[2].vertex == 1);
  CHECK(pts[2].kind == PointKind::Lower);

  auto lazy = strig::intermediatePoints(a, strig::trivialString(a, 1));
  REQUIRE(lazy.size() == 1);
  CHECK(lazy[0].vertex == 1);
  CHECK(lazy[0].kind == PointKind::Upper);

  CHECK(strig::renderWord(a, w) == "1 ←β 0 →αβ 1");
  CHECK(strig::renderWord(a, strig::trivialString(a, 0)) == "0");
}

TEST_CASE("canonical orientation") {
  Algebra a = fixtures::r2ab();
  StringWord ga = word(a, {{"γ", false}, {"α", false}});
  CHECK(strig::canonicalWord(ga).letters == letters(a, {{"α", true}, {"γ", true}}));
  StringWord x = word(a, {{"β", true}, {"α", false}, {"β", false}});
  CHECK(strig::canonicalWord(x) == x);

  StringWord lazyInv = strig::trivialString(a, 0, true);
  CHECK(strig::canonicalWord(lazyInv) == strig::trivialString(a, 0));

  CHECK(strig::inverseWord(word(a, {{"β", true}, {"α", true}, {"β", false}})) == x);
}

TEST_CASE("hook completion on the loop-plus-cycle algebra") {
  Algebra a = fixtures::r2ab();
  auto triv = [&](int v) { return strig::trivialString(a, v); };

  CHECK(closure(a, word(a, {{"α", false}})) ==
        word(a, {{"β", true}, {"α", false}, {"β", false}}));
  CHECK(closure(a, word(a, {{"α", false}, {"β", false}})) == word(a, {{"β", true}}));
  CHECK(closure(a, word(a, {{"γ", false}, {"α", false}})) == triv(1));
  CHECK(closure(a, word(a, {{"β", true}, {"α", false}, {"β", false}})) == triv(0));
  CHECK(closure(a, triv(0)) == word(a, {{"α", true}, {"β", false}}));
  CHECK(closure(a, word(a, {{"β", false}})) == word(a, {{"α", true}}));
  CHECK(closure(a, word(a, {{"γ", false}})) == word(a, {{"γ", false}, {"α", false}}));
  CHECK(closure(a, triv(1)) == word(a, {{"γ", true}}));
  CHECK(closure(a, word(a, {{"β", true}, {"α", true}})) == word(a, {{"β", false}}));
  CHECK(closure(a, word(a, {{"α", true}, {"β", false}})) ==
        word(a, {{"β", true}, {"α", true}}));
  CHECK(closure(a, word(a, {{"β", true}, {"α", true}, {"β", false}})) == triv(0));

  // Completion is not idempotent: the lazy walk at 0 completes twice to
  // different words.
  CHECK(canonClosure(a, closure(a, triv(0))) ==
        strig::canonicalWord(word(a, {{"α", false}, {"β", false}})));
}

TEST_CASE("hook completion on the radical-square-zero cycle") {
  Algebra a = fixtures::w2b();
  CHECK(closure(a, strig::trivialString(a, 0)) == word(a, {{"β", true}}));
  CHECK(closure(a, strig::trivialString(a, 1)) == word(a, {{"γ", true}}));
  CHECK(closure(a, word(a, {{"β", false}})) == strig::trivialString(a, 0));
  CHECK(closure(a, word(a, {{"γ", false}})) == strig::trivialString(a, 1));
}

TEST_CASE("hook completion picks the name-least arrow for lazy walks") {
  Algebra a = fixtures::r3abd();
  CHECK(closure(a, strig::trivialString(a, 0)) ==
        word(a, {{"γ", true}, {"δ", false}}));
  CHECK(closure(a, word(a, {{"γ", true}, {"δ", false}})) ==
        word(a, {{"β", true}, {"γ", true}, {"δ", false}, {"η", false}}));

  Algebra k = Algebra::make(
      "R(3K)", {"0", "1", "2"},
      {{"γ", "1", "0"}, {"β", "0", "1"}, {"δ", "1", "2"}, {"η", "2", "1"},
       {"λ", "2", "0"}, {"κ", "0", "2"}},
      {{"β", "δ"}, {"δ", "λ"}, {"λ", "β"}, {"γ", "κ"}, {"κ", "η"}, {"η", "γ"},
       {"β", "γ"}, {"γ", "β"}, {"λ", "κ"}, {"κ", "λ"}, {"δ", "η"}, {"η", "δ"}});
  REQUIRE(k.validation().ok());
  CHECK(k.dimension() == 9);
  CHECK(closure(k, strig::trivialString(k, 0)) ==
        word(k, {{"β", true}, {"κ", false}}));
}

TEST_CASE("completion commutes with inversion up to orientation") {
  Algebra a = fixtures::r2ab();
  for (const StringWord& w : strig::enumerateStrings(a, 6)) {
    StringWord lhs = strig::canonicalWord(closure(a, strig::inverseWord(w)));
    StringWord rhs = strig::canonicalWord(strig::inverseWord(closure(a, w)));
    CAPTURE(strig::renderWord(a, w));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("g-vectors of completed strings") {
  Algebra a = fixtures::r2ab();
  CHECK(strig::gVector(a, word(a, {{"α", false}})) == std::vector<int>{1, -2});
  CHECK(strig::gVector(a, word(a, {{"α", true}, {"β", false}})) == std::vector<int>{1, -1});
  CHECK(strig::gVector(a, word(a, {{"β", false}})) == std::vector<int>{0, 0});
  CHECK(strig::gVector(a, word(a, {{"β", true}, {"α", false}, {"β", false}})) ==
        std::vector<int>{1, 0});

  Algebra b = fixtures::w2b();
  CHECK(strig::gVector(b, word(b, {{"β", false}})) == std::vector<int>{1, 0});
  CHECK(strig::gVector(b, strig::trivialString(b, 0)) == std::vector<int>{1, -1});

  Algebra c = fixtures::r3abd();
  CHECK(strig::gVector(c, word(c, {{"γ", true}, {"δ", false}})) ==
        std::vector<int>{-1, 0, 0});
}

TEST_CASE("support of completed strings") {
  Algebra a = fixtures::r2ab();
  CHECK(strig::supportVertices(a, word(a, {{"α", false}})) == std::vector<int>{0});
  CHECK(strig::supportVertices(a, word(a, {{"β", true}, {"α", false}, {"β", false}})) ==
        std::vector<int>{0, 1});
  CHECK(strig::supportVertices(a, strig::trivialString(a, 1)) == std::vector<int>{1});
  CHECK(strig::supportVertices(a, word(a, {{"γ", false}})) == std::vector<int>{0, 1});

  Algebra b = fixtures::w2b();
  CHECK(strig::supportVertices(b, strig::trivialString(b, 0)) == std::vector<int>{0});
  CHECK(strig::supportVertices(b, word(b, {{"β", false}})) == std::vector<int>{0, 1});

  Algebra c = fixtures::r3abd();
  CHECK(strig::supportVertices(c, word(c, {{"γ", true}, {"δ", false}})) ==
        std::vector<int>{0, 1, 2});
}

TEST_CASE("string enumeration") {
  Algebra a = fixtures::r2ab();
  CHECK(strig::enumerateStrings(a, 0).size() == 2);
  CHECK(strig::enumerateStrings(a, 1).size() == 5);

  auto all = strig::enumerateStrings(a, 8);
  CHECK(all.size() == strig::enumerateStrings(a, 16).size());
  for (size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i] == strig::canonicalWord(all[i]));
    if (!all[i].trivial()) CHECK(strig::validString(a, all[i].letters));
    if (i + 1 < all.size()) CHECK(strig::wordLess(all[i], all[i + 1]));
  }

  Algebra b = fixtures::w2b();
  CHECK(strig::enumerateStrings(b, 3).size() == 4);
}
