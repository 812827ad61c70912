#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "strig/presentation.hpp"
#include "strig/strings.hpp"

namespace fixtures {

// Two vertices, loop alpha at 0, a 2-cycle beta/gamma, dimension 7.
inline strig::Algebra r2ab() {
  return strig::Algebra::make(
      "R(2AB)", {"0", "1"},
      {{"α", "0", "0"}, {"β", "0", "1"}, {"γ", "1", "0"}},
      {{"β", "γ"}, {"γ", "β"}, {"α", "α"}, {"γ", "α", "β"}});
}

// Radical-square-zero 2-cycle, dimension 4.
inline strig::Algebra w2b() {
  return strig::Algebra::make("W(2B)", {"0", "1"},
                              {{"β", "0", "1"}, {"γ", "1", "0"}},
                              {{"β", "γ"}, {"γ", "β"}});
}

// Three vertices, two 2-cycles through vertex 0.
inline strig::Algebra r3abd() {
  return strig::Algebra::make(
      "R(3ABD)", {"0", "1", "2"},
      {{"γ", "0", "1"}, {"β", "1", "0"}, {"δ", "0", "2"}, {"η", "2", "0"}},
      {{"β", "γ"},
       {"η", "δ"},
       {"β", "δ", "η", "γ"},
       {"η", "γ", "β", "δ"},
       {"γ", "β", "δ", "η"},
       {"δ", "η", "γ", "β"}});
}

// Same quiver as r3abd with radical-square-zero cycles, dimension 9.
inline strig::Algebra r3c() {
  return strig::Algebra::make(
      "R(3C)", {"0", "1", "2"},
      {{"γ", "0", "1"}, {"β", "1", "0"}, {"δ", "0", "2"}, {"η", "2", "0"}},
      {{"β", "γ"}, {"γ", "β"}, {"η", "δ"}, {"δ", "η"}});
}

inline strig::StringWord word(
    const strig::Algebra& a,
    std::initializer_list<std::pair<const char*, bool>> ls) {
  std::vector<strig::Letter> v;
  for (const auto& [name, inv] : ls) v.push_back({a.arrowIndex(name), inv});
  return strig::makeString(a, std::move(v));
}

inline std::vector<strig::Letter> letters(
    const strig::Algebra& a,
    std::initializer_list<std::pair<const char*, bool>> ls) {
  std::vector<strig::Letter> v;
  for (const auto& [name, inv] : ls) v.push_back({a.arrowIndex(name), inv});
  return v;
}

}  // namespace fixtures
