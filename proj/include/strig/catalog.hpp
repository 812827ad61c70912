#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strig/enumeration.hpp"

namespace strig {

// Published reference results for one built-in algebra, transcribed from
// the source figures: per rigid string its display form, completed form,
// g-vector and compatibility row, plus the exchange graph.
struct GoldenOther {
  std::string name;
  bool mutual = false;
};

struct GoldenRigid {
  std::string name;
  std::string display;
  std::string hook;
  std::vector<int> g;
  std::vector<GoldenOther> others;
};

struct GoldenNode {
  std::string id;
  std::vector<std::string> members;
};

struct GoldenData {
  std::string name;
  int pairCount = 0;
  std::vector<GoldenRigid> rigid;
  std::vector<GoldenNode> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

// The ten built-in algebras, in catalog order.
const std::vector<std::string>& catalogNames();

// Throws UnknownCatalogName for anything not in catalogNames().
Algebra catalogAlgebra(const std::string& name);
GoldenData goldenResults(const std::string& name);

// Recomputes everything for one built-in algebra and diffs the outcome
// against its golden data: pair count, g-vector sets, display and completed
// words, compatibility rows with mutuality flags, and the exchange graph up
// to relabeling. Returns one line per disagreement; empty means exact match.
std::vector<std::string> compareWithGolden(const std::string& name);

}  // namespace strig
