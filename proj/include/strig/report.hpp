#pragma once

#include <string>

#include "strig/enumeration.hpp"

namespace strig {

// One compatibility row of the result table: the objects the row's class
// tolerates on its right, with the mutual ones flagged, mirroring how the
// reference tables mark bidirectional compatibility in bold.
struct CompatRow {
  int object = -1;
  std::vector<int> compatible;
  std::vector<char> mutual;
};

// Rows for every string object of the universe, in universe order.
std::vector<CompatRow> compatibilityRows(const Algebra& a,
                                         const std::vector<RigidObject>& universe);

// Structured report with the stable schema {algebra, pairCount, rigid,
// pairs, hasse}; identical bytes for identical posets.
std::string reportJson(const Algebra& a, const HassePoset& h);

// Human-readable tables: rigid objects with g-vectors and compatibility
// rows, the pair list, and the exchange graph summary.
std::string reportText(const Algebra& a, const HassePoset& h);

// Graph-description text for the exchange quiver, one node per pair.
std::string renderDot(const Algebra& a, const HassePoset& h);

}  // namespace strig
