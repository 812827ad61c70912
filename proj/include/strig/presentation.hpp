#pragma once

#include <span>
#include <string>
#include <vector>

#include "strig/errors.hpp"

namespace strig {

struct Arrow {
  std::string name;
  int source = -1;
  int target = -1;
};

// Arrow description by vertex names, used before the algebra exists.
struct ArrowDef {
  std::string name;
  std::string source;
  std::string target;
};

// A nonzero path of the algebra: a composable arrow sequence avoiding every
// relation. Arrows compose left to right, so arrows[i] ends where
// arrows[i+1] starts. length 0 encodes the lazy path at a vertex.
struct Path {
  int source = -1;
  int target = -1;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool operator==(const Path&) const = default;
};

struct ValidationIssue {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// A finite-dimensional monomial quiver algebra kQ/I together with the
// precomputed basis of nonzero paths. Construction performs structural
// checks (throwing AlgebraError); the string-algebra axioms are collected
// into a ValidationReport instead so a checker can show all violations.
class Algebra {
public:
  // Wire format: {"name": str?, "vertices": [str], "arrows":
  // [{"name","source","target"}], "relations": [[arrow names]]}.
  static Algebra fromJson(const std::string& text);
  static Algebra make(std::string name, std::vector<std::string> vertexNames,
                      std::vector<ArrowDef> arrowDefs,
                      std::vector<std::vector<std::string>> relationDefs);

  const std::string& name() const { return name_; }
  int vertexCount() const { return static_cast<int>(vertexNames_.size()); }
  const std::string& vertexName(int v) const { return vertexNames_.at(v); }
  int vertexIndex(const std::string& name) const;

  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int i) const { return arrows_.at(i); }
  int arrowIndex(const std::string& name) const;
  const std::vector<int>& arrowsOut(int v) const { return arrowsOut_.at(v); }
  const std::vector<int>& arrowsIn(int v) const { return arrowsIn_.at(v); }

  const std::vector<std::vector<int>>& relations() const { return relations_; }
  int maxRelationLength() const { return maxRelLen_; }

  bool composable(std::span<const int> arrowSeq) const;
  // True when some relation occurs as a contiguous subword.
  bool inIdeal(std::span<const int> arrowSeq) const;
  bool pathNonzero(std::span<const int> arrowSeq) const;

  const ValidationReport& validation() const { return report_; }
  void requireValid() const;

  // Everything below requires a valid string algebra.
  const std::vector<Path>& pathBasis() const;
  const std::vector<Path>& paths(int from, int to) const;
  int dimension() const;

private:
  Algebra() = default;
  void validateAndBuild();

  std::string name_;
  std::vector<std::string> vertexNames_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> arrowsOut_;
  std::vector<std::vector<int>> arrowsIn_;
  std::vector<std::vector<int>> relations_;
  int maxRelLen_ = 0;

  ValidationReport report_;
  std::vector<Path> pathBasis_;
  std::vector<std::vector<std::vector<Path>>> pathTable_;
  int dimension_ = 0;
};

// fromJson followed by requireValid.
Algebra parseAlgebra(const std::string& text);

// Basis of Hom(P_to, P_from) under P_v = vA: the nonzero paths from `from`
// to `to`, acting by left multiplication.
inline const std::vector<Path>& homBasis(const Algebra& a, int from, int to) {
  return a.paths(from, to);
}

}  // namespace strig
