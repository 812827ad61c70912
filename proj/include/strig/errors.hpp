#pragma once

#include <stdexcept>
#include <string>

namespace strig {

// Malformed or rejected algebra input. kind is a stable machine-readable
// code, detail a human hint.
class AlgebraError : public std::runtime_error {
public:
  AlgebraError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

class IllegalWord : public std::runtime_error {
public:
  enum class Clause { InverseAdjacency, JunctionMismatch, RelationSubword };

  static const char* clauseName(Clause c) {
    switch (c) {
      case Clause::InverseAdjacency: return "InverseAdjacency";
      case Clause::JunctionMismatch: return "JunctionMismatch";
      case Clause::RelationSubword: return "RelationSubword";
    }
    return "?";
  }

  IllegalWord(Clause c, const std::string& detail)
      : std::runtime_error(std::string(clauseName(c)) + ": " + detail), clause_(c) {}
  Clause clause() const { return clause_; }

private:
  Clause clause_;
};

class CompletionCountMismatch : public std::runtime_error {
public:
  explicit CompletionCountMismatch(int count)
      : std::runtime_error("CompletionCountMismatch: found " + std::to_string(count) +
                           " completions, expected 2"),
        count_(count) {}
  int count() const { return count_; }

private:
  int count_;
};

class LengthCapExceeded : public std::runtime_error {
public:
  explicit LengthCapExceeded(int cap)
      : std::runtime_error("LengthCapExceeded: exchange quiver did not stabilize below "
                           "string length " + std::to_string(cap)),
        cap_(cap) {}
  int cap() const { return cap_; }

private:
  int cap_;
};

class UnknownCatalogName : public std::runtime_error {
public:
  explicit UnknownCatalogName(const std::string& name)
      : std::runtime_error("UnknownCatalogName: " + name) {}
};

}  // namespace strig
