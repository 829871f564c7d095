#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cap {

using Vertex = std::uint32_t;
using ColorId = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Sorted, duplicate-free list of colors carried by one vertex or edge.
class ColorSet {
 public:
  ColorSet() = default;
  ColorSet(std::initializer_list<ColorId> colors) : colors_(colors) { normalize(); }
  explicit ColorSet(std::vector<ColorId> colors) : colors_(std::move(colors)) { normalize(); }

  bool contains(ColorId c) const { return std::binary_search(colors_.begin(), colors_.end(), c); }
  bool empty() const { return colors_.empty(); }
  std::size_t size() const { return colors_.size(); }
  ColorId max() const { return colors_.back(); }

  auto begin() const { return colors_.begin(); }
  auto end() const { return colors_.end(); }
  const std::vector<ColorId>& values() const { return colors_; }

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  void normalize() {
    std::sort(colors_.begin(), colors_.end());
    colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
  }

  std::vector<ColorId> colors_;
};

enum class ColoringTarget { edges, vertices };

// How a vertex carrying several colors reacts to an attack on one of them.
//   vulnerable: removed when any listed color is attacked.
//   resilient:  a vertex with two or more colors is never removed.
enum class MultiColorMode { vulnerable, resilient };

enum class Variant { edge, strong, weak, weak_lists };

inline std::string_view to_string(ColoringTarget t) {
  return t == ColoringTarget::edges ? "edges" : "vertices";
}

inline std::string_view to_string(MultiColorMode m) {
  return m == MultiColorMode::vulnerable ? "vulnerable" : "resilient";
}

inline std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::edge: return "edge";
    case Variant::strong: return "strong";
    case Variant::weak: return "weak";
    case Variant::weak_lists: return "weak-lists";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that violates a documented precondition or graph invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An exact exponential search ran out of its node allowance. No partial
// result is ever returned alongside this error.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t limit)
      : Error("search budget of " + std::to_string(limit) + " nodes exceeded"), limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

struct ExecutionOptions {
  unsigned threads = 1;
};

}  // namespace cap
