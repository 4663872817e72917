#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plexus {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StageMismatch : Error {
  StageMismatch(int a, int b)
      : Error("stage mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error("serial bit budget exceeded: " + what) {}
};

struct RankTooLarge : Error {
  explicit RankTooLarge(int r) : Error("rank/stage too large to materialize: " + std::to_string(r)) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error("too large: " + what) {}
};

struct NonCompactPlane : Error {
  NonCompactPlane() : Error("spin generator does not square to -identity (non-compact plane)") {}
};

struct NotAComplexStructure : Error {
  NotAComplexStructure() : Error("operator does not square to -identity") {}
};

struct EmptySweep : Error {
  EmptySweep() : Error("contraction sweep needs at least one cell count") {}
};

struct ParseError : Error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : Error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
};

}  // namespace plexus
