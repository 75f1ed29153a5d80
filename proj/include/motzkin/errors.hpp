#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motzkin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- word parsing ----------------------------------------------------------

struct EmptyInput : Error {
  EmptyInput() : Error("empty input") {}
};

struct IllegalCharacter : Error {
  std::size_t position;  // 1-based offset of the offending character
  explicit IllegalCharacter(std::size_t pos)
      : Error("illegal character at position " + std::to_string(pos)),
        position(pos) {}
};

struct UnbalancedWord : Error {
  std::size_t position;  // 1-based end of the first offending prefix
  explicit UnbalancedWord(std::size_t pos)
      : Error("unbalanced word at position " + std::to_string(pos)),
        position(pos) {}
};

// --- block arithmetic ------------------------------------------------------

struct NotASimpleBlock : Error {
  NotASimpleBlock() : Error("block is nested inside another pair") {}
};

struct PositionConflict : Error {
  PositionConflict() : Error("bracket positions collide") {}
};

struct InvalidResult : Error {
  InvalidResult() : Error("superposition violates the prefix condition") {}
};

// --- ranking ---------------------------------------------------------------

struct NotInRow : Error {
  NotInRow() : Error("word has no row index; only \"0\" may be all zeros") {}
};

// --- prime pairs -----------------------------------------------------------

struct InvalidCoordinates : Error {
  InvalidCoordinates() : Error("pair coordinates must satisfy n > r >= 1") {}
};

// --- series ----------------------------------------------------------------

struct OrderMismatch : Error {
  OrderMismatch() : Error("series orders differ") {}
};

struct DivisionByZeroConstantTerm : Error {
  DivisionByZeroConstantTerm() : Error("divisor has zero constant term") {}
};

struct BadConstantTerm : Error {
  BadConstantTerm() : Error("sqrt requires constant term 1") {}
};

// --- oracle ----------------------------------------------------------------

struct LengthTooLarge : Error {
  explicit LengthTooLarge(int n, int cap)
      : Error("length " + std::to_string(n) + " exceeds the oracle cap " +
              std::to_string(cap)) {}
};

}  // namespace motzkin
