#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entail {

/// Base class for all domain errors thrown by this library.
struct GameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A position was constructed with an empty Left or Right option set.
struct EmptySideError : GameError {
  using GameError::GameError;
};

/// inf + oinf occurred in a disjunctive sum.
struct UndefinedSumError : GameError {
  using GameError::GameError;
};

/// An operation that requires an affine impartial form was given
/// something else.
struct NotImpartialError : GameError {
  using GameError::GameError;
};

/// An operation that requires a quiet form was given a check or a
/// terminal.
struct NotQuietError : GameError {
  using GameError::GameError;
};

/// A comparison asked for a Conway game but the argument has checks
/// among its followers.
struct NotConwayError : GameError {
  using GameError::GameError;
};

/// The protected-nimber tail probe did not stabilise at the ceiling;
/// the computed set cannot be trusted.
struct UnstableTailError : GameError {
  using GameError::GameError;
};

/// Input too large for an intentionally exponential operation.
struct TooLargeError : GameError {
  using GameError::GameError;
};

/// Text parsing failure. `position` is a byte offset into the input.
struct ParseError : GameError {
  ParseError(const std::string& what, std::size_t pos)
      : GameError(what + " at offset " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Base class for board-model errors.
struct BoardError : GameError {
  using GameError::GameError;
};

struct BoardSyntaxError : BoardError {
  BoardSyntaxError(const std::string& what, std::size_t line_no)
      : BoardError(what + " on line " + std::to_string(line_no)), line(line_no) {}
  std::size_t line;
};

struct OutOfBoundsError : BoardError {
  using BoardError::BoardError;
};

struct DuplicateEdgeError : BoardError {
  using BoardError::BoardError;
};

struct IllegalMoveError : BoardError {
  using BoardError::BoardError;
};

}  // namespace entail
