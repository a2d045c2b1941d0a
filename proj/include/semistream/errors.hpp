#pragma once

#include <stdexcept>
#include <string>

namespace semistream {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid argument (bad vertex counts, bad parameters, invalid partitions, ...).
struct ArgumentError : Error {
  using Error::Error;
};

/// Malformed input document. `line` is 1-based.
struct ParseError : Error {
  ParseError(const std::string& what, int line_number)
      : Error(what + ", line " + std::to_string(line_number)), line(line_number) {}
  int line = 0;
};

/// An operation required every active A vertex to have at least one neighbor.
struct IsolatedVertexError : Error {
  explicit IsolatedVertexError(int a)
      : Error("A vertex " + std::to_string(a) + " has no incident edges"), vertex(a) {}
  int vertex = 0;
};

/// A degree-minimizing path failed validation against the given semi-matching.
struct InvalidPathError : Error {
  using Error::Error;
};

/// An exhaustive mode was asked to run beyond its size guard.
struct GuardExceededError : Error {
  using Error::Error;
};

/// A stream violated the ordering contract required by the consumer.
struct StreamOrderError : Error {
  using Error::Error;
};

/// No parallel instance produced a complete semi-matching. Raised defensively;
/// cannot happen when the preconditions of the wrapper hold.
struct NoCompleteCandidateError : Error {
  using Error::Error;
};

/// Filesystem-level failure; message names the path.
struct IoError : Error {
  using Error::Error;
};

}  // namespace semistream
