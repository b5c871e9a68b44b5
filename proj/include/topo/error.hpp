#pragma once

// Error types for the topo library. Every failure mode named by the public
// contracts gets its own type, so callers (notably the CLI) can map errors to
// exit codes and messages without string matching.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// new_space: point x is missing from its own minimal neighborhood.
struct ReflexivityViolation : Error {
  int point;
  explicit ReflexivityViolation(int x)
      : Error("ReflexivityViolation(" + std::to_string(x) + "): point " +
              std::to_string(x) + " is not a member of its own minimal neighborhood"),
        point(x) {}
};

// new_space: y lies in min_nbhd[x] but min_nbhd[y] is not a subset of it.
struct TransitivityViolation : Error {
  int x;
  int y;
  TransitivityViolation(int x_, int y_)
      : Error("TransitivityViolation(" + std::to_string(x_) + "," + std::to_string(y_) +
              "): point " + std::to_string(y_) + " lies in min_nbhd[" + std::to_string(x_) +
              "] but min_nbhd[" + std::to_string(y_) + "] is not contained in it"),
        x(x_),
        y(y_) {}
};

struct UniverseMismatch : Error {
  using Error::Error;
};

struct CapacityExceeded : Error {
  using Error::Error;
};

// open_sets: the family grew past the configured cap.
struct TooManyOpens : Error {
  std::size_t cap;
  explicit TooManyOpens(std::size_t cap_)
      : Error("TooManyOpens: open-set family exceeds cap of " + std::to_string(cap_)),
        cap(cap_) {}
};

struct BadRange : Error {
  using Error::Error;
};

// Parsing: position is a 1-based line number for .topo files and a 0-based
// column for predicate expressions.
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(std::size_t pos, const std::string& what_)
      : Error("SyntaxError at " + std::to_string(pos) + ": " + what_), position(pos) {}
};

// Parsing produced a structurally valid table that fails space validation.
struct ValidationError : Error {
  using Error::Error;
};

struct UnknownPredicate : Error {
  std::string name;
  explicit UnknownPredicate(std::string name_)
      : Error("UnknownPredicate: \"" + name_ + "\" is not a registered predicate"),
        name(std::move(name_)) {}
};

struct OracleCapExceeded : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

// A step the mechanized argument guarantees failed on a concrete instance.
// Either an implementation bug or a genuine refutation; never swallowed.
struct InternalProofStepFailed : Error {
  using Error::Error;
};

}  // namespace topo
