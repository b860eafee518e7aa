#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treedens {

// Base class of every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed tree text; offset is the byte position of the offending token.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

// A vertex with one child, or with more children than the degree bound
// allows; offset locates the vertex in the parsed text.
struct ArityError : Error {
  ArityError(const std::string& what, std::size_t offset)
      : Error(what + " (vertex at offset " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

// Violated operation precondition: infeasible sizes, out-of-range leaf
// indices, unknown suite names and the like.
struct DomainError : Error {
  using Error::Error;
};

// The operation would exceed a configured work limit.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace treedens
