#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steinitz {

// Binary operation on supernatural numbers over different prime universes.
struct UniverseMismatch : std::invalid_argument {
  UniverseMismatch() : std::invalid_argument("operands live in different prime universes") {}
};

// A documented precondition of an operation does not hold.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A counting or listing operation would have to materialise infinitely many objects.
struct InfiniteCountError : DomainError {
  InfiniteCountError(const std::string& what, std::string finite_part)
      : DomainError(what), finite_part_description(std::move(finite_part)) {}
  std::string finite_part_description;
};

// A configured size bound (ring size, lattice size, chain count) was exceeded.
struct ResourceLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed descriptor text; `offset` is the 0-based position of the offending character.
struct ParseError : std::invalid_argument {
  ParseError(const std::string& message, std::size_t at)
      : std::invalid_argument(message + " at offset " + std::to_string(at)), offset(at) {}
  std::size_t offset;
};

}  // namespace steinitz
