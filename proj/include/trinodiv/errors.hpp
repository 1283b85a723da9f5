#pragma once

#include <stdexcept>
#include <string>

namespace trinodiv {

/// Bad input: malformed text, violated precondition, reducible where an
/// irreducible is required, and so on.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size cap (degree, order, table size) would be exceeded.
class ResourceError : public std::length_error {
 public:
  explicit ResourceError(const std::string& what) : std::length_error(what) {}
};

}  // namespace trinodiv
