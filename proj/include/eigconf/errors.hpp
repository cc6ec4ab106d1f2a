#pragma once

#include <stdexcept>
#include <string>

namespace eigconf {

/// Precondition violated by the caller (zero polynomial passed to gcd, singular
/// matrix, exponent out of range, dimension mismatch, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed textual input: rational literals, matrix JSON, sign-matrix text.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eigconf
