#pragma once

#include <stdexcept>
#include <string>

namespace tropfiber {

/** Malformed input: bad JSON, unparsable rationals, dimension mismatches. */
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/** Well-formed input that violates a mathematical precondition or invariant. */
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tropfiber
