#pragma once

#include <stdexcept>
#include <string>

namespace circcop {

/// Thrown when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a copula of discrete marginals is evaluated off Ran F x Ran G.
class RangeRestrictionError : public DomainError {
 public:
  explicit RangeRestrictionError(const std::string& what) : DomainError(what) {}
};

}  // namespace circcop
