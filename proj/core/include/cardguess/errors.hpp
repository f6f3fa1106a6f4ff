#pragma once

#include <stdexcept>
#include <string>

namespace cardguess {

// Arguments outside the mathematical domain of an operation (m2 > m1,
// rho outside (0,1), CDF indices outside the closed-form range, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Requests refused because they exceed a configured size or memory cap.
class ResourceLimitError : public std::length_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::length_error(what) {}
};

}  // namespace cardguess
