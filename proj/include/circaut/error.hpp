#pragma once

#include <stdexcept>
#include <string>

namespace circaut {

// Malformed connection sets, instance strings, permutations, mismatched degrees.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was called outside its mathematical preconditions
// (e.g. normalizing a permutation on a disconnected circulant).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A configured size or solution cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace circaut
