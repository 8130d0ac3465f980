#pragma once

#include <stdexcept>
#include <string>

namespace toggle {

// Malformed input: bad file syntax, out-of-range parameters, illegal sizes.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A move that the Toggle rule does not allow.
class RuleViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Search or enumeration exceeded its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency audit failed while building a derived object.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace toggle
