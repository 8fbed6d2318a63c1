#pragma once

#include <stdexcept>
#include <string>

namespace leinster {

// Bad arguments: out-of-range ids, broken presentations, non-normal subgroups.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A construction would exceed the configured engine order cap.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace leinster
