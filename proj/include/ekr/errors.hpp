#pragma once

#include <stdexcept>
#include <string>

namespace ekr {

/// Caller supplied something outside an operation's domain: malformed graph
/// spec, out-of-range vertex, violated precondition.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Graph would exceed the 64-vertex bitset capacity.
class CapacityError : public std::length_error {
public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// An identity that must hold for valid input did not hold. Always a bug.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ekr
