#pragma once

#include <stdexcept>
#include <string>

namespace jaclab {

/// Malformed polynomial text. `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Input outside the domain of an analysis (constant polynomial, J == 0, non-isolated critical locus, ...).
class DegenerateInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured bound (tower depth, truncation order, shear search) was exhausted.
class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not.
class CorrectnessAlarm : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace jaclab
