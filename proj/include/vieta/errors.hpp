#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vieta {

// A caller violated an operation's precondition (not developed, not a vertex,
// degenerate polytope, ...).
class PreconditionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Mixed ambient dimensions or wrong matrix shapes.
class DimensionError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

// Two computations that must agree did not. Always a bug.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// The floating point oracle could not certify its roots.
class IllConditioned : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

} // namespace vieta
