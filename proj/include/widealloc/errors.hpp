#pragma once

#include <stdexcept>
#include <string>

namespace widealloc {

// Malformed or out-of-contract input (bad shape, index out of range,
// unparsable text). CLI maps this to exit code 2.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but larger than a documented scale gate.
// CLI maps this to exit code 2 as well.
class ScaleLimitError : public std::runtime_error {
 public:
  explicit ScaleLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// A construction that requires wideness was asked for a non-wide diagram.
// Carries a human-readable witness description. CLI maps this to exit code 1.
class NotWideError : public std::runtime_error {
 public:
  explicit NotWideError(const std::string& what) : std::runtime_error(what) {}
};

// A proven-impossible state was reached (empty feasibility interval, failed
// exchange search, infeasible split). Indicates a bug, not bad input.
// CLI maps this to exit code 3.
class InternalInvariantError : public std::logic_error {
 public:
  explicit InternalInvariantError(const std::string& what)
      : std::logic_error(what) {}
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidInput(msg);
}

inline void invariant(bool cond, const std::string& msg) {
  if (!cond) throw InternalInvariantError(msg);
}

}  // namespace detail

}  // namespace widealloc
