#pragma once

#include <stdexcept>
#include <string>

namespace sroman {

// Malformed input: bad vertex ids, wrong word length, unsupported family.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size limit (vertex budget, oracle enumeration bound) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The solver ran past its deadline.
class TimeoutError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

// A caller violated an operation's precondition (non-RDF input, non-optimal function, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An invariant that the mathematics guarantees did not hold. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sroman
