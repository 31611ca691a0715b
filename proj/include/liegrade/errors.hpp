#pragma once

#include <stdexcept>
#include <string>

namespace liegrade {

// Caller handed us something outside the domain (bad rank, shape mismatch...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed value disagreed with a reference value it is meant to reproduce.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical guarantee did not hold; indicates a bug upstream.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Precondition of an operation is not met by otherwise valid data
// (e.g. Cayley data requested for a pair that is not JM-regular).
class PreconditionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace liegrade
