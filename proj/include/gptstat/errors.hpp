#pragma once

#include <stdexcept>
#include <string>

namespace gptstat {

// Argument outside the operation's domain (N = 0, beta out of [0,1], ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Shape or basis mismatch between objects that must agree.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// A state that is not an element of the basis it was looked up in.
class NotFoundError : public std::runtime_error {
 public:
  explicit NotFoundError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameter combination that would produce matrix entries outside [0, 1].
class InfeasibleParamsError : public DomainError {
 public:
  explicit InfeasibleParamsError(const std::string& msg) : DomainError(msg) {}
};

// Requested statistics of an input state whose norm vanishes (q = -1 double
// occupancy): the input state does not exist, so no distribution is defined.
class UnnormalizableStateError : public std::runtime_error {
 public:
  explicit UnnormalizableStateError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Malformed JSON input or schema violation.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gptstat
