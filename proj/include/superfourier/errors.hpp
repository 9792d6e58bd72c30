#pragma once

#include <stdexcept>
#include <string>

namespace superfourier {

/// Thrown when a scalar or matrix has no inverse modulo n.
class not_invertible_error : public std::domain_error {
 public:
  explicit not_invertible_error(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a closure, enumeration, or tensor would exceed its size guard.
class cap_exceeded_error : public std::length_error {
 public:
  explicit cap_exceeded_error(const std::string& what) : std::length_error(what) {}
};

/// Thrown by catalog builders and parsers on invalid parameters.
class bad_parameter_error : public std::invalid_argument {
 public:
  explicit bad_parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a group fails the J-symmetry conditions it was claimed to satisfy.
class not_j_symmetric_error : public std::domain_error {
 public:
  explicit not_j_symmetric_error(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a matrix that must be unitary is not; indicates an upstream bug.
class unitarity_error : public std::logic_error {
 public:
  explicit unitarity_error(const std::string& what) : std::logic_error(what) {}
};

/// Thrown when a structural fact guaranteed by the theory fails to hold.
class internal_inconsistency_error : public std::logic_error {
 public:
  explicit internal_inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

/// Thrown on an intermediate value that does not fit in 128-bit integers.
class overflow_error : public std::overflow_error {
 public:
  explicit overflow_error(const std::string& what) : std::overflow_error(what) {}
};

/// Thrown when a support/uncertainty query is made on the zero function.
class zero_function_error : public std::invalid_argument {
 public:
  explicit zero_function_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace superfourier
