#pragma once

#include <stdexcept>
#include <string>

namespace lindep {

// Malformed field presentation: non-prime characteristic, bad modulus, or
// a prime power that cannot be factored as p^k.
class InvalidFieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested object exceeds a configured size bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class DivisionByZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Distances are undefined between vertices of different components.
class DisconnectedGraphError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace lindep
