#pragma once

#include <stdexcept>
#include <string>

namespace flood {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad ids, non-edges, disconnected graph...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because the instance exceeds the configured budget.
class OracleLimitExceeded : public Error {
 public:
  using Error::Error;
};

// The conquest order on a colour class is not total (input is not AT-free, or
// the source falls outside the case the analysis covers).
class StructureViolation : public Error {
 public:
  using Error::Error;
};

// A generator spec that cannot be satisfied, e.g. a proper colouring with too
// few colours.
class InfeasibleSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace flood
