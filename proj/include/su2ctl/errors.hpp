#pragma once

#include <stdexcept>
#include <string>

namespace su2ctl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// (t, omega) of a law cannot produce the target's off-diagonal magnitude.
class MagnitudeMismatch : public Error {
 public:
  using Error::Error;
};

// Point on (or numerically at) the unit circle where the omega bound diverges.
class BoundaryPoint : public Error {
 public:
  using Error::Error;
};

// Closed-form boundary minimum time requested outside gamma <= 1.
class OutOfValidity : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class NormViolation : public Error {
 public:
  using Error::Error;
};

// Violated operation precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A solver could not meet its tolerance.
class SolverFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace su2ctl
