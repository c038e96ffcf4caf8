#pragma once

#include <stdexcept>

namespace quatcat {

/// Base class of every error the toolkit throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroQuaternion : Error {
  using Error::Error;
};

struct NegativeRealAxis : Error {
  using Error::Error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

struct NotUnit : Error {
  using Error::Error;
};

struct OutOfBall : Error {
  using Error::Error;
};

struct BranchViolation : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

}  // namespace quatcat
