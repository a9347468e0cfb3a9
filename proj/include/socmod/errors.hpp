#pragma once

#include <stdexcept>
#include <string>

namespace socmod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs that do not fit together: mixed rings, rank or length mismatches.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition is violated (e.g. infinite colength).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured bound (truncation cap, resolution length) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace socmod
