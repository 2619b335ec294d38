#pragma once

#include <stdexcept>
#include <string>

namespace rfrp {

// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured bound (index, generator count, cover size) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagreed.
class OracleMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace rfrp
