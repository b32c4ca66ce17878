#pragma once

#include <stdexcept>
#include <string>

namespace hsg {

// Base for every failure raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exact integer result would exceed 2^127 - 1.
class OverflowError : public Error {
public:
  using Error::Error;
};

// Input violates an operation's precondition (non-coprime pair, prime N, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace hsg
