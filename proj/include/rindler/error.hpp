// error.hpp
// Exception hierarchy shared by every module of the library.

#pragma once

#include <stdexcept>
#include <string>

namespace rindler {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A Minkowski event sits on the light cone |t| = |x|, where no sector exists.
class HorizonError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A Rindler event whose radius sign disagrees with its sector tag.
class SectorMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Floating point range exhausted: underflow of sinh, q indistinguishable from 1.
class NumericalRangeError : public Error {
 public:
  using Error::Error;
};

// A numerical contract on an operator was violated (Hermiticity, positivity).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamilyError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rindler
