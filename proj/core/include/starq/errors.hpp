#pragma once

#include <stdexcept>
#include <string>

namespace starq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gaussian integral requested for an exponent whose real part is not
// positive definite.
class NonIntegrable : public Error {
 public:
  using Error::Error;
};

// Heat operator applied where the transformed Gaussian width 1 + 4cB
// vanishes.
class SingularWidth : public Error {
 public:
  using Error::Error;
};

// Closed-form evolution evaluated at a time where a denominator vanishes.
class SingularTime : public Error {
 public:
  using Error::Error;
};

// An operation would push a polynomial past the supported total degree.
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class ZeroNorm : public Error {
 public:
  using Error::Error;
};

// Star product of two non-polynomial symbols: the series does not terminate.
class UnsupportedOperands : public Error {
 public:
  using Error::Error;
};

// Fock-matrix product requested for symbols with non-negligible weight
// beyond the truncation level.
class TruncationTail : public Error {
 public:
  using Error::Error;
};

}  // namespace starq
