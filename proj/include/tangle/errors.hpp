#pragma once

#include <stdexcept>
#include <string>

namespace tangle {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSubsetError : public Error {
 public:
  using Error::Error;
};

class InvalidStateError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of the operation (p outside
// [0,1], concurrence outside [0,1], wrong qubit count, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Unknown state / measure name, unsupported exponent for a roof scenario.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Parametrized family evaluated where its closed form diverges.
class SingularFamilyError : public Error {
 public:
  using Error::Error;
};

// GHZ/W mixture whose GHZ component has a*b == 0.
class DegenerateFamilyError : public Error {
 public:
  using Error::Error;
};

class BracketError : public Error {
 public:
  using Error::Error;
};

// A measure threw while a characteristic curve was being sampled.
class CurveEvaluationError : public Error {
 public:
  CurveEvaluationError(double p, double phi, const std::string& what)
      : Error("measure failed at p=" + std::to_string(p) + ", phi=" + std::to_string(phi) +
              ": " + what),
        p_(p),
        phi_(phi) {}
  double p() const { return p_; }
  double phi() const { return phi_; }

 private:
  double p_;
  double phi_;
};

}  // namespace tangle
