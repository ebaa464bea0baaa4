#pragma once

#include <stdexcept>
#include <string>

namespace jfrac {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergent : public Error {
 public:
  using Error::Error;
};

class PoleInDenominator : public Error {
 public:
  using Error::Error;
};

class GammaPole : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class UnsupportedTilde : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

class UnknownTheorem : public Error {
 public:
  using Error::Error;
};

// D_n = 0: the moment functional has no orthogonal polynomial of degree index().
class NonRegular : public Error {
 public:
  explicit NonRegular(int n)
      : Error("non-regular moment functional at n = " + std::to_string(n)), n_(n) {}
  int index() const { return n_; }

 private:
  int n_;
};

}  // namespace jfrac
