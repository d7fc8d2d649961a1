#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gotzmann {

/// Base of every library error. `kind()` is the stable name the CLI reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual std::string_view kind() const noexcept = 0;
};

#define GOTZMANN_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                              \
   public:                                                                 \
    using Error::Error;                                                    \
    std::string_view kind() const noexcept override { return #Name; }      \
  }

// Polynomial does not take integer values at every integer.
GOTZMANN_DEFINE_ERROR(NotIntegerValued);
// Polynomial has no expansion sum binom(d + a_i - (i-1), a_i) with a_1 >= ... >= a_s >= 0.
GOTZMANN_DEFINE_ERROR(NoGotzmannRepresentation);
GOTZMANN_DEFINE_ERROR(WrongShape);
GOTZMANN_DEFINE_ERROR(NonIntegralChern);
GOTZMANN_DEFINE_ERROR(NotStronglyStable);
GOTZMANN_DEFINE_ERROR(TooManyGenerators);
GOTZMANN_DEFINE_ERROR(PreconditionViolated);
GOTZMANN_DEFINE_ERROR(ParseError);
// An identity that must hold by theorem failed. Always a bug or a counterexample.
GOTZMANN_DEFINE_ERROR(InconsistencyError);

#undef GOTZMANN_DEFINE_ERROR

}  // namespace gotzmann
