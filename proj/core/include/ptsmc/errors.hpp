#pragma once

#include <stdexcept>
#include <string>

namespace ptsmc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside the domain of the operation (bad order, eta <= n, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// The prescribed-phase sliding variable was requested at t >= t_f - delta.
class WrongRegimeError : public Error {
public:
  using Error::Error;
};

/// Control effectiveness g(x) or the decoupling matrix is (numerically) singular.
class SingularPlantError : public Error {
public:
  using Error::Error;
};

/// |q4| fell below the guard, so T(q) cannot be inverted reliably.
class AttitudeSingularityError : public Error {
public:
  using Error::Error;
};

/// The integrator produced a non-finite value.
class NumericalBlowupError : public Error {
public:
  NumericalBlowupError(const std::string& what, double time)
      : Error(what), time_(time) {}

  [[nodiscard]] double time() const noexcept { return time_; }

private:
  double time_;
};

}  // namespace ptsmc
