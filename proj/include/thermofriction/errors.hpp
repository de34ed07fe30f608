#pragma once

#include <stdexcept>
#include <string>

namespace thermofriction {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConversionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed config text; line() is 1-based, 0 when not tied to a line.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

  /// Same error with a context prefix (typically the file path).
  static FormatError annotated(const std::string& context, const FormatError& e) {
    return FormatError(context + ": " + e.what(), e.line(), Raw{});
  }

 private:
  struct Raw {};
  FormatError(const std::string& what, int line, Raw) : Error(what), line_(line) {}
  int line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class PoleProximityError : public Error {
 public:
  PoleProximityError(double omega, double pole)
      : Error("frequency " + std::to_string(omega) + " a.u. lies on the resonance at " +
              std::to_string(pole) + " a.u."),
        omega_(omega),
        pole_(pole) {}
  double omega() const noexcept { return omega_; }
  double pole() const noexcept { return pole_; }

 private:
  double omega_;
  double pole_;
};

class ExtrapolationError : public Error {
 public:
  ExtrapolationError(const std::string& what, double temperature)
      : Error(what), temperature_(temperature) {}
  double temperature() const noexcept { return temperature_; }

 private:
  double temperature_;
};

// Adaptive quadrature ran out of panels; carries the best available answer.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error)
      : Error(what), estimate_(estimate), error_(error) {}
  double estimate() const noexcept { return estimate_; }
  double achieved_error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

// The thermal window reaches an atomic resonance and no broadening was requested.
class ValidityError : public Error {
 public:
  ValidityError(const std::string& what, double temperature)
      : Error(what), temperature_(temperature) {}
  double temperature() const noexcept { return temperature_; }

 private:
  double temperature_;
};

}  // namespace thermofriction
