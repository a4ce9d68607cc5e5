#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgspec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge list violates uniformity, range, or simplicity.
class InvalidHypergraph : public Error {
 public:
  using Error::Error;
};

class NotConnectedError : public Error {
 public:
  NotConnectedError() : Error("hypergraph is not connected") {}
  explicit NotConnectedError(const std::string& what) : Error(what) {}
};
using DisconnectedError = NotConnectedError;

class NotRegularError : public Error {
 public:
  NotRegularError() : Error("hypergraph is not regular") {}
};

class NoConvergence : public Error {
 public:
  NoConvergence(long iterations, double residual)
      : Error("no convergence after " + std::to_string(iterations) +
              " iterations (residual " + std::to_string(residual) + ")"),
        iterations_(iterations),
        residual_(residual) {}

  long iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  long iterations_;
  double residual_;
};

class DiameterTooSmall : public Error {
 public:
  DiameterTooSmall(long needed, long actual)
      : Error("diameter too small: need " + std::to_string(needed) + ", have " +
              std::to_string(actual)),
        needed_(needed),
        actual_(actual) {}

  long needed() const { return needed_; }
  long actual() const { return actual_; }

 private:
  long needed_;
  long actual_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InfeasibleParams : public Error {
 public:
  using Error::Error;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

class SizeOverflow : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace hgspec
