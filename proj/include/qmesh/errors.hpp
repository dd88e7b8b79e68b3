#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmesh {

// Caller violated a documented precondition (bad index, dimension mismatch,
// parameter out of range).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation needed a nonzero vector (branch residual, correction target)
// and got one whose norm vanishes.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical self-check failed inside the library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnsupportedVariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// P3 = I - (P1 + P2) is not positive semidefinite at the requested rho.
class PositivityError : public std::runtime_error {
 public:
  PositivityError(const std::string& what, double minimal_rho)
      : std::runtime_error(what), minimal_rho_(minimal_rho) {}
  double minimal_rho() const noexcept { return minimal_rho_; }

 private:
  double minimal_rho_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class RouteNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SwapFailure : public std::runtime_error {
 public:
  SwapFailure(const std::string& what, std::size_t branch)
      : std::runtime_error(what), branch_(branch) {}
  std::size_t branch() const noexcept { return branch_; }

 private:
  std::size_t branch_;
};

}  // namespace qmesh
