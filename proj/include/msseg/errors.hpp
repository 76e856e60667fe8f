#pragma once

#include <stdexcept>
#include <string>

namespace msseg {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent user input (bad scene spec, bad config, bad flags).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Input that is structurally valid but unusable (constant image, empty mask).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// File I/O problems; message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

// Non-finite values detected inside the iterative solver.
class NumericalDivergenceError : public Error {
 public:
  NumericalDivergenceError(const std::string& msg, int inner_iteration, int bregman_step = -1)
      : Error(msg), inner_iteration(inner_iteration), bregman_step(bregman_step) {}

  int inner_iteration;
  int bregman_step;  // -1 when the failure happened outside an outer loop
};

}  // namespace msseg
