#pragma once

#include <stdexcept>
#include <string>

namespace nll {

// Base for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: degree data, polynomial text, matrix files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// coker(phi) has nonzero pieces past the socle degree.
class NotFiniteLength : public Error {
 public:
  using Error::Error;
};

// A 3x2 line parametrization (or a dual point) of rank < 2.
class DegenerateLine : public Error {
 public:
  using Error::Error;
};

// Two independently derived quantities disagree; the input is degenerate
// or non-generic.
class InconsistentData : public Error {
 public:
  using Error::Error;
};

}  // namespace nll
