#pragma once

#include <stdexcept>
#include <string>

namespace discloc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or over-cap input (files, ids, tables).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an operation does not hold
/// (e.g. the base category is not finitely bicomplete).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Functor / transformation data whose shape does not match its category.
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace discloc
