#pragma once

#include <stdexcept>
#include <string>

namespace qasc {

/// Malformed or inconsistent user input: bad tables, unknown labels, sets that
/// are not unions of conjugacy classes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A square-class question could not be settled within the configured height
/// cap; the non-square verdict holds only with the stated confidence.
class UndeterminedError : public std::runtime_error {
 public:
  UndeterminedError(const std::string& what, double confidence)
      : std::runtime_error(what), confidence_(confidence) {}
  double confidence() const { return confidence_; }

 private:
  double confidence_;
};

}  // namespace qasc
