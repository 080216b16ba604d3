#ifndef CORNERDET_ERRORS_HPP
#define CORNERDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cornerdet {

// Two families, matching the CLI exit-code contract:
//   DomainError  -> exit 2 (bad input: shapes, parameter ranges, unsupported symbols)
//   NumericError -> exit 3 (poles, singular pivots, divergence, lost definiteness)
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedSymbolError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class PoleError : public NumericError {
 public:
  using NumericError::NumericError;
};

class SingularMatrixError : public NumericError {
 public:
  SingularMatrixError(const std::string& what, int pivot_index)
      : NumericError(what), pivot_index(pivot_index) {}
  int pivot_index;
};

class DefinitenessError : public NumericError {
 public:
  DefinitenessError(const std::string& what, int index)
      : NumericError(what), index(index) {}
  int index;
};

class DivergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Raised when a closed formula's own applicability condition fails
// (e.g. a reconstruction that divides by a vanishing corner entry).
class FormulaError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace cornerdet

#endif
