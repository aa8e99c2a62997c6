#pragma once

#include <stdexcept>
#include <string>

namespace liecontract {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedOrder : Error {
  using Error::Error;
};
struct OrderMismatch : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct NotComparable : Error {
  using Error::Error;
};
struct NotASolution : Error {
  using Error::Error;
};
struct BindingError : Error {
  using Error::Error;
};

// row/col are 1-based; 0 when not applicable
struct ParseError : Error {
  ParseError(const std::string& what, int row = 0, int col = 0)
      : Error(decorate(what, row, col)), row(row), col(col) {}
  int row;
  int col;

 private:
  static std::string decorate(const std::string& what, int row, int col) {
    if (row == 0) return what;
    std::string s = "row " + std::to_string(row);
    if (col != 0) s += ", column " + std::to_string(col);
    return s + ": " + what;
  }
};

}  // namespace liecontract
