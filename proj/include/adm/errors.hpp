#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax errors carry a 1-based column; `line` is set when parsing files.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t column, std::size_t line = 0);

  std::size_t column() const noexcept { return column_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

  ParseError at_line(std::size_t line) const;

 private:
  std::string message_;
  std::size_t column_;
  std::size_t line_;
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, double required, double cap);

  double required() const noexcept { return required_; }
  double cap() const noexcept { return cap_; }

 private:
  double required_;
  double cap_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace adm
