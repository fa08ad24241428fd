#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Precondition violated by a caller (bad q, zero divisor, mixed rings, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Hecke-Farey symbol that cannot be turned into a special polygon.
/// code() is a machine-readable violation name such as "InvalidErAdjacency".
class InvalidSymbol : public std::runtime_error {
 public:
  InvalidSymbol(const std::string& code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(code) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Text input that does not follow the symbol or ring-element grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
  }

  int line_;
  int column_;
};

/// A computation exceeded a configured size cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Should not happen for correct inputs; signals a bug or a broken cross-check.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hecke
