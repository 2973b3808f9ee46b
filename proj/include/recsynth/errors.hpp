#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace recsynth {

/// Base of all input errors (bad sort declarations, ill-sorted examples,
/// malformed problem text). Synthesis failures are not errors; they are
/// reported as values.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}

  /// 1-based index of the offending i/o equation, when known.
  std::optional<std::size_t> example_index;
};

class SortEnvError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownSymbol : public InputError {
 public:
  explicit UnknownSymbol(std::string symbol)
      : InputError("unknown symbol '" + symbol + "'"), symbol(std::move(symbol)) {}
  std::string symbol;
};

class ArityMismatch : public InputError {
 public:
  ArityMismatch(std::string symbol, std::size_t expected, std::size_t actual)
      : InputError("symbol '" + symbol + "' expects " + std::to_string(expected) +
                   " argument(s), got " + std::to_string(actual)),
        symbol(std::move(symbol)),
        expected(expected),
        actual(actual) {}
  std::string symbol;
  std::size_t expected;
  std::size_t actual;
};

class SortMismatch : public InputError {
 public:
  SortMismatch(std::string term, std::string expected, std::string actual)
      : InputError("term '" + term + "' has sort " + actual + ", expected " + expected),
        term(std::move(term)),
        expected(std::move(expected)),
        actual(std::move(actual)) {}
  std::string term;
  std::string expected;
  std::string actual;
};

class SortConflict : public InputError {
 public:
  SortConflict(std::string variable, std::string first, std::string second)
      : InputError("variable '" + variable + "' used at sorts " + first + " and " + second),
        variable(std::move(variable)),
        first(std::move(first)),
        second(std::move(second)) {}
  std::string variable;
  std::string first;
  std::string second;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

/// A rule that the rewrite engine refuses to execute.
class RuleAdmissionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace recsynth
