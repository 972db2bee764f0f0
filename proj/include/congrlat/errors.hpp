#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "congrlat/integer.hpp"

namespace congrlat {

// A caller broke a precondition (zero modulus where forbidden, empty input,
// mismatched arity, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested enumeration or search is larger than the permitted limit.
// exact_count() is the true size of what was asked for, so callers can decide
// whether to retry with a bigger cap.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, Int exact_count, Int limit)
      : std::runtime_error(what),
        exact_count_(std::move(exact_count)),
        limit_(std::move(limit)) {}

  const Int& exact_count() const { return exact_count_; }
  const Int& limit() const { return limit_; }

 private:
  Int exact_count_;
  Int limit_;
};

struct ParseDiagnostic {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based, counted in bytes
  std::string message;
};

// Syntax error(s) with source locations. Parsing a multi-line system collects
// one diagnostic per bad line before throwing.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<ParseDiagnostic> diagnostics)
      : std::runtime_error(render(diagnostics)),
        diagnostics_(std::move(diagnostics)) {}

  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : ParseError(std::vector<ParseDiagnostic>{{line, column, message}}) {}

  const std::vector<ParseDiagnostic>& diagnostics() const {
    return diagnostics_;
  }

 private:
  static std::string render(const std::vector<ParseDiagnostic>& ds) {
    std::string out;
    for (const auto& d : ds) {
      if (!out.empty()) out += '\n';
      out += std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
             d.message;
    }
    return out;
  }

  std::vector<ParseDiagnostic> diagnostics_;
};

}  // namespace congrlat
