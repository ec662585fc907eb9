#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hw {

// Stable machine-readable error codes.
enum class Code {
  Mismatch = 1,    // E001 expected/actual type mismatch (conversion failure)
  Unbound = 2,     // E002 unbound identifier
  CannotInfer = 3, // E003 term form has no inference rule
  Fuel = 4,        // E004 reduction budget exceeded
  Parse = 5,       // E005 lexical or syntax error
  Duplicate = 6,   // E006 duplicate definition
  ImportCycle = 7, // E007 cyclic imports
  Io = 8,          // E008 file not readable
  Internal = 9,    // E009 kernel invariant violation
};

std::string code_string(Code c);

struct Span {
  std::string file;
  int line = 0, col = 0;       // 1-based, byte columns
  int end_line = 0, end_col = 0;
  bool valid() const { return line > 0; }
};

struct Diagnostic {
  Code code = Code::Internal;
  std::string message;
  Span span;
  std::string expected;  // pretty-printed, when meaningful
  std::string actual;

  // file:line:col: error[E00x]: message
  std::string render() const;
  std::string render_json() const;
};

// Checking is exception-driven internally; the CLI and module loader catch.
struct CheckError : std::runtime_error {
  Diagnostic diag;
  explicit CheckError(Diagnostic d) : std::runtime_error(d.render()), diag(std::move(d)) {}
};

[[noreturn]] void fail(Code code, std::string message, std::string expected = "",
                       std::string actual = "");

}  // namespace hw
