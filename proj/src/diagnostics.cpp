#include "hw/diagnostics.hpp"

#include <json.hpp>

namespace hw {

std::string code_string(Code c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "E%03d", static_cast<int>(c));
  return buf;
}

std::string Diagnostic::render() const {
  std::string out;
  if (span.valid()) {
    out += span.file + ":" + std::to_string(span.line) + ":" + std::to_string(span.col) + ": ";
  }
  out += "error[" + code_string(code) + "]: " + message;
  if (!expected.empty() || !actual.empty()) {
    out += "\n  expected: " + expected;
    out += "\n  actual:   " + actual;
  }
  return out;
}

std::string Diagnostic::render_json() const {
  nlohmann::json j;
  j["code"] = code_string(code);
  j["message"] = message;
  if (span.valid()) {
    j["span"] = {{"file", span.file},
                 {"line", span.line},
                 {"col", span.col},
                 {"endLine", span.end_line},
                 {"endCol", span.end_col}};
  }
  if (!expected.empty()) j["expected"] = expected;
  if (!actual.empty()) j["actual"] = actual;
  return j.dump();
}

void fail(Code code, std::string message, std::string expected, std::string actual) {
  Diagnostic d;
  d.code = code;
  d.message = std::move(message);
  d.expected = std::move(expected);
  d.actual = std::move(actual);
  throw CheckError(std::move(d));
}

}  // namespace hw
