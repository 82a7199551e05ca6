#pragma once

// Outcome of one verification suite: pass/fail plus a re-checkable
// counterexample when it fails.

#include <string>

namespace qtcat {

struct Report {
  std::string suite;
  std::string params;
  bool pass = true;
  std::string counterexample;  // empty iff pass
  long long elapsed_ms = 0;

  void fail(const std::string& detail) {
    pass = false;
    if (!counterexample.empty()) counterexample += "; ";
    counterexample += detail;
  }

  std::string json() const {
    auto quote = [](const std::string& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
          out += "\\n";
          continue;
        }
        out += c;
      }
      return out + "\"";
    };
    std::string out = "{\"suite\":" + quote(suite) + ",\"params\":" + quote(params) +
                      ",\"status\":" + (pass ? quote("pass") : quote("fail")) +
                      ",\"counterexample\":";
    out += pass ? "null" : "{\"detail\":" + quote(counterexample) + "}";
    out += ",\"elapsed_ms\":" + std::to_string(elapsed_ms) + "}";
    return out;
  }
};

}  // namespace qtcat
