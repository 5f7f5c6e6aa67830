#pragma once

#include <stdexcept>
#include <string>

namespace apx {

// All contract violations surface as Error with a stable machine-readable
// code ("ParseError", "TooLarge", ...) plus a human-readable message.
// Invariant-checker verdicts are NOT errors; checkers return violation
// labels as data.  Error is reserved for misuse of the API itself.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace apx
