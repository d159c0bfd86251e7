#pragma once

#include <stdexcept>
#include <string>

namespace probdef {

enum class ErrorKind {
  kSyntax,
  kBounds,
  kDenominatorZero,
  kDefeasibleInKb,
  kUnknownAtom,
  kVocabularyTooLarge,
  kSigmaInconsistent,
  kPrecInconsistent,
  kTooManyDefaults,
};

const char* to_string(ErrorKind kind);

// Parse errors (syntax, bounds, denominator, defeasible-in-kb) map to CLI exit
// code 2, everything else to exit code 1.
bool is_parse_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  // 1-based source line for theory-file diagnostics, 0 when not applicable.
  int line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  int line_;
};

}  // namespace probdef
