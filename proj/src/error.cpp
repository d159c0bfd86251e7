#include "probdef/error.hpp"

namespace probdef {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax:
      return "syntax-error";
    case ErrorKind::kBounds:
      return "bounds-error";
    case ErrorKind::kDenominatorZero:
      return "denominator-zero";
    case ErrorKind::kDefeasibleInKb:
      return "defeasible-in-kb";
    case ErrorKind::kUnknownAtom:
      return "unknown-atom";
    case ErrorKind::kVocabularyTooLarge:
      return "vocabulary-too-large";
    case ErrorKind::kSigmaInconsistent:
      return "sigma-inconsistent";
    case ErrorKind::kPrecInconsistent:
      return "prec-inconsistent";
    case ErrorKind::kTooManyDefaults:
      return "too-many-defaults";
  }
  return "unknown-error";
}

bool is_parse_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax:
    case ErrorKind::kBounds:
    case ErrorKind::kDenominatorZero:
    case ErrorKind::kDefeasibleInKb:
      return true;
    default:
      return false;
  }
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message, int line) {
  std::string out = to_string(kind);
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, int line)
    : std::runtime_error(decorate(kind, message, line)), kind_(kind), line_(line) {}

}  // namespace probdef
