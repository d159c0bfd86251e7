#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "probdef/formula.hpp"

namespace probdef::detail {

enum class TokenType {
  kIdent,
  kNumber,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kEquiv,
  kLParen,
  kRParen,
  kBar,
  kDoubleBar,
  kLBracket,
  kRBracket,
  kComma,
  kEnd,
};

struct Token {
  TokenType type;
  std::string text;
  std::size_t column;  // 1-based
};

// Throws Error(kSyntax) on characters outside the token set.
std::vector<Token> tokenize(std::string_view text);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(TokenType type) const { return peek().type == type; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(TokenType type);
  // Throws Error(kSyntax) naming `what` when the next token is not `type`.
  const Token& expect(TokenType type, const char* what);
  [[noreturn]] void fail(const std::string& reason) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// formula := equiv ; stops at the first token that cannot continue a formula.
Formula parse_formula(TokenStream& in);

}  // namespace probdef::detail
