#include "lexer.hpp"

#include <cctype>

#include "probdef/error.hpp"

namespace probdef::detail {

namespace {

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool number_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](TokenType type, std::size_t len) {
    out.push_back({type, std::string(text.substr(i, len)), i + 1});
    i += len;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      push(text.substr(i, j - i) == "v" ? TokenType::kOr : TokenType::kIdent, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < text.size() && number_char(text[j])) ++j;
      push(TokenType::kNumber, j - i);
      continue;
    }
    const std::string_view rest = text.substr(i);
    if (rest.starts_with("<=>")) {
      push(TokenType::kEquiv, 3);
    } else if (rest.starts_with("=>")) {
      push(TokenType::kImplies, 2);
    } else if (rest.starts_with("||")) {
      push(TokenType::kDoubleBar, 2);
    } else if (rest.starts_with("\xE2\x80\x96")) {  // U+2016 DOUBLE VERTICAL LINE
      push(TokenType::kDoubleBar, 3);
    } else {
      switch (c) {
        case '!': push(TokenType::kNot, 1); break;
        case '&': push(TokenType::kAnd, 1); break;
        case '(': push(TokenType::kLParen, 1); break;
        case ')': push(TokenType::kRParen, 1); break;
        case '|': push(TokenType::kBar, 1); break;
        case '[': push(TokenType::kLBracket, 1); break;
        case ']': push(TokenType::kRBracket, 1); break;
        case ',': push(TokenType::kComma, 1); break;
        default:
          throw Error(ErrorKind::kSyntax, "unexpected character '" + std::string(1, c) +
                                              "' at column " + std::to_string(i + 1));
      }
    }
  }
  out.push_back({TokenType::kEnd, "", text.size() + 1});
  return out;
}

bool TokenStream::accept(TokenType type) {
  if (!at(type)) return false;
  next();
  return true;
}

const Token& TokenStream::expect(TokenType type, const char* what) {
  if (!at(type)) fail(std::string("expected ") + what);
  return next();
}

void TokenStream::fail(const std::string& reason) const {
  const Token& t = peek();
  std::string found = t.type == TokenType::kEnd ? "end of input" : "'" + t.text + "'";
  throw Error(ErrorKind::kSyntax,
              reason + " at column " + std::to_string(t.column) + ", found " + found);
}

namespace {

Formula parse_equiv(TokenStream& in);

Formula parse_primary(TokenStream& in) {
  if (in.accept(TokenType::kNot)) return Formula::negation(parse_primary(in));
  if (in.accept(TokenType::kLParen)) {
    Formula inner = parse_equiv(in);
    in.expect(TokenType::kRParen, "')'");
    return inner;
  }
  if (in.at(TokenType::kIdent)) {
    const std::string name = in.next().text;
    if (name == "true") return Formula::truth();
    if (name == "false") return Formula::falsity();
    return Formula::atom(name);
  }
  in.fail("expected a formula");
}

Formula parse_and(TokenStream& in) {
  Formula f = parse_primary(in);
  while (in.accept(TokenType::kAnd)) f = Formula::conjunction(f, parse_primary(in));
  return f;
}

Formula parse_or(TokenStream& in) {
  Formula f = parse_and(in);
  while (in.accept(TokenType::kOr)) f = Formula::disjunction(f, parse_and(in));
  return f;
}

Formula parse_implies(TokenStream& in) {
  Formula f = parse_or(in);
  if (in.accept(TokenType::kImplies)) return Formula::implication(f, parse_implies(in));
  return f;
}

Formula parse_equiv(TokenStream& in) {
  Formula f = parse_implies(in);
  while (in.accept(TokenType::kEquiv)) f = Formula::equivalence(f, parse_implies(in));
  return f;
}

}  // namespace

Formula parse_formula(TokenStream& in) { return parse_equiv(in); }

}  // namespace probdef::detail
