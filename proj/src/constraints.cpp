#include "probdef/constraints.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "lexer.hpp"
#include "probdef/error.hpp"

namespace probdef {

using detail::TokenStream;
using detail::TokenType;

std::string ConditionalConstraint::to_string() const {
  return "(" + consequent.to_string() + (is_defeasible() ? " || " : " | ") +
         antecedent.to_string() + ")[" + to_compact_string(lower) + "," +
         to_compact_string(upper) + "]";
}

bool operator==(const ConditionalConstraint& a, const ConditionalConstraint& b) {
  return a.kind == b.kind && a.lower == b.lower && a.upper == b.upper &&
         a.consequent == b.consequent && a.antecedent == b.antecedent;
}

ConditionalConstraint strict_constraint(Formula consequent, Formula antecedent, Rational lower,
                                        Rational upper) {
  lower.canonicalize();
  upper.canonicalize();
  return {std::move(consequent), std::move(antecedent), std::move(lower), std::move(upper),
          ConstraintKind::kStrict, 0};
}

ConditionalConstraint default_constraint(Formula consequent, Formula antecedent, Rational lower,
                                         Rational upper) {
  lower.canonicalize();
  upper.canonicalize();
  return {std::move(consequent), std::move(antecedent), std::move(lower), std::move(upper),
          ConstraintKind::kDefeasible, 0};
}

std::string Query::to_string() const {
  return "(" + consequent.to_string() + " | " + antecedent.to_string() + ")";
}

namespace {

Rational parse_bound(TokenStream& in) {
  const auto& tok = in.expect(TokenType::kNumber, "a probability bound");
  return parse_rational(tok.text);
}

// `(psi BAR phi)[l,u]`; `bar` reports which conditional bar was used.
ConditionalConstraint parse_constraint(TokenStream& in, TokenType& bar) {
  ConditionalConstraint c;
  in.expect(TokenType::kLParen, "'('");
  c.consequent = detail::parse_formula(in);
  if (in.at(TokenType::kBar) || in.at(TokenType::kDoubleBar)) {
    bar = in.next().type;
  } else {
    in.fail("expected '|' or '||'");
  }
  c.antecedent = detail::parse_formula(in);
  in.expect(TokenType::kRParen, "')'");
  in.expect(TokenType::kLBracket, "'['");
  c.lower = parse_bound(in);
  in.expect(TokenType::kComma, "','");
  c.upper = parse_bound(in);
  in.expect(TokenType::kRBracket, "']'");
  if (c.lower < 0 || c.upper > 1 || c.lower > c.upper) {
    throw Error(ErrorKind::kBounds, "bounds [" + to_compact_string(c.lower) + "," +
                                        to_compact_string(c.upper) +
                                        "] must satisfy 0 <= l <= u <= 1");
  }
  return c;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

ConditionalConstraint parse_declaration(std::string_view line) {
  TokenStream in(detail::tokenize(line));
  const auto& keyword = in.expect(TokenType::kIdent, "'strict' or 'default'");
  ConstraintKind kind;
  if (keyword.text == "strict") {
    kind = ConstraintKind::kStrict;
  } else if (keyword.text == "default") {
    kind = ConstraintKind::kDefeasible;
  } else {
    throw Error(ErrorKind::kSyntax, "unknown declaration '" + keyword.text + "'");
  }
  TokenType bar = TokenType::kBar;
  ConditionalConstraint c = parse_constraint(in, bar);
  if (!in.at(TokenType::kEnd)) in.fail("unexpected trailing input");
  if (kind == ConstraintKind::kStrict && bar == TokenType::kDoubleBar) {
    throw Error(ErrorKind::kSyntax, "strict constraints use '|', not '||'");
  }
  c.kind = kind;
  return c;
}

}  // namespace

DefaultTheory parse_theory(std::string_view text) {
  DefaultTheory theory;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
    line = trim(line);
    if (line.empty()) continue;
    try {
      ConditionalConstraint c = parse_declaration(line);
      c.line = line_no;
      (c.is_defeasible() ? theory.defaults : theory.strict).push_back(std::move(c));
    } catch (const Error& e) {
      // Re-raise with the line number attached, dropping the generic prefix.
      std::string message = e.what();
      const std::string prefix = std::string(to_string(e.kind())) + ": ";
      if (message.starts_with(prefix)) message = message.substr(prefix.size());
      throw Error(e.kind(), message, line_no);
    }
  }
  return theory;
}

DefaultTheory load_theory(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kSyntax, "cannot read theory file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str());
}

std::string print_theory(const DefaultTheory& theory) {
  std::string out;
  for (const auto& c : theory.strict) out += "strict " + c.to_string() + "\n";
  for (const auto& c : theory.defaults) {
    ConditionalConstraint shown = c;
    shown.kind = ConstraintKind::kStrict;  // keyword carries the kind; print a single bar
    out += "default " + shown.to_string() + "\n";
  }
  return out;
}

KnowledgeBase parse_kb(std::string_view text) {
  TokenStream in(detail::tokenize(text));
  KnowledgeBase kb;
  if (in.at(TokenType::kIdent) && in.peek().text == "true") {
    in.next();
    if (!in.at(TokenType::kEnd)) in.fail("unexpected trailing input");
    return kb;
  }
  do {
    TokenType bar = TokenType::kBar;
    ConditionalConstraint c = parse_constraint(in, bar);
    if (bar == TokenType::kDoubleBar) {
      throw Error(ErrorKind::kDefeasibleInKb,
                  "evidence must consist of strict constraints, got " + c.to_string());
    }
    kb.conjuncts.push_back(std::move(c));
  } while (in.accept(TokenType::kAnd));
  if (!in.at(TokenType::kEnd)) in.fail("unexpected trailing input");
  return kb;
}

std::string print_kb(const KnowledgeBase& kb) {
  if (kb.conjuncts.empty()) return "true";
  std::string out;
  for (const auto& c : kb.conjuncts) {
    if (!out.empty()) out += " & ";
    out += c.to_string();
  }
  return out;
}

Query parse_query(std::string_view text) {
  TokenStream in(detail::tokenize(text));
  Query q;
  in.expect(TokenType::kLParen, "'('");
  q.consequent = detail::parse_formula(in);
  in.expect(TokenType::kBar, "'|'");
  q.antecedent = detail::parse_formula(in);
  in.expect(TokenType::kRParen, "')'");
  if (!in.at(TokenType::kEnd)) in.fail("unexpected trailing input");
  return q;
}

Vocabulary vocabulary_of(const DefaultTheory& theory, const KnowledgeBase& kb,
                         const Query& query) {
  std::set<std::string> atoms;
  auto add = [&](const ConditionalConstraint& c) {
    c.consequent.collect_atoms(atoms);
    c.antecedent.collect_atoms(atoms);
  };
  for (const auto& c : theory.strict) add(c);
  for (const auto& c : theory.defaults) add(c);
  for (const auto& c : kb.conjuncts) add(c);
  query.consequent.collect_atoms(atoms);
  query.antecedent.collect_atoms(atoms);
  return Vocabulary(std::vector<std::string>(atoms.begin(), atoms.end()));
}

}  // namespace probdef
