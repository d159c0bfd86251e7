#include "probdef/formula.hpp"

#include <algorithm>

#include "lexer.hpp"
#include "probdef/error.hpp"

namespace probdef {

struct Formula::Node {
  Kind kind;
  std::string name;
  Formula lhs;
  Formula rhs;
};

Formula::Formula() : node_(nullptr) {}
Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::falsity() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::kFalse, {}, {}, {}}));
  return f;
}

Formula Formula::truth() { return Formula(); }

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::kAtom, std::move(name), {}, {}}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::kNot, {}, std::move(operand), {}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kAnd, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return negation(conjunction(negation(std::move(lhs)), negation(std::move(rhs))));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return negation(conjunction(std::move(lhs), negation(std::move(rhs))));
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return conjunction(negation(conjunction(negation(lhs), rhs)),
                     negation(conjunction(lhs, negation(rhs))));
}

// A null node stands for `true` so that default construction allocates nothing.
Formula::Kind Formula::kind() const { return node_ ? node_->kind : Kind::kTrue; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::operand() const { return node_->lhs; }
const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }

void Formula::collect_atoms(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::kAtom:
      out.insert(name());
      break;
    case Kind::kNot:
      operand().collect_atoms(out);
      break;
    case Kind::kAnd:
      lhs().collect_atoms(out);
      rhs().collect_atoms(out);
      break;
    default:
      break;
  }
}

std::string Formula::to_string() const {
  switch (kind()) {
    case Kind::kFalse:
      return "false";
    case Kind::kTrue:
      return "true";
    case Kind::kAtom:
      return name();
    case Kind::kNot:
      if (operand().kind() == Kind::kAnd) return "!(" + operand().to_string() + ")";
      return "!" + operand().to_string();
    case Kind::kAnd: {
      std::string right = rhs().to_string();
      if (rhs().kind() == Kind::kAnd) right = "(" + right + ")";
      return lhs().to_string() + " & " + right;
    }
  }
  return {};
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::kFalse:
    case Formula::Kind::kTrue:
      return true;
    case Formula::Kind::kAtom:
      return a.name() == b.name();
    case Formula::Kind::kNot:
      return a.operand() == b.operand();
    case Formula::Kind::kAnd:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

Formula parse_formula(std::string_view text) {
  detail::TokenStream in(detail::tokenize(text));
  Formula f = detail::parse_formula(in);
  if (!in.at(detail::TokenType::kEnd)) in.fail("unexpected trailing input");
  return f;
}

Vocabulary::Vocabulary(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  if (atoms_.size() > kMaxAtoms) {
    throw Error(ErrorKind::kVocabularyTooLarge,
                std::to_string(atoms_.size()) + " atoms exceed the cap of " +
                    std::to_string(kMaxAtoms));
  }
}

bool Vocabulary::contains(std::string_view atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

std::size_t Vocabulary::index_of(std::string_view atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) {
    throw Error(ErrorKind::kUnknownAtom, "'" + std::string(atom) + "' is not in the vocabulary");
  }
  return static_cast<std::size_t>(it - atoms_.begin());
}

std::vector<World> enumerate_worlds(const Vocabulary& vocab) {
  if (vocab.size() > kMaxAtoms) throw Error(ErrorKind::kVocabularyTooLarge, "");
  std::vector<World> worlds;
  worlds.reserve(vocab.world_count());
  for (std::size_t i = 0; i < vocab.world_count(); ++i) {
    worlds.emplace_back(static_cast<std::uint32_t>(i), vocab.size());
  }
  return worlds;
}

bool evaluate(const World& w, const Formula& f, const Vocabulary& vocab) {
  switch (f.kind()) {
    case Formula::Kind::kFalse:
      return false;
    case Formula::Kind::kTrue:
      return true;
    case Formula::Kind::kAtom:
      return w.value(vocab.index_of(f.name()));
    case Formula::Kind::kNot:
      return !evaluate(w, f.operand(), vocab);
    case Formula::Kind::kAnd:
      // Evaluate both sides so unknown atoms are reported regardless of order.
      return evaluate(w, f.lhs(), vocab) & evaluate(w, f.rhs(), vocab);
  }
  return false;
}

std::vector<bool> truth_table(const Formula& f, const Vocabulary& vocab) {
  const std::size_t n = vocab.world_count();
  switch (f.kind()) {
    case Formula::Kind::kFalse:
      return std::vector<bool>(n, false);
    case Formula::Kind::kTrue:
      return std::vector<bool>(n, true);
    case Formula::Kind::kAtom: {
      const std::size_t shift = vocab.size() - 1 - vocab.index_of(f.name());
      std::vector<bool> out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = ((i >> shift) & 1u) != 0;
      return out;
    }
    case Formula::Kind::kNot: {
      std::vector<bool> out = truth_table(f.operand(), vocab);
      out.flip();
      return out;
    }
    case Formula::Kind::kAnd: {
      std::vector<bool> out = truth_table(f.lhs(), vocab);
      const std::vector<bool> right = truth_table(f.rhs(), vocab);
      for (std::size_t i = 0; i < n; ++i) out[i] = out[i] && right[i];
      return out;
    }
  }
  return {};
}

std::vector<std::uint32_t> satisfying_indices(const Formula& f, const Vocabulary& vocab) {
  const std::vector<bool> table = truth_table(f, vocab);
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i]) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

}  // namespace probdef
