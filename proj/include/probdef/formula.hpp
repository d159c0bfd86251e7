#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace probdef {

// Propositional formula over named atoms. The core syntax is atoms, the two
// constants, negation and conjunction; disjunction, implication and
// equivalence are expanded by the constructors below.
//
// Formulas are immutable and share structure, so copies are cheap and safe to
// hand across threads.
class Formula {
 public:
  enum class Kind { kFalse, kTrue, kAtom, kNot, kAnd };

  static Formula falsity();
  static Formula truth();
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  Formula();  // the constant true

  Kind kind() const;
  const std::string& name() const;  // kAtom only
  const Formula& operand() const;   // kNot only
  const Formula& lhs() const;       // kAnd only
  const Formula& rhs() const;       // kAnd only

  void collect_atoms(std::set<std::string>& out) const;

  // Canonical text in the core syntax; parse_formula(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Grammar: atoms `[a-z_][a-z0-9_]*`, `true`, `false`, `!`, `&`, `v`, `=>`,
// `<=>`, parentheses. Precedence `!` > `&` > `v` > `=>` > `<=>`; `=>` is
// right-associative, the others associate to the left.
Formula parse_formula(std::string_view text);

// Hard cap on the vocabulary size (2^16 worlds).
inline constexpr std::size_t kMaxAtoms = 16;

// Sorted, duplicate-free list of atoms. World indices read the atoms in this
// order as binary digits, the first atom being the most significant bit.
class Vocabulary {
 public:
  Vocabulary() = default;
  // Sorts and deduplicates; throws Error(kVocabularyTooLarge) above kMaxAtoms.
  explicit Vocabulary(std::vector<std::string> atoms);

  std::size_t size() const { return atoms_.size(); }
  std::size_t world_count() const { return std::size_t{1} << atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  bool contains(std::string_view atom) const;
  // Throws Error(kUnknownAtom).
  std::size_t index_of(std::string_view atom) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<std::string> atoms_;
};

class World {
 public:
  World(std::uint32_t index, std::size_t atom_count) : index_(index), atom_count_(atom_count) {}

  std::uint32_t index() const { return index_; }
  std::size_t atom_count() const { return atom_count_; }
  bool value(std::size_t atom) const {
    return ((index_ >> (atom_count_ - 1 - atom)) & 1u) != 0;
  }

 private:
  std::uint32_t index_;
  std::size_t atom_count_;
};

// All 2^n worlds in ascending index order. Throws Error(kVocabularyTooLarge)
// for more than kMaxAtoms atoms.
std::vector<World> enumerate_worlds(const Vocabulary& vocab);

// Throws Error(kUnknownAtom) when `f` mentions an atom outside `vocab`.
bool evaluate(const World& w, const Formula& f, const Vocabulary& vocab);

// One flag per world, indexed by world index.
std::vector<bool> truth_table(const Formula& f, const Vocabulary& vocab);

// Ascending indices of the worlds satisfying `f`.
std::vector<std::uint32_t> satisfying_indices(const Formula& f, const Vocabulary& vocab);

}  // namespace probdef
