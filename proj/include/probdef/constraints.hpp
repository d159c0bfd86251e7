#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "probdef/formula.hpp"
#include "probdef/rational.hpp"

namespace probdef {

enum class ConstraintKind { kStrict, kDefeasible };

// (consequent | antecedent)[lower, upper], strict or defeasible.
// Invariant for parsed constraints: 0 <= lower <= upper <= 1.
struct ConditionalConstraint {
  Formula consequent;
  Formula antecedent;
  Rational lower;
  Rational upper;
  ConstraintKind kind = ConstraintKind::kStrict;
  int line = 0;  // source line, 0 when not parsed from a file

  bool is_defeasible() const { return kind == ConstraintKind::kDefeasible; }

  // `(psi | phi)[l,u]` for strict and `(psi || phi)[l,u]` for defeasible.
  std::string to_string() const;

  // Same formulas, bounds and kind; the source line is ignored.
  friend bool operator==(const ConditionalConstraint& a, const ConditionalConstraint& b);
};

ConditionalConstraint strict_constraint(Formula consequent, Formula antecedent, Rational lower,
                                        Rational upper);
ConditionalConstraint default_constraint(Formula consequent, Formula antecedent, Rational lower,
                                         Rational upper);

// A probabilistic default theory (P, D). Defaults keep their insertion order;
// their position in `defaults` is their identity everywhere in the engine.
struct DefaultTheory {
  std::vector<ConditionalConstraint> strict;
  std::vector<ConditionalConstraint> defaults;
};

// Conjunction of strict constraints; empty means `true`.
struct KnowledgeBase {
  std::vector<ConditionalConstraint> conjuncts;
};

// Target of a tight-consequence query, written `(psi | phi)`.
struct Query {
  Formula consequent;
  Formula antecedent;

  std::string to_string() const;
};

// Theory-file grammar, one declaration per line:
//   % comment
//   strict  (psi | phi)[l,u]
//   default (psi | phi)[l,u]
// Throws Error(kSyntax) or Error(kBounds) carrying the offending line.
DefaultTheory parse_theory(std::string_view text);
DefaultTheory load_theory(const std::filesystem::path& path);

// Canonical text; parse_theory(print_theory(t)) reproduces t.
std::string print_theory(const DefaultTheory& theory);

// `true`, or `&`-separated strict constraints `(psi|phi)[l,u]`.
// Throws Error(kDefeasibleInKb) for `||` conjuncts.
KnowledgeBase parse_kb(std::string_view text);
std::string print_kb(const KnowledgeBase& kb);

Query parse_query(std::string_view text);

// Sorted union of all atoms in the three inputs.
Vocabulary vocabulary_of(const DefaultTheory& theory, const KnowledgeBase& kb,
                         const Query& query);

}  // namespace probdef
