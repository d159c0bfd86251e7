#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "probdef/constraints.hpp"
#include "probdef/probsat.hpp"
#include "probdef/zrank.hpp"

namespace probdef {

enum class Semantics { kZero, kOne, kZ, kLex, kCe };

// Tags used on the command line: zero, one, z, lex, ce.
const char* to_string(Semantics semantics);
std::optional<Semantics> parse_semantics(std::string_view tag);

// Enumeration cap on |D| for priority orders and violation sets.
inline constexpr std::size_t kMaxPriorityDefaults = 6;

// Bit i stands for theory.defaults[i].
using DefaultMask = std::uint32_t;

DefaultSet to_default_set(DefaultMask mask);
DefaultMask to_mask(const DefaultSet& set);

// Strict partial order on the defaults; precedes(a, b) reads a < b ("a has
// lower priority than b"). Kept transitively closed.
class PriorityOrder {
 public:
  explicit PriorityOrder(std::size_t size = 0) : above_(size, 0) {}
  // Transitive closure of `pairs`; throws std::invalid_argument on a cycle.
  PriorityOrder(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return above_.size(); }
  bool precedes(std::size_t a, std::size_t b) const { return (above_[a] >> b) & 1u; }
  DefaultMask above(std::size_t a) const { return above_[a]; }
  DefaultMask below(std::size_t b) const;

  // Adds a < b and closes transitively; nullopt when that creates a cycle.
  std::optional<PriorityOrder> with(std::size_t a, std::size_t b) const;

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  bool irreflexive() const;
  bool transitive() const;

  friend bool operator==(const PriorityOrder&, const PriorityOrder&) = default;
  friend auto operator<=>(const PriorityOrder&, const PriorityOrder&) = default;

 private:
  std::vector<DefaultMask> above_;
};

// A set of defaults violated together, with every LOW/HIGH branch choice
// (one side per member, members in ascending index order) that some model of
// P and the evidence realizes while satisfying all other defaults.
struct ViolationSet {
  DefaultMask members = 0;
  std::vector<std::vector<ViolationSide>> assignments;
};

// For every default d, the inclusion-minimal subsets D' of D that are under P
// in conflict with d (no model of P and D' verifies d).
std::vector<std::vector<DefaultMask>> minimal_conflicts(const DefaultTheory& theory,
                                                        const Vocabulary& vocab);

bool admissible(const PriorityOrder& order,
                const std::vector<std::vector<DefaultMask>>& conflicts);

// Every strict partial order on D admissible with the theory.
// Throws Error(kTooManyDefaults) above kMaxPriorityDefaults.
std::vector<PriorityOrder> admissible_orders(const DefaultTheory& theory);

// Admissible orders built by adding one witness pair per unresolved conflict.
// Every admissible order contains one of them, so they select exactly the
// same conditionally minimal models as the full enumeration.
std::vector<PriorityOrder> generating_orders(
    std::size_t default_count, const std::vector<std::vector<DefaultMask>>& conflicts);

// V' is preferable to V iff V' != V and each d in V' \ V has some d' in
// V \ V' with d < d'.
bool preferable(DefaultMask better, DefaultMask worse, const PriorityOrder& order);

std::vector<ViolationSet> achievable_violation_sets(const DefaultTheory& theory,
                                                    const KnowledgeBase& kb);

// Default subsets S with P, evidence and S satisfiable whose per-stratum
// counts are lexicographically maximal from the top stratum down. Sorted.
std::vector<DefaultSet> lex_optimal_subsets(const DefaultTheory& theory, const KnowledgeBase& kb);

// One model class that contributed to an answer: models of P, the evidence
// and `satisfied`, violating `violated` on the given sides (ce only).
struct Region {
  DefaultSet satisfied;
  std::vector<std::pair<std::size_t, ViolationSide>> violated;
  Interval interval;
};

// Answer plus the intermediate artifacts behind it.
struct Entailment {
  Semantics semantics = Semantics::kOne;
  Interval interval;
  std::optional<ZPartition> partition;   // z, lex
  std::optional<std::size_t> threshold;  // z: least satisfiable rank threshold
  std::vector<DefaultSet> lex_subsets;   // lex
  std::vector<ViolationSet> selected;    // ce
  std::vector<Region> regions;
};

// Dispatch with diagnostics. Throws Error(kSigmaInconsistent) for z and lex,
// Error(kPrecInconsistent) and Error(kTooManyDefaults) for ce.
Entailment entail(Semantics semantics, const DefaultTheory& theory, const KnowledgeBase& kb,
                  const Query& query);

Interval entail0(const DefaultTheory& theory, const KnowledgeBase& kb, const Query& query);
Interval entail1(const DefaultTheory& theory, const KnowledgeBase& kb, const Query& query);
Interval entail_z(const DefaultTheory& theory, const KnowledgeBase& kb, const Query& query);
Interval entail_lex(const DefaultTheory& theory, const KnowledgeBase& kb, const Query& query);
Interval entail_ce(const DefaultTheory& theory, const KnowledgeBase& kb, const Query& query);

// Multi-line human-readable rendering of the diagnostics.
std::string describe(const Entailment& result, const DefaultTheory& theory);

}  // namespace probdef
