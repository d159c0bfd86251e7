#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "probdef/constraints.hpp"
#include "probdef/probsat.hpp"

namespace probdef {

// Indices into DefaultTheory::defaults.
using DefaultSet = std::vector<std::size_t>;

// True iff P together with the defaults `others` and `d` has a model that
// gives d's antecedent probability one.
bool verifies_feasible(const Vocabulary& vocab, std::span<const ConditionalConstraint> strict,
                       std::span<const ConditionalConstraint> others,
                       const ConditionalConstraint& d);

// `others` tolerates `d` under `strict`.
bool tolerates(const Vocabulary& vocab, std::span<const ConditionalConstraint> others,
               const ConditionalConstraint& d, std::span<const ConditionalConstraint> strict);

// Ordered strata (D_0, ..., D_k) of the defaults, each listed in insertion
// order, plus the rank of every default.
struct ZPartition {
  std::vector<DefaultSet> strata;
  std::vector<std::size_t> rank;

  std::size_t size() const { return strata.size(); }
  // Defaults of rank >= j, ascending by index; empty for j >= size().
  DefaultSet at_or_above(std::size_t j) const;
};

// Iterated tolerance; nullopt when some round tolerates nothing (the theory
// is sigma-inconsistent).
std::optional<ZPartition> z_partition(const DefaultTheory& theory, const Vocabulary& vocab);

bool sigma_consistent(const DefaultTheory& theory, const Vocabulary& vocab);

// Value of the induced ranking on a set of formulas; nullopt is infinity.
using KappaValue = std::optional<std::size_t>;

// Smallest j in 0..k+1 such that F, P and the defaults of rank >= j are
// jointly satisfiable. `formulas` may carry pinned formulas and strict rows;
// its vocabulary is used for every check.
KappaValue kappa_z(const ConstraintSystem& formulas, const DefaultTheory& theory,
                   const ZPartition& partition);

std::string describe(const ZPartition& partition, const DefaultTheory& theory);

}  // namespace probdef
