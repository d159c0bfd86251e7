#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "probdef/constraints.hpp"
#include "probdef/formula.hpp"
#include "probdef/ratlp.hpp"

namespace probdef {

// Homogeneous strict inequality over world variables: sum_j c_j * y_j > 0.
struct StrictRow {
  std::map<std::size_t, Rational> coefficients;
};

// A probability function over the worlds of a vocabulary, indexed by world.
using Distribution = std::vector<Rational>;

// Conjunction of conditional constraints, optionally with formulas pinned to
// probability one and strict homogeneous rows. Strict and defeasible members
// are treated alike: truth in a distribution does not distinguish them.
struct ConstraintSystem {
  Vocabulary vocab;
  std::vector<ConditionalConstraint> members;
  std::vector<Formula> pinned;
  std::vector<StrictRow> strict;
};

enum class IntervalStatus { kProper, kVacuous, kUnsat, kUndefined };

const char* to_string(IntervalStatus status);

// Tight answer. Vacuous answers carry the [1,0] convention (no model gives the
// antecedent positive probability); unsat and undefined carry no bounds.
struct Interval {
  IntervalStatus status = IntervalStatus::kUnsat;
  Rational lower;
  Rational upper;

  static Interval proper(Rational lower, Rational upper);
  static Interval vacuous();
  static Interval unsat();
  static Interval undefined();

  bool is_proper() const { return status == IntervalStatus::kProper; }
  bool has_bounds() const {
    return status == IntervalStatus::kProper || status == IntervalStatus::kVacuous;
  }

  std::string to_string() const;
  friend bool operator==(const Interval& a, const Interval& b);
};

// Convex hull of the proper members; vacuous when there are none.
Interval hull(std::span<const Interval> parts);

// Interval containment between results over nested model classes. A vacuous
// inner interval (empty model class) is contained in any bounded interval.
bool contained_in(const Interval& inner, const Interval& outer);

// Encodes l*Pr(phi) <= Pr(psi & phi) <= u*Pr(phi) as two homogeneous rows
// over world variables: {lower row (>= 0), upper row (<= 0)}.
std::array<LinearRow, 2> linearize(const ConditionalConstraint& c, const Vocabulary& vocab);

// Weak rows of the system in unnormalized world variables (no sum-to-one row).
std::vector<LinearRow> homogeneous_rows(const ConstraintSystem& sys);

// Single-slack test: maximize eps subject to `weak` and every strict row
// shifted to `expr >= eps`, eps <= 1; true iff the optimum is positive.
bool strictly_feasible(std::span<const LinearRow> weak, std::span<const StrictRow> strict,
                       std::size_t variable_count);

bool satisfiable(const ConstraintSystem& sys);

// A model of the system; only weak systems are supported.
std::optional<Distribution> find_model(const ConstraintSystem& sys);

// Tight bounds together with models attaining them. Witnesses are filled for
// proper answers over systems without strict rows.
struct TightConsequence {
  Interval interval;
  std::optional<Distribution> lower_witness;
  std::optional<Distribution> upper_witness;
};

// Exact [inf, sup] of Pr(psi|phi) over the models with Pr(phi) > 0. The ratio
// is linearized by normalizing Pr(phi) to one. For systems with strict rows
// the bounds are taken over the closure of the strict region.
TightConsequence tight_consequence_with_witnesses(const ConstraintSystem& sys,
                                                  const Query& query);
Interval tight_consequence(const ConstraintSystem& sys, const Query& query);

enum class ViolationSide { kLow, kHigh };

const char* to_string(ViolationSide side);

// One of the two ways a distribution can falsify (psi|phi)[l,u]:
// LOW:  Pr(phi) > 0 and Pr(psi & phi) < l * Pr(phi)
// HIGH: Pr(phi) > 0 and Pr(psi & phi) > u * Pr(phi)
struct ViolationBranch {
  ViolationSide side;
  std::vector<StrictRow> rows;
};

// Omits LOW when l = 0 and HIGH when u = 1.
std::vector<ViolationBranch> violation_branch_rows(const ConditionalConstraint& c,
                                                   const Vocabulary& vocab);

// Direct evaluation of the truth definition, independent of linearize().
Rational probability(const Distribution& pr, const Formula& f, const Vocabulary& vocab);
bool holds(const Distribution& pr, const ConditionalConstraint& c, const Vocabulary& vocab);

}  // namespace probdef
