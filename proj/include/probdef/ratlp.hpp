#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "probdef/rational.hpp"

namespace probdef {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

// sum_j coefficients[j] * x_j  (relation)  rhs
struct LinearRow {
  std::map<std::size_t, Rational> coefficients;
  Relation relation = Relation::kEqual;
  Rational rhs;

  // Accumulates into an existing coefficient; zero results are dropped.
  void add(std::size_t var, const Rational& coefficient);
  Rational activity(std::span<const Rational> x) const;
  bool satisfied_by(std::span<const Rational> x) const;
};

enum class Sense { kMinimize, kMaximize };

// Linear program over nonnegative variables x_0 .. x_{n-1}.
struct LinearProgram {
  std::size_t variable_count = 0;
  std::vector<LinearRow> rows;
  std::map<std::size_t, Rational> objective;
  Sense sense = Sense::kMinimize;
};

enum class LpStatus { kInfeasible, kUnbounded, kOptimal };

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;                // optimal objective value
  std::vector<Rational> witness;  // optimal point, size variable_count
};

// Exact two-phase primal simplex on a dense tableau with Bland's rule.
LpOutcome solve(const LinearProgram& lp);

// True iff the rows admit a nonnegative rational solution.
bool feasible(std::span<const LinearRow> rows, std::size_t variable_count);

}  // namespace probdef
