#include "probdef/probsat.hpp"

#include <algorithm>

namespace probdef {

const char* to_string(IntervalStatus status) {
  switch (status) {
    case IntervalStatus::kProper:
      return "proper";
    case IntervalStatus::kVacuous:
      return "vacuous";
    case IntervalStatus::kUnsat:
      return "unsat";
    case IntervalStatus::kUndefined:
      return "undefined";
  }
  return "unknown";
}

const char* to_string(ViolationSide side) { return side == ViolationSide::kLow ? "LOW" : "HIGH"; }

Interval Interval::proper(Rational lower, Rational upper) {
  return {IntervalStatus::kProper, std::move(lower), std::move(upper)};
}
Interval Interval::vacuous() { return {IntervalStatus::kVacuous, 1, 0}; }
Interval Interval::unsat() { return {IntervalStatus::kUnsat, 0, 0}; }
Interval Interval::undefined() { return {IntervalStatus::kUndefined, 0, 0}; }

std::string Interval::to_string() const {
  switch (status) {
    case IntervalStatus::kProper:
      return "[" + to_compact_string(lower) + ", " + to_compact_string(upper) + "]";
    case IntervalStatus::kVacuous:
      return "VACUOUS [1,0]";
    case IntervalStatus::kUnsat:
      return "UNSAT";
    case IntervalStatus::kUndefined:
      return "UNDEFINED";
  }
  return {};
}

bool operator==(const Interval& a, const Interval& b) {
  if (a.status != b.status) return false;
  return !a.is_proper() || (a.lower == b.lower && a.upper == b.upper);
}

Interval hull(std::span<const Interval> parts) {
  std::optional<Interval> out;
  for (const auto& part : parts) {
    if (!part.is_proper()) continue;
    if (!out) {
      out = part;
    } else {
      if (part.lower < out->lower) out->lower = part.lower;
      if (part.upper > out->upper) out->upper = part.upper;
    }
  }
  return out ? *out : Interval::vacuous();
}

bool contained_in(const Interval& inner, const Interval& outer) {
  if (!inner.has_bounds() || !outer.has_bounds()) return inner == outer;
  if (inner.status == IntervalStatus::kVacuous) return true;
  if (outer.status == IntervalStatus::kVacuous) return false;
  return outer.lower <= inner.lower && inner.upper <= outer.upper;
}

std::array<LinearRow, 2> linearize(const ConditionalConstraint& c, const Vocabulary& vocab) {
  const std::vector<bool> phi = truth_table(c.antecedent, vocab);
  const std::vector<bool> psi = truth_table(c.consequent, vocab);
  LinearRow low;
  LinearRow high;
  low.relation = Relation::kGreaterEqual;
  high.relation = Relation::kLessEqual;
  for (std::size_t w = 0; w < phi.size(); ++w) {
    if (!phi[w]) continue;
    const Rational hit = psi[w] ? Rational(1) : Rational(0);
    low.add(w, hit - c.lower);
    high.add(w, hit - c.upper);
  }
  return {std::move(low), std::move(high)};
}

namespace {

LinearRow mass_row(const std::vector<bool>& table, Relation relation, const Rational& rhs) {
  LinearRow row;
  row.relation = relation;
  row.rhs = rhs;
  for (std::size_t w = 0; w < table.size(); ++w) {
    if (table[w]) row.add(w, 1);
  }
  return row;
}

std::vector<bool> conj_table(const Formula& a, const Formula& b, const Vocabulary& vocab) {
  std::vector<bool> out = truth_table(a, vocab);
  const std::vector<bool> other = truth_table(b, vocab);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] && other[i];
  return out;
}

std::vector<LinearRow> normalized_rows(const ConstraintSystem& sys) {
  std::vector<LinearRow> rows = homogeneous_rows(sys);
  rows.push_back(mass_row(std::vector<bool>(sys.vocab.world_count(), true), Relation::kEqual, 1));
  return rows;
}

bool system_feasible(std::span<const LinearRow> rows, const ConstraintSystem& sys) {
  if (sys.strict.empty()) return feasible(rows, sys.vocab.world_count());
  return strictly_feasible(rows, sys.strict, sys.vocab.world_count());
}

Distribution normalize(std::vector<Rational> y) {
  Rational total = 0;
  for (const auto& v : y) total += v;
  for (auto& v : y) v /= total;
  return y;
}

}  // namespace

std::vector<LinearRow> homogeneous_rows(const ConstraintSystem& sys) {
  std::vector<LinearRow> rows;
  rows.reserve(2 * sys.members.size() + sys.pinned.size() + 1);
  for (const auto& c : sys.members) {
    auto [low, high] = linearize(c, sys.vocab);
    // A row with no coefficients is 0 >= 0 or 0 <= 0.
    if (!low.coefficients.empty()) rows.push_back(std::move(low));
    if (!high.coefficients.empty()) rows.push_back(std::move(high));
  }
  for (const auto& f : sys.pinned) {
    std::vector<bool> outside = truth_table(f, sys.vocab);
    outside.flip();
    rows.push_back(mass_row(outside, Relation::kEqual, 0));
  }
  return rows;
}

bool strictly_feasible(std::span<const LinearRow> weak, std::span<const StrictRow> strict,
                       std::size_t variable_count) {
  if (strict.empty()) return feasible(weak, variable_count);
  const std::size_t eps = variable_count;
  LinearProgram lp;
  lp.variable_count = variable_count + 1;
  lp.rows.assign(weak.begin(), weak.end());
  for (const auto& s : strict) {
    LinearRow row;
    row.coefficients = s.coefficients;
    row.add(eps, -1);
    row.relation = Relation::kGreaterEqual;
    row.rhs = 0;
    lp.rows.push_back(std::move(row));
  }
  LinearRow cap;
  cap.add(eps, 1);
  cap.relation = Relation::kLessEqual;
  cap.rhs = 1;
  lp.rows.push_back(std::move(cap));
  lp.objective[eps] = 1;
  lp.sense = Sense::kMaximize;
  const LpOutcome out = solve(lp);
  return out.status == LpStatus::kOptimal && out.value > 0;
}

bool satisfiable(const ConstraintSystem& sys) {
  const std::vector<LinearRow> rows = normalized_rows(sys);
  return system_feasible(rows, sys);
}

std::optional<Distribution> find_model(const ConstraintSystem& sys) {
  LinearProgram lp;
  lp.variable_count = sys.vocab.world_count();
  lp.rows = normalized_rows(sys);
  const LpOutcome out = solve(lp);
  if (out.status != LpStatus::kOptimal) return std::nullopt;
  return out.witness;
}

TightConsequence tight_consequence_with_witnesses(const ConstraintSystem& sys,
                                                  const Query& query) {
  TightConsequence result;
  if (!satisfiable(sys)) {
    result.interval = Interval::unsat();
    return result;
  }
  const std::vector<bool> phi = truth_table(query.antecedent, sys.vocab);
  const std::vector<bool> psi_phi = conj_table(query.consequent, query.antecedent, sys.vocab);

  // Scaled variables y = Pr / Pr(phi): homogeneous rows plus sum_{phi} y = 1.
  LinearProgram lp;
  lp.variable_count = sys.vocab.world_count();
  lp.rows = homogeneous_rows(sys);
  lp.rows.push_back(mass_row(phi, Relation::kEqual, 1));
  if (!system_feasible(lp.rows, sys)) {
    result.interval = Interval::vacuous();
    return result;
  }
  for (std::size_t w = 0; w < psi_phi.size(); ++w) {
    if (psi_phi[w]) lp.objective[w] = 1;
  }

  lp.sense = Sense::kMinimize;
  LpOutcome low = solve(lp);
  lp.sense = Sense::kMaximize;
  LpOutcome high = solve(lp);
  // The scaled region is nonempty and the objective lies in [0, 1].
  result.interval = Interval::proper(low.value, high.value);
  if (sys.strict.empty()) {
    result.lower_witness = normalize(std::move(low.witness));
    result.upper_witness = normalize(std::move(high.witness));
  }
  return result;
}

Interval tight_consequence(const ConstraintSystem& sys, const Query& query) {
  return tight_consequence_with_witnesses(sys, query).interval;
}

std::vector<ViolationBranch> violation_branch_rows(const ConditionalConstraint& c,
                                                   const Vocabulary& vocab) {
  const std::vector<bool> phi = truth_table(c.antecedent, vocab);
  const std::vector<bool> psi = truth_table(c.consequent, vocab);
  StrictRow positive;
  for (std::size_t w = 0; w < phi.size(); ++w) {
    if (phi[w]) positive.coefficients[w] = 1;
  }
  auto bound_row = [&](const Rational& bound, int sign) {
    // sign * (Pr(psi & phi) - bound * Pr(phi)) > 0
    StrictRow row;
    for (std::size_t w = 0; w < phi.size(); ++w) {
      if (!phi[w]) continue;
      Rational coef = sign * ((psi[w] ? Rational(1) : Rational(0)) - bound);
      if (coef != 0) row.coefficients[w] = std::move(coef);
    }
    return row;
  };
  std::vector<ViolationBranch> out;
  if (c.lower > 0) out.push_back({ViolationSide::kLow, {positive, bound_row(c.lower, -1)}});
  if (c.upper < 1) out.push_back({ViolationSide::kHigh, {positive, bound_row(c.upper, 1)}});
  return out;
}

Rational probability(const Distribution& pr, const Formula& f, const Vocabulary& vocab) {
  Rational sum = 0;
  for (const auto& w : enumerate_worlds(vocab)) {
    if (evaluate(w, f, vocab)) sum += pr[w.index()];
  }
  return sum;
}

bool holds(const Distribution& pr, const ConditionalConstraint& c, const Vocabulary& vocab) {
  const Rational p_phi = probability(pr, c.antecedent, vocab);
  if (p_phi == 0) return true;
  const Rational ratio =
      probability(pr, Formula::conjunction(c.consequent, c.antecedent), vocab) / p_phi;
  return c.lower <= ratio && ratio <= c.upper;
}

}  // namespace probdef
