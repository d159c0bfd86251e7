#include "probdef/ratlp.hpp"

#include <cassert>
#include <optional>

namespace probdef {

void LinearRow::add(std::size_t var, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coefficients.try_emplace(var, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coefficients.erase(it);
  }
}

Rational LinearRow::activity(std::span<const Rational> x) const {
  Rational sum = 0;
  for (const auto& [var, coef] : coefficients) sum += coef * x[var];
  return sum;
}

bool LinearRow::satisfied_by(std::span<const Rational> x) const {
  const Rational lhs = activity(x);
  switch (relation) {
    case Relation::kLessEqual:
      return lhs <= rhs;
    case Relation::kEqual:
      return lhs == rhs;
    case Relation::kGreaterEqual:
      return lhs >= rhs;
  }
  return false;
}

namespace {

// Dense simplex tableau. Column `width - 1` of every row holds the right-hand
// side; `cost` holds reduced costs with the negated objective value last.
class Tableau {
 public:
  Tableau(const LinearProgram& lp);

  // Phase one; false when the rows are infeasible.
  bool find_feasible_basis();
  // Phase two on the original objective (always minimized internally).
  bool optimize(const std::vector<Rational>& costs);

  std::vector<Rational> point() const;

 private:
  enum class Step { kOptimal, kUnbounded };

  void pivot(std::size_t row, std::size_t col);
  void price(const std::vector<Rational>& costs);
  Step run(std::size_t allowed_columns);
  void drop_artificials();

  std::size_t structural_;
  std::size_t artificial_begin_ = 0;
  std::size_t width_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
};

Tableau::Tableau(const LinearProgram& lp) : structural_(lp.variable_count) {
  const std::size_t m = lp.rows.size();
  std::size_t slacks = 0;
  std::size_t artificials = 0;
  std::vector<Relation> relation(m);
  std::vector<bool> flipped(m);
  for (std::size_t i = 0; i < m; ++i) {
    relation[i] = lp.rows[i].relation;
    flipped[i] = lp.rows[i].rhs < 0;
    if (flipped[i] && relation[i] != Relation::kEqual) {
      relation[i] = relation[i] == Relation::kLessEqual ? Relation::kGreaterEqual
                                                        : Relation::kLessEqual;
    }
    if (relation[i] != Relation::kEqual) ++slacks;
    if (relation[i] != Relation::kLessEqual) ++artificials;
  }
  artificial_begin_ = structural_ + slacks;
  width_ = artificial_begin_ + artificials + 1;

  rows_.assign(m, std::vector<Rational>(width_));
  basis_.assign(m, 0);
  std::size_t next_slack = structural_;
  std::size_t next_artificial = artificial_begin_;
  for (std::size_t i = 0; i < m; ++i) {
    const LinearRow& src = lp.rows[i];
    const int sign = flipped[i] ? -1 : 1;
    auto& row = rows_[i];
    for (const auto& [var, coef] : src.coefficients) {
      assert(var < structural_);
      row[var] = sign * coef;
    }
    row[width_ - 1] = sign * src.rhs;
    switch (relation[i]) {
      case Relation::kLessEqual:
        row[next_slack] = 1;
        basis_[i] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        row[next_slack++] = -1;
        row[next_artificial] = 1;
        basis_[i] = next_artificial++;
        break;
      case Relation::kEqual:
        row[next_artificial] = 1;
        basis_[i] = next_artificial++;
        break;
    }
  }
}

void Tableau::pivot(std::size_t r, std::size_t c) {
  auto& prow = rows_[r];
  const Rational inv = 1 / prow[c];
  for (auto& v : prow) {
    if (v != 0) v *= inv;
  }
  auto eliminate = [&](std::vector<Rational>& row) {
    if (row[c] == 0) return;
    const Rational factor = row[c];
    for (std::size_t j = 0; j < width_; ++j) {
      if (prow[j] != 0) row[j] -= factor * prow[j];
    }
  };
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i != r) eliminate(rows_[i]);
  }
  eliminate(cost_);
  basis_[r] = c;
}

void Tableau::price(const std::vector<Rational>& costs) {
  cost_ = costs;
  cost_.resize(width_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational cb = cost_[basis_[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < width_; ++j) {
      if (rows_[i][j] != 0) cost_[j] -= cb * rows_[i][j];
    }
  }
}

// Bland's rule: lowest-index improving column, ties in the ratio test broken
// by the lowest basic variable index. Guarantees termination.
Tableau::Step Tableau::run(std::size_t allowed_columns) {
  const std::size_t rhs = width_ - 1;
  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < allowed_columns; ++j) {
      if (cost_[j] < 0) {
        entering = j;
        break;
      }
    }
    if (!entering) return Step::kOptimal;
    const std::size_t c = *entering;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][c] <= 0) continue;
      Rational ratio = rows_[i][rhs] / rows_[i][c];
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    if (!leaving) return Step::kUnbounded;
    pivot(*leaving, c);
  }
}

void Tableau::drop_artificials() {
  for (std::size_t i = 0; i < rows_.size();) {
    if (basis_[i] < artificial_begin_) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < artificial_begin_; ++j) {
      if (rows_[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      pivot(i, *col);
      ++i;
    } else {
      // Redundant row: every non-artificial entry is zero.
      rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
      basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
}

bool Tableau::find_feasible_basis() {
  std::vector<Rational> phase_one(width_);
  for (std::size_t j = artificial_begin_; j + 1 < width_; ++j) phase_one[j] = 1;
  price(phase_one);
  run(width_ - 1);  // bounded below by zero, never unbounded
  if (-cost_[width_ - 1] > 0) return false;
  drop_artificials();
  return true;
}

bool Tableau::optimize(const std::vector<Rational>& costs) {
  price(costs);
  return run(artificial_begin_) == Step::kOptimal;
}

std::vector<Rational> Tableau::point() const {
  std::vector<Rational> x(structural_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (basis_[i] < structural_) x[basis_[i]] = rows_[i][width_ - 1];
  }
  return x;
}

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
  Tableau tableau(lp);
  LpOutcome out;
  if (!tableau.find_feasible_basis()) {
    out.status = LpStatus::kInfeasible;
    return out;
  }
  std::vector<Rational> costs(lp.variable_count);
  for (const auto& [var, coef] : lp.objective) {
    costs[var] = lp.sense == Sense::kMaximize ? Rational(-coef) : coef;
  }
  if (!tableau.optimize(costs)) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.witness = tableau.point();
  out.value = 0;
  for (const auto& [var, coef] : lp.objective) out.value += coef * out.witness[var];
  return out;
}

bool feasible(std::span<const LinearRow> rows, std::size_t variable_count) {
  LinearProgram lp;
  lp.variable_count = variable_count;
  lp.rows.assign(rows.begin(), rows.end());
  return solve(lp).status != LpStatus::kInfeasible;
}

}  // namespace probdef
