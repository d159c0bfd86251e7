#pragma once

#include <optional>
#include <random>
#include <vector>

#include "probdef/ratlp.hpp"

namespace probdef::testing {

// Brute-force LP over a handful of variables. The feasible set lies in the
// nonnegative orthant and is therefore pointed: it is empty iff it has no
// vertex, and an objective is unbounded iff some extreme ray improves it.
// Vertices and rays are found by solving every square subsystem of tight
// constraints with Gaussian elimination.
class VertexOracle {
 public:
  explicit VertexOracle(const LinearProgram& lp) : lp_(lp), n_(lp.variable_count) {
    for (const auto& row : lp.rows) {
      std::vector<Rational> a(n_);
      for (const auto& [j, c] : row.coefficients) a[j] = c;
      planes_.push_back({a, row.rhs});
    }
    for (std::size_t j = 0; j < n_; ++j) {
      std::vector<Rational> a(n_);
      a[j] = 1;
      planes_.push_back({a, 0});
    }
  }

  LpOutcome solve() const {
    LpOutcome out;
    std::vector<std::size_t> pick;
    bool found = false;
    Rational best;
    std::vector<Rational> best_x;
    for_each_subset(n_, pick, [&](const std::vector<std::size_t>& chosen) {
      auto x = solve_square(chosen, false);
      if (!x || !feasible_point(*x)) return;
      const Rational v = objective(*x);
      if (!found || better(v, best)) {
        found = true;
        best = v;
        best_x = *x;
      }
    });
    if (!found) return out;
    if (improving_ray()) {
      out.status = LpStatus::kUnbounded;
      return out;
    }
    out.status = LpStatus::kOptimal;
    out.value = best;
    out.witness = best_x;
    return out;
  }

 private:
  struct Plane {
    std::vector<Rational> a;
    Rational b;
  };

  template <typename F>
  void for_each_subset(std::size_t k, std::vector<std::size_t>& pick, F&& f,
                       std::size_t start = 0) const {
    if (pick.size() == k) {
      f(pick);
      return;
    }
    for (std::size_t i = start; i < planes_.size(); ++i) {
      pick.push_back(i);
      for_each_subset(k, pick, f, i + 1);
      pick.pop_back();
    }
  }

  // Solves the chosen planes as equalities (homogeneous and with an extra
  // sum-to-one row when `ray`); nullopt unless the solution is unique.
  std::optional<std::vector<Rational>> solve_square(const std::vector<std::size_t>& chosen,
                                                    bool ray) const {
    std::vector<std::vector<Rational>> m;
    for (std::size_t i : chosen) {
      auto row = planes_[i].a;
      row.push_back(ray ? Rational(0) : planes_[i].b);
      m.push_back(row);
    }
    if (ray) {
      std::vector<Rational> row(n_ + 1, Rational(1));
      m.push_back(row);
    }
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t pivot = col;
      while (pivot < n_ && m[pivot][col] == 0) ++pivot;
      if (pivot == n_) return std::nullopt;
      std::swap(m[pivot], m[col]);
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == col || m[r][col] == 0) continue;
        const Rational f = m[r][col] / m[col][col];
        for (std::size_t c = col; c <= n_; ++c) m[r][c] -= f * m[col][c];
      }
    }
    std::vector<Rational> x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = m[j][n_] / m[j][j];
    return x;
  }

  bool feasible_point(const std::vector<Rational>& x) const {
    for (const auto& v : x) {
      if (v < 0) return false;
    }
    for (const auto& row : lp_.rows) {
      if (!row.satisfied_by(x)) return false;
    }
    return true;
  }

  bool feasible_ray(const std::vector<Rational>& d) const {
    for (const auto& v : d) {
      if (v < 0) return false;
    }
    for (const auto& row : lp_.rows) {
      LinearRow h = row;
      h.rhs = 0;
      if (!h.satisfied_by(d)) return false;
    }
    return true;
  }

  bool improving_ray() const {
    bool found = false;
    std::vector<std::size_t> pick;
    for_each_subset(n_ - 1, pick, [&](const std::vector<std::size_t>& chosen) {
      if (found) return;
      auto d = solve_square(chosen, true);
      if (d && feasible_ray(*d) && better(objective(*d), Rational(0))) found = true;
    });
    return found;
  }

  Rational objective(const std::vector<Rational>& x) const {
    Rational v;
    for (const auto& [j, c] : lp_.objective) v += c * x[j];
    return v;
  }
  bool better(const Rational& a, const Rational& b) const {
    return lp_.sense == Sense::kMaximize ? a > b : a < b;
  }

  const LinearProgram& lp_;
  std::size_t n_;
  std::vector<Plane> planes_;
};

// At most 3 variables and 5 rows with small integer data.
inline LinearProgram random_small_lp(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  LinearProgram lp;
  lp.variable_count = static_cast<std::size_t>(pick(1, 3));
  const int rows = pick(0, 5);
  for (int r = 0; r < rows; ++r) {
    LinearRow row;
    for (std::size_t j = 0; j < lp.variable_count; ++j) row.add(j, Rational(pick(-3, 3)));
    const int rel = pick(0, 4);
    row.relation = rel <= 2 ? Relation::kLessEqual
                            : (rel == 3 ? Relation::kGreaterEqual : Relation::kEqual);
    row.rhs = pick(-2, 6);
    lp.rows.push_back(row);
  }
  for (std::size_t j = 0; j < lp.variable_count; ++j) {
    const int c = pick(-3, 3);
    if (c != 0) lp.objective[j] = c;
  }
  lp.sense = pick(0, 1) == 0 ? Sense::kMinimize : Sense::kMaximize;
  return lp;
}

}  // namespace probdef::testing
