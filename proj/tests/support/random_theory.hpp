#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "probdef/constraints.hpp"

namespace probdef::testing {

struct RandomCase {
  DefaultTheory theory;
  KnowledgeBase kb;
  Query query;
};

// Small theories: at most 4 atoms, at most 4 defaults, bounds on a coarse
// grid so that conflicts and exact ties occur often.
class TheoryGenerator {
 public:
  explicit TheoryGenerator(unsigned seed) : rng_(seed) {}

  RandomCase next() {
    const std::size_t atom_count = pick(2, 4);
    atoms_.assign(kPool.begin(), kPool.begin() + static_cast<std::ptrdiff_t>(atom_count));
    RandomCase out;
    for (std::size_t i = 0, n = pick(0, 1); i < n; ++i) {
      out.theory.strict.push_back(
          strict_constraint(literal(), literal(), Rational(1), Rational(1)));
    }
    for (std::size_t i = 0, n = pick(1, 4); i < n; ++i) {
      auto [lo, hi] = bounds();
      out.theory.defaults.push_back(default_constraint(consequent(), antecedent(), lo, hi));
    }
    for (std::size_t i = 0, n = pick(1, 2); i < n; ++i) {
      Rational lo = pick(0, 2) == 0 ? grid(pick(1, 3)) : Rational(1);
      out.kb.conjuncts.push_back(strict_constraint(literal(), Formula::truth(), lo, Rational(1)));
    }
    out.query.consequent = literal();
    out.query.antecedent = pick(0, 2) == 0 ? literal() : Formula::truth();
    return out;
  }

  std::mt19937& rng() { return rng_; }

 private:
  static constexpr std::array<const char*, 4> kPool{"a", "b", "c", "d"};

  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  static Rational grid(std::size_t k) {
    Rational r(static_cast<long>(k), 4);
    r.canonicalize();
    return r;
  }

  std::pair<Rational, Rational> bounds() {
    std::size_t a = pick(0, 4);
    std::size_t b = pick(0, 4);
    if (a > b) std::swap(a, b);
    return {grid(a), grid(b)};
  }

  Formula literal() {
    Formula atom = Formula::atom(atoms_[pick(0, atoms_.size() - 1)]);
    return pick(0, 3) == 0 ? Formula::negation(atom) : atom;
  }
  Formula consequent() {
    return pick(0, 4) == 0 ? Formula::conjunction(literal(), literal()) : literal();
  }
  Formula antecedent() {
    switch (pick(0, 5)) {
      case 0:
        return Formula::truth();
      case 1:
        return Formula::conjunction(literal(), literal());
      default:
        return literal();
    }
  }

  std::mt19937 rng_;
  std::vector<std::string> atoms_;
};

}  // namespace probdef::testing
