#include "probdef/zrank.hpp"

namespace probdef {

bool verifies_feasible(const Vocabulary& vocab, std::span<const ConditionalConstraint> strict,
                       std::span<const ConditionalConstraint> others,
                       const ConditionalConstraint& d) {
  ConstraintSystem sys;
  sys.vocab = vocab;
  sys.members.assign(strict.begin(), strict.end());
  sys.members.insert(sys.members.end(), others.begin(), others.end());
  sys.members.push_back(d);
  sys.pinned.push_back(d.antecedent);
  return satisfiable(sys);
}

bool tolerates(const Vocabulary& vocab, std::span<const ConditionalConstraint> others,
               const ConditionalConstraint& d, std::span<const ConditionalConstraint> strict) {
  return verifies_feasible(vocab, strict, others, d);
}

DefaultSet ZPartition::at_or_above(std::size_t j) const {
  DefaultSet out;
  for (std::size_t i = 0; i < rank.size(); ++i) {
    if (rank[i] >= j) out.push_back(i);
  }
  return out;
}

std::optional<ZPartition> z_partition(const DefaultTheory& theory, const Vocabulary& vocab) {
  const std::size_t n = theory.defaults.size();
  ZPartition zp;
  zp.rank.assign(n, 0);
  std::vector<bool> placed(n, false);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::vector<ConditionalConstraint> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (!placed[i]) rest.push_back(theory.defaults[i]);
    }
    DefaultSet stratum;
    for (std::size_t i = 0; i < n; ++i) {
      if (!placed[i] && tolerates(vocab, rest, theory.defaults[i], theory.strict)) {
        stratum.push_back(i);
      }
    }
    if (stratum.empty()) return std::nullopt;
    for (std::size_t i : stratum) {
      placed[i] = true;
      zp.rank[i] = zp.strata.size();
    }
    remaining -= stratum.size();
    zp.strata.push_back(std::move(stratum));
  }
  return zp;
}

bool sigma_consistent(const DefaultTheory& theory, const Vocabulary& vocab) {
  return z_partition(theory, vocab).has_value();
}

KappaValue kappa_z(const ConstraintSystem& formulas, const DefaultTheory& theory,
                   const ZPartition& partition) {
  // kappa(Pr) <= j iff Pr satisfies P and every default of rank >= j, so the
  // least satisfiable threshold is the minimum over the models of F.
  for (std::size_t j = 0; j <= partition.size(); ++j) {
    ConstraintSystem sys = formulas;
    sys.members.insert(sys.members.end(), theory.strict.begin(), theory.strict.end());
    for (std::size_t i : partition.at_or_above(j)) sys.members.push_back(theory.defaults[i]);
    if (satisfiable(sys)) return j;
  }
  return std::nullopt;
}

std::string describe(const ZPartition& partition, const DefaultTheory& theory) {
  std::string out = std::to_string(partition.size()) + " strata\n";
  for (std::size_t j = 0; j < partition.size(); ++j) {
    out += "stratum " + std::to_string(j) + ":";
    for (std::size_t i : partition.strata[j]) out += " " + theory.defaults[i].to_string();
    out += "\n";
  }
  return out;
}

}  // namespace probdef
