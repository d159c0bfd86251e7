#include "probdef/entail.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "probdef/error.hpp"

namespace probdef {

const char* to_string(Semantics semantics) {
  switch (semantics) {
    case Semantics::kZero:
      return "zero";
    case Semantics::kOne:
      return "one";
    case Semantics::kZ:
      return "z";
    case Semantics::kLex:
      return "lex";
    case Semantics::kCe:
      return "ce";
  }
  return "unknown";
}

std::optional<Semantics> parse_semantics(std::string_view tag) {
  if (tag == "zero") return Semantics::kZero;
  if (tag == "one") return Semantics::kOne;
  if (tag == "z") return Semantics::kZ;
  if (tag == "lex") return Semantics::kLex;
  if (tag == "ce") return Semantics::kCe;
  return std::nullopt;
}

DefaultSet to_default_set(DefaultMask mask) {
  DefaultSet out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

DefaultMask to_mask(const DefaultSet& set) {
  DefaultMask mask = 0;
  for (std::size_t i : set) mask |= DefaultMask{1} << i;
  return mask;
}

// ---------------------------------------------------------------------------
// Priority orders

PriorityOrder::PriorityOrder(std::size_t size,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : above_(size, 0) {
  for (const auto& [a, b] : pairs) {
    auto next = with(a, b);
    if (!next) throw std::invalid_argument("priority pairs contain a cycle");
    *this = std::move(*next);
  }
}

DefaultMask PriorityOrder::below(std::size_t b) const {
  DefaultMask mask = 0;
  for (std::size_t a = 0; a < above_.size(); ++a) {
    if (precedes(a, b)) mask |= DefaultMask{1} << a;
  }
  return mask;
}

std::optional<PriorityOrder> PriorityOrder::with(std::size_t a, std::size_t b) const {
  const DefaultMask gained = (DefaultMask{1} << b) | above_[b];
  if ((gained >> a) & 1u) return std::nullopt;
  PriorityOrder out = *this;
  for (std::size_t x = 0; x < above_.size(); ++x) {
    if (x == a || precedes(x, a)) out.above_[x] |= gained;
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> PriorityOrder::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < above_.size(); ++a) {
    for (std::size_t b = 0; b < above_.size(); ++b) {
      if (precedes(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool PriorityOrder::irreflexive() const {
  for (std::size_t a = 0; a < above_.size(); ++a) {
    if (precedes(a, a)) return false;
  }
  return true;
}

bool PriorityOrder::transitive() const {
  for (std::size_t a = 0; a < above_.size(); ++a) {
    for (std::size_t b : to_default_set(above_[a])) {
      if ((above_[b] & ~above_[a]) != 0) return false;
    }
  }
  return true;
}

namespace {

Vocabulary theory_vocab(const DefaultTheory& theory, const KnowledgeBase& kb) {
  return vocabulary_of(theory, kb, Query{});
}

std::vector<ConditionalConstraint> pick(const DefaultTheory& theory, DefaultMask mask) {
  std::vector<ConditionalConstraint> out;
  for (std::size_t i : to_default_set(mask)) out.push_back(theory.defaults[i]);
  return out;
}

DefaultMask all_defaults(const DefaultTheory& theory) {
  return theory.defaults.empty() ? 0 : (DefaultMask{1} << theory.defaults.size()) - 1;
}

// P, the evidence and the defaults in `mask`.
ConstraintSystem base_system(const Vocabulary& vocab, const DefaultTheory& theory,
                             const KnowledgeBase& kb, DefaultMask mask) {
  ConstraintSystem sys;
  sys.vocab = vocab;
  sys.members = theory.strict;
  sys.members.insert(sys.members.end(), kb.conjuncts.begin(), kb.conjuncts.end());
  for (auto& c : pick(theory, mask)) sys.members.push_back(std::move(c));
  return sys;
}

void check_priority_cap(const DefaultTheory& theory) {
  if (theory.defaults.size() > kMaxPriorityDefaults) {
    throw Error(ErrorKind::kTooManyDefaults,
                std::to_string(theory.defaults.size()) + " defaults exceed the cap of " +
                    std::to_string(kMaxPriorityDefaults));
  }
}

// All strict partial orders on n elements. Element k joins a poset on
// 0..k-1 with a down-closed set below it and an up-closed set above it.
void extend_posets(std::size_t k, std::size_t n, const PriorityOrder& order,
                   std::vector<PriorityOrder>& out) {
  if (k == n) {
    out.push_back(order);
    return;
  }
  const DefaultMask universe = (DefaultMask{1} << k) - 1;
  for (DefaultMask down = 0; down <= universe; ++down) {
    if ((down & ~universe) != 0) continue;
    bool down_closed = true;
    for (std::size_t x : to_default_set(down)) {
      if ((order.below(x) & ~down) != 0) {
        down_closed = false;
        break;
      }
    }
    if (!down_closed) continue;
    const DefaultMask rest = universe & ~down;
    // Iterate subsets of `rest` as the up-set.
    for (DefaultMask up = rest;; up = (up - 1) & rest) {
      bool ok = true;
      for (std::size_t y : to_default_set(up)) {
        if ((order.above(y) & ~up) != 0) {
          ok = false;
          break;
        }
      }
      for (std::size_t x : to_default_set(down)) {
        if (!ok) break;
        if ((order.above(x) & up) != up) ok = false;
      }
      if (ok) {
        PriorityOrder next = order;
        for (std::size_t x : to_default_set(down)) next = *next.with(x, k);
        for (std::size_t y : to_default_set(up)) next = *next.with(k, y);
        extend_posets(k + 1, n, next, out);
      }
      if (up == 0) break;
    }
  }
}

void search_generating(std::size_t idx,
                       const std::vector<std::pair<std::size_t, DefaultMask>>& conflicts,
                       const PriorityOrder& order, std::set<PriorityOrder>& out) {
  if (idx == conflicts.size()) {
    out.insert(order);
    return;
  }
  const auto& [d, members] = conflicts[idx];
  if ((order.below(d) & members) != 0) {
    search_generating(idx + 1, conflicts, order, out);
    return;
  }
  for (std::size_t witness : to_default_set(members)) {
    if (auto next = order.with(witness, d)) search_generating(idx + 1, conflicts, *next, out);
  }
}

Interval region_interval(const ConstraintSystem& sys, const Query& query) {
  return tight_consequence(sys, query);
}

}  // namespace

// ---------------------------------------------------------------------------
// Conflicts and admissibility

std::vector<std::vector<DefaultMask>> minimal_conflicts(const DefaultTheory& theory,
                                                        const Vocabulary& vocab) {
  const std::size_t n = theory.defaults.size();
  check_priority_cap(theory);
  const DefaultMask full = all_defaults(theory);
  std::vector<std::vector<DefaultMask>> out(n);
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<bool> conflict(std::size_t{full} + 1, false);
    for (DefaultMask m = 0; m <= full; ++m) {
      // Conflict is upward closed: any subset in conflict settles m.
      bool inherited = false;
      for (std::size_t i : to_default_set(m)) {
        if (conflict[m & ~(DefaultMask{1} << i)]) {
          inherited = true;
          break;
        }
      }
      conflict[m] = inherited ||
                    !verifies_feasible(vocab, theory.strict, pick(theory, m), theory.defaults[d]);
      if (conflict[m] && !inherited) out[d].push_back(m);
    }
  }
  return out;
}

bool admissible(const PriorityOrder& order,
                const std::vector<std::vector<DefaultMask>>& conflicts) {
  for (std::size_t d = 0; d < conflicts.size(); ++d) {
    const DefaultMask below = order.below(d);
    for (DefaultMask m : conflicts[d]) {
      if ((m & below) == 0) return false;
    }
  }
  return true;
}

std::vector<PriorityOrder> admissible_orders(const DefaultTheory& theory) {
  check_priority_cap(theory);
  const auto conflicts = minimal_conflicts(theory, theory_vocab(theory, {}));
  std::vector<PriorityOrder> all;
  extend_posets(0, theory.defaults.size(), PriorityOrder(theory.defaults.size()), all);
  std::vector<PriorityOrder> out;
  for (auto& order : all) {
    if (admissible(order, conflicts)) out.push_back(std::move(order));
  }
  return out;
}

std::vector<PriorityOrder> generating_orders(
    std::size_t default_count, const std::vector<std::vector<DefaultMask>>& conflicts) {
  std::vector<std::pair<std::size_t, DefaultMask>> flat;
  for (std::size_t d = 0; d < conflicts.size(); ++d) {
    for (DefaultMask m : conflicts[d]) flat.emplace_back(d, m);
  }
  std::set<PriorityOrder> found;
  search_generating(0, flat, PriorityOrder(default_count), found);
  return {found.begin(), found.end()};
}

bool preferable(DefaultMask better, DefaultMask worse, const PriorityOrder& order) {
  if (better == worse) return false;
  const DefaultMask compensators = worse & ~better;
  for (std::size_t d : to_default_set(better & ~worse)) {
    if ((order.above(d) & compensators) == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Violation sets

namespace {

std::vector<ViolationSet> achievable_in(const Vocabulary& vocab, const DefaultTheory& theory,
                                        const KnowledgeBase& kb) {
  const DefaultMask full = all_defaults(theory);
  std::vector<std::vector<ViolationBranch>> branches;
  for (const auto& d : theory.defaults) branches.push_back(violation_branch_rows(d, vocab));

  std::vector<ViolationSet> out;
  for (DefaultMask v = 0; v <= full; ++v) {
    const DefaultSet members = to_default_set(v);
    ConstraintSystem sys = base_system(vocab, theory, kb, full & ~v);
    ViolationSet result{v, {}};
    // Odometer over one branch per member.
    std::vector<std::size_t> choice(members.size(), 0);
    bool exhausted = std::any_of(members.begin(), members.end(),
                                 [&](std::size_t i) { return branches[i].empty(); });
    while (!exhausted) {
      ConstraintSystem trial = sys;
      std::vector<ViolationSide> sides;
      for (std::size_t k = 0; k < members.size(); ++k) {
        const ViolationBranch& b = branches[members[k]][choice[k]];
        trial.strict.insert(trial.strict.end(), b.rows.begin(), b.rows.end());
        sides.push_back(b.side);
      }
      if (satisfiable(trial)) result.assignments.push_back(std::move(sides));
      std::size_t k = 0;
      for (; k < members.size(); ++k) {
        if (++choice[k] < branches[members[k]].size()) break;
        choice[k] = 0;
      }
      exhausted = k == members.size();
    }
    if (!result.assignments.empty()) out.push_back(std::move(result));
  }
  return out;
}

std::vector<DefaultSet> lex_optimal_in(const Vocabulary& vocab, const DefaultTheory& theory,
                                       const KnowledgeBase& kb, const ZPartition& zp) {
  std::vector<DefaultMask> candidates{0};
  for (std::size_t level = zp.size(); level-- > 0;) {
    const DefaultSet& stratum = zp.strata[level];
    const DefaultMask stratum_mask = to_mask(stratum);
    for (std::size_t count = stratum.size() + 1; count-- > 0;) {
      std::set<DefaultMask> next;
      for (DefaultMask base : candidates) {
        // Subsets of the stratum with exactly `count` members.
        for (DefaultMask sub = stratum_mask;; sub = (sub - 1) & stratum_mask) {
          if (static_cast<std::size_t>(std::popcount(sub)) == count &&
              satisfiable(base_system(vocab, theory, kb, base | sub))) {
            next.insert(base | sub);
          }
          if (sub == 0) break;
        }
      }
      if (!next.empty()) {
        candidates.assign(next.begin(), next.end());
        break;
      }
    }
  }
  std::vector<DefaultSet> out;
  for (DefaultMask m : candidates) out.push_back(to_default_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ViolationSet> achievable_violation_sets(const DefaultTheory& theory,
                                                    const KnowledgeBase& kb) {
  check_priority_cap(theory);
  return achievable_in(theory_vocab(theory, kb), theory, kb);
}

std::vector<DefaultSet> lex_optimal_subsets(const DefaultTheory& theory, const KnowledgeBase& kb) {
  const Vocabulary vocab = theory_vocab(theory, kb);
  auto zp = z_partition(theory, vocab);
  if (!zp) throw Error(ErrorKind::kSigmaInconsistent, "lexicographic entailment");
  if (!satisfiable(base_system(vocab, theory, kb, 0))) return {};
  return lex_optimal_in(vocab, theory, kb, *zp);
}

// ---------------------------------------------------------------------------
// The five semantics

namespace {

bool is_point_evidence(const KnowledgeBase& kb) {
  if (kb.conjuncts.empty()) return true;
  if (kb.conjuncts.size() != 1) return false;
  const auto& c = kb.conjuncts.front();
  return c.lower == 1 && c.upper == 1 && c.antecedent.kind() == Formula::Kind::kTrue;
}

Region full_region(const DefaultTheory& theory, Interval interval) {
  return {to_default_set(all_defaults(theory)), {}, std::move(interval)};
}

Entailment run_zero(const Vocabulary& vocab, const DefaultTheory& theory,
                    const KnowledgeBase& kb, const Query& query) {
  Entailment out;
  out.semantics = Semantics::kZero;
  if (!is_point_evidence(kb)) {
    out.interval = Interval::undefined();
    return out;
  }
  Query conditioned = query;
  if (!kb.conjuncts.empty()) {
    conditioned.antecedent = Formula::conjunction(query.antecedent, kb.conjuncts[0].consequent);
  }
  ConstraintSystem sys = base_system(vocab, theory, KnowledgeBase{}, all_defaults(theory));
  Interval answer = tight_consequence(sys, conditioned);
  // An unsatisfiable P and D entail every constraint.
  if (answer.status == IntervalStatus::kUnsat) answer = Interval::vacuous();
  out.interval = answer;
  out.regions.push_back(full_region(theory, answer));
  return out;
}

Entailment run_one(const Vocabulary& vocab, const DefaultTheory& theory,
                   const KnowledgeBase& kb, const Query& query) {
  Entailment out;
  out.semantics = Semantics::kOne;
  Interval answer = tight_consequence(base_system(vocab, theory, kb, all_defaults(theory)), query);
  if (answer.status == IntervalStatus::kUnsat) answer = Interval::vacuous();
  out.interval = answer;
  out.regions.push_back(full_region(theory, answer));
  return out;
}

ZPartition require_partition(const Vocabulary& vocab, const DefaultTheory& theory,
                             Semantics semantics) {
  auto zp = z_partition(theory, vocab);
  if (!zp) {
    throw Error(ErrorKind::kSigmaInconsistent,
                std::string(to_string(semantics)) + "-entailment needs a sigma-consistent theory");
  }
  return *zp;
}

Entailment run_z(const Vocabulary& vocab, const DefaultTheory& theory, const KnowledgeBase& kb,
                 const Query& query) {
  Entailment out;
  out.semantics = Semantics::kZ;
  out.partition = require_partition(vocab, theory, Semantics::kZ);
  for (std::size_t j = 0; j <= out.partition->size(); ++j) {
    ConstraintSystem sys = base_system(vocab, theory, kb, to_mask(out.partition->at_or_above(j)));
    if (!satisfiable(sys)) continue;
    out.threshold = j;
    out.interval = tight_consequence(sys, query);
    out.regions.push_back({out.partition->at_or_above(j), {}, out.interval});
    return out;
  }
  out.interval = Interval::unsat();
  return out;
}

Entailment run_lex(const Vocabulary& vocab, const DefaultTheory& theory, const KnowledgeBase& kb,
                   const Query& query) {
  Entailment out;
  out.semantics = Semantics::kLex;
  out.partition = require_partition(vocab, theory, Semantics::kLex);
  if (!satisfiable(base_system(vocab, theory, kb, 0))) {
    out.interval = Interval::unsat();
    return out;
  }
  out.lex_subsets = lex_optimal_in(vocab, theory, kb, *out.partition);
  std::vector<Interval> parts;
  for (const auto& subset : out.lex_subsets) {
    Interval part = region_interval(base_system(vocab, theory, kb, to_mask(subset)), query);
    parts.push_back(part);
    out.regions.push_back({subset, {}, part});
  }
  out.interval = hull(parts);
  return out;
}

Entailment run_ce(const Vocabulary& vocab, const DefaultTheory& theory, const KnowledgeBase& kb,
                  const Query& query) {
  Entailment out;
  out.semantics = Semantics::kCe;
  check_priority_cap(theory);
  const auto conflicts = minimal_conflicts(theory, vocab);
  const auto orders = generating_orders(theory.defaults.size(), conflicts);
  if (orders.empty()) {
    throw Error(ErrorKind::kPrecInconsistent, "no priority ordering is admissible with the theory");
  }
  if (!satisfiable(base_system(vocab, theory, kb, 0))) {
    out.interval = Interval::unsat();
    return out;
  }
  const auto achievable = achievable_in(vocab, theory, kb);
  std::vector<bool> selected(achievable.size(), false);
  for (const auto& order : orders) {
    for (std::size_t i = 0; i < achievable.size(); ++i) {
      if (selected[i]) continue;
      const bool minimal = std::none_of(achievable.begin(), achievable.end(), [&](const auto& v) {
        return preferable(v.members, achievable[i].members, order);
      });
      if (minimal) selected[i] = true;
    }
  }

  const DefaultMask full = all_defaults(theory);
  std::vector<Interval> parts;
  for (std::size_t i = 0; i < achievable.size(); ++i) {
    if (!selected[i]) continue;
    const ViolationSet& v = achievable[i];
    out.selected.push_back(v);
    const DefaultSet members = to_default_set(v.members);
    for (const auto& sides : v.assignments) {
      ConstraintSystem sys = base_system(vocab, theory, kb, full & ~v.members);
      Region region{to_default_set(full & ~v.members), {}, {}};
      for (std::size_t k = 0; k < members.size(); ++k) {
        for (auto& branch : violation_branch_rows(theory.defaults[members[k]], vocab)) {
          if (branch.side != sides[k]) continue;
          sys.strict.insert(sys.strict.end(), branch.rows.begin(), branch.rows.end());
        }
        region.violated.emplace_back(members[k], sides[k]);
      }
      region.interval = region_interval(sys, query);
      parts.push_back(region.interval);
      out.regions.push_back(std::move(region));
    }
  }
  out.interval = hull(parts);
  return out;
}

}  // namespace

Entailment entail(Semantics semantics, const DefaultTheory& theory, const KnowledgeBase& kb,
                  const Query& query) {
  const Vocabulary vocab = vocabulary_of(theory, kb, query);
  switch (semantics) {
    case Semantics::kZero:
      return run_zero(vocab, theory, kb, query);
    case Semantics::kOne:
      return run_one(vocab, theory, kb, query);
    case Semantics::kZ:
      return run_z(vocab, theory, kb, query);
    case Semantics::kLex:
      return run_lex(vocab, theory, kb, query);
    case Semantics::kCe:
      return run_ce(vocab, theory, kb, query);
  }
  throw std::invalid_argument("unknown semantics");
}

Interval entail0(const DefaultTheory& theory, const KnowledgeBase& kb, const Query& query) {
  return entail(Semantics::kZero, theory, kb, query).interval;
}

Interval entail1(const DefaultTheory& theory, const KnowledgeBase& kb, const Query& query) {
  return entail(Semantics::kOne, theory, kb, query).interval;
}

Interval entail_z(const DefaultTheory& theory, const KnowledgeBase& kb, const Query& query) {
  return entail(Semantics::kZ, theory, kb, query).interval;
}

Interval entail_lex(const DefaultTheory& theory, const KnowledgeBase& kb, const Query& query) {
  return entail(Semantics::kLex, theory, kb, query).interval;
}

Interval entail_ce(const DefaultTheory& theory, const KnowledgeBase& kb, const Query& query) {
  return entail(Semantics::kCe, theory, kb, query).interval;
}

namespace {

std::string list_defaults(const DefaultSet& set, const DefaultTheory& theory) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ", ";
    out += theory.defaults[set[k]].to_string();
  }
  return out + "}";
}

}  // namespace

std::string describe(const Entailment& result, const DefaultTheory& theory) {
  std::string out;
  if (result.partition) out += "z-partition: " + describe(*result.partition, theory);
  if (result.threshold) out += "threshold j* = " + std::to_string(*result.threshold) + "\n";
  for (const auto& s : result.lex_subsets) {
    out += "lex-optimal subset: " + list_defaults(s, theory) + "\n";
  }
  for (const auto& v : result.selected) {
    out += "selected violation set: " + list_defaults(to_default_set(v.members), theory) + "\n";
  }
  for (const auto& r : result.regions) {
    out += "region: P + evidence + " + list_defaults(r.satisfied, theory);
    for (const auto& [i, side] : r.violated) {
      out += " violating " + theory.defaults[i].to_string() + " " + to_string(side);
    }
    out += " -> " + r.interval.to_string() + "\n";
  }
  return out;
}

}  // namespace probdef
