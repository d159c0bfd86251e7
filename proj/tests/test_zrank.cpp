#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "probdef/zrank.hpp"
#include "support/fixtures.hpp"
#include "support/admissibility.hpp"
#include "support/random_theory.hpp"

using namespace probdef;
using namespace probdef::testing;

namespace {

std::vector<std::set<std::string>> strata_text(const ZPartition& zp, const DefaultTheory& t) {
  std::vector<std::set<std::string>> out;
  for (const auto& s : zp.strata) {
    std::set<std::string> names;
    for (auto i : s) names.insert(t.defaults[i].to_string());
    out.push_back(names);
  }
  return out;
}

ConstraintSystem formulas(const DefaultTheory& t, const char* evidence) {
  const auto e = kb(evidence);
  return ConstraintSystem{vocabulary_of(t, e, {}), e.conjuncts, {}, {}};
}

}  // namespace

TEST_CASE("verifies_feasible examples") {
  const auto t2 = theory("t2");
  const auto v = vocabulary_of(t2, {}, {});
  CHECK(verifies_feasible(v, t2.strict, t2.defaults,
                          t2.defaults[default_index(t2, "(legs || bird)[19/20,1]")]));
  CHECK_FALSE(verifies_feasible(v, t2.strict, t2.defaults,
                                t2.defaults[default_index(t2, "(fly || penguin)[0,1/20]")]));
  const auto d = default_constraint(Formula::atom("a"), Formula::truth(), 1, 1);
  CHECK(verifies_feasible(Vocabulary(std::vector<std::string>{"a"}), {}, {}, d));
  CHECK(tolerates(v, t2.defaults, t2.defaults[0], t2.strict));
}

TEST_CASE("z_partition examples") {
  const auto t2 = theory("t2");
  const auto zp = z_partition(t2, vocabulary_of(t2, {}, {}));
  REQUIRE(zp);
  const std::vector<std::set<std::string>> expected{
      {"(legs || bird)[19/20,1]", "(fly || bird)[9/10,19/20]"}, {"(fly || penguin)[0,1/20]"}};
  CHECK(strata_text(*zp, t2) == expected);
  CHECK(zp->rank == std::vector<std::size_t>{0, 0, 1});
  CHECK(zp->at_or_above(1) == DefaultSet{2});
  CHECK(zp->at_or_above(2).empty());

  const DefaultTheory none;
  const auto empty = z_partition(none, {});
  REQUIRE(empty);
  CHECK(empty->size() == 0);

  const auto conflict = theory("two_point_conflict");
  CHECK_FALSE(z_partition(conflict, vocabulary_of(conflict, {}, {})));
}

TEST_CASE("sigma_consistent") {
  for (const char* name : {"t1", "t2", "t3", "t4", "t5", "penguin_triangle", "empty"}) {
    CAPTURE(name);
    const auto t = theory(name);
    CHECK(sigma_consistent(t, vocabulary_of(t, {}, {})));
  }
  const auto conflict = theory("two_point_conflict");
  CHECK_FALSE(sigma_consistent(conflict, vocabulary_of(conflict, {}, {})));
}

TEST_CASE("kappa_z examples") {
  const auto t2 = theory("t2");
  const auto zp = *z_partition(t2, vocabulary_of(t2, {}, {}));
  CHECK(kappa_z(formulas(t2, kBird), t2, zp) == KappaValue(0));
  CHECK(kappa_z(formulas(t2, kPenguin), t2, zp) == KappaValue(1));
  CHECK_FALSE(kappa_z(formulas(t2, "(penguin & !bird|true)[1,1]"), t2, zp).has_value());
}

TEST_CASE("describe") {
  const auto t2 = theory("t2");
  const auto zp = *z_partition(t2, vocabulary_of(t2, {}, {}));
  CHECK(describe(zp, t2) ==
        "2 strata\nstratum 0: (legs || bird)[19/20,1] (fly || bird)[9/10,19/20]\n"
        "stratum 1: (fly || penguin)[0,1/20]\n");
  CHECK(describe(ZPartition{}, DefaultTheory{}) == "0 strata\n");
}

TEST_CASE("z_partition is independent of input order") {
  TheoryGenerator gen(3);
  std::mt19937 rng(4);
  int consistent = 0;
  for (int trial = 0; trial < 160; ++trial) {
    const auto c = gen.next();
    const auto v = vocabulary_of(c.theory, {}, {});
    const auto zp = z_partition(c.theory, v);
    auto shuffled = c.theory;
    std::shuffle(shuffled.defaults.begin(), shuffled.defaults.end(), rng);
    const auto again = z_partition(shuffled, v);
    REQUIRE(zp.has_value() == again.has_value());
    if (!zp) continue;
    ++consistent;
    auto as_multisets = [](const ZPartition& p, const DefaultTheory& t) {
      std::vector<std::multiset<std::string>> out;
      for (const auto& s : p.strata) {
        std::multiset<std::string> names;
        for (auto i : s) names.insert(t.defaults[i].to_string());
        out.push_back(names);
      }
      return out;
    };
    CHECK(as_multisets(*zp, c.theory) == as_multisets(*again, shuffled));
  }
  CHECK(consistent > 50);
}

TEST_CASE("z and kappa admissibility on the example theories") {
  for (const char* name : {"t1", "t2", "t3", "t4", "t5", "penguin_triangle"}) {
    CAPTURE(name);
    const auto t = theory(name);
    const auto zp = z_partition(t, vocabulary_of(t, {}, {}));
    REQUIRE(zp);
    const auto za = z_admissibility_failure(t, *zp);
    CHECK_MESSAGE(!za, za.value_or(""));
    const auto ka = kappa_admissibility_failure(t, *zp);
    CHECK_MESSAGE(!ka, ka.value_or(""));
  }
}

TEST_CASE("threshold satisfiability is upward closed") {
  TheoryGenerator gen(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = gen.next();
    const auto v = vocabulary_of(c.theory, c.kb, c.query);
    const auto zp = z_partition(c.theory, v);
    if (!zp) continue;
    bool seen = false;
    for (std::size_t j = 0; j <= zp->size(); ++j) {
      ConstraintSystem sys{v, c.theory.strict, {}, {}};
      sys.members.insert(sys.members.end(), c.kb.conjuncts.begin(), c.kb.conjuncts.end());
      for (auto i : zp->at_or_above(j)) sys.members.push_back(c.theory.defaults[i]);
      const bool sat = satisfiable(sys);
      CHECK((!seen || sat));
      seen = seen || sat;
      if (sat && !kappa_z(ConstraintSystem{v, c.kb.conjuncts, {}, {}}, c.theory, *zp)) {
        FAIL("kappa infinite although a threshold is satisfiable");
      }
    }
    const auto k = kappa_z(ConstraintSystem{v, c.kb.conjuncts, {}, {}}, c.theory, *zp);
    if (k) CHECK(*k <= zp->size());
  }
}
