#include <doctest.h>

#include "oracles.hpp"

#include "ogkit/error.hpp"
#include "ogkit/ext.hpp"
#include "ogkit/fixtures.hpp"

#include <cstdlib>

using namespace ogkit;
using zlin::AbGroup;
using zlin::IntMatrix;
using zlin::Vector;

namespace {

GModule constant(const GroupoidPtr& g, long long n) { return constant_module(build_L(g), AbGroup::cyclic(n)); }

std::size_t order_of(const AbGroup& g) { return static_cast<std::size_t>(*g.order()); }

// Largest order of an element of a one-object groupoid.
int exponent(const OrderedGroupoid& g) {
  int best = 1;
  for (MorphismId x = 0; x < static_cast<MorphismId>(g.size()); ++x) {
    int k = 1;
    for (MorphismId y = x; !g.is_identity(y); y = g.mul(y, x)) ++k;
    best = std::max(best, k);
  }
  return best;
}

FactorSet with_pair_value(const FactorSetShape& s, std::size_t slot, long long v) {
  FactorSet fs = zero_factor_set(s);
  fs.values[slot] = {v};
  return fs;
}

std::size_t poset_h2(const GroupoidPtr& g, long long n) {
  QI qi = adjoin_identity_module(constant(g, n));
  return oracle::category_cohomology(qi.a0, 2).order();
}

}  // namespace

TEST_CASE("the zero factor set gives the semidirect product") {
  auto c2 = fixtures::cyclic(2);
  auto cl = fixtures::clifford_c2();
  auto pr = fixtures::pair_groupoid();
  for (const auto& [q, a] : std::vector<std::pair<GroupoidPtr, GModule>>{{c2, constant(c2, 2)},
                                                                         {c2, constant(c2, 4)},
                                                                         {cl, constant(cl, 2)},
                                                                         {cl, adjoint_module(build_L(cl), 2)},
                                                                         {pr, constant(pr, 3)},
                                                                         {fixtures::chain2(), constant(fixtures::chain2(), 2)}}) {
    FactorSetShape s = factor_set_shape(q, a);
    BuiltExtension b = build_extension(s, zero_factor_set(s));
    REQUIRE(b.ok());
    ModuleExtension sd = semidirect(q, a);
    const auto& t1 = b.extension->ext.G->tables();
    const auto& t2 = sd.ext.G->tables();
    CHECK(t1.names == t2.names);
    CHECK(t1.d == t2.d);
    CHECK(t1.r == t2.r);
    CHECK(t1.inv == t2.inv);
    CHECK(t1.compose == t2.compose);
    CHECK(t1.leq == t2.leq);
    CHECK(b.extension->ext.phi.map == sd.ext.phi.map);
  }
}

TEST_CASE("factor sets over C2 with DeltaZ/2 give Z4 and the Klein group") {
  auto c2 = fixtures::cyclic(2);
  FactorSetShape s = factor_set_shape(c2, constant(c2, 2));
  REQUIRE(s.slots() == 1);
  BuiltExtension z4 = build_extension(s, with_pair_value(s, 0, 1));
  BuiltExtension k4 = build_extension(s, zero_factor_set(s));
  REQUIRE(z4.ok());
  REQUIRE(k4.ok());
  CHECK(exponent(*z4.extension->ext.G) == 4);
  CHECK(exponent(*k4.extension->ext.G) == 2);
  CHECK_FALSE(are_equivalent(s, *z4.extension, *k4.extension));
  CHECK(are_equivalent(s, *z4.extension, *z4.extension));
  CHECK(are_equivalent(s, *k4.extension, *k4.extension));
  CHECK(general_equivalence_exists(*z4.extension, *k4.extension) == std::optional<bool>(false));
}

TEST_CASE("a factor set failing an axiom is rejected by the validator") {
  auto ch = fixtures::chain2();
  FactorSetShape s = factor_set_shape(ch, constant(ch, 2));
  REQUIRE(s.restrictions.size() == 1);
  BuiltExtension b = build_extension(s, with_pair_value(s, 0, 1));
  CHECK_FALSE(b.ok());
  CHECK_FALSE(b.report.ok());
  ExtensionCensus c = enumerate_extensions(ch, constant(ch, 2));
  CHECK(c.candidates == 2);
  CHECK(c.valid.size() == 1);
  CHECK(!c.rejections.empty());
}

TEST_CASE("fibre equivalences agree with a general functor search") {
  for (const auto& [q, a] :
       std::vector<std::pair<GroupoidPtr, GModule>>{{fixtures::cyclic(2), constant(fixtures::cyclic(2), 2)},
                                                    {fixtures::cyclic(2), constant(fixtures::cyclic(2), 4)},
                                                    {fixtures::cyclic(3), constant(fixtures::cyclic(3), 3)},
                                                    {fixtures::clifford_c2(), constant(fixtures::clifford_c2(), 2)}}) {
    ExtensionCensus c = enumerate_extensions(q, a);
    const std::size_t n = std::min<std::size_t>(c.valid.size(), 12);
    std::vector<ModuleExtension> exts;
    for (std::size_t i = 0; i < n; ++i) exts.push_back(*build_extension(c.shape, c.valid[i]).extension);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto general = general_equivalence_exists(exts[i], exts[j]);
        REQUIRE(general.has_value());
        CHECK(*general == are_equivalent(c.shape, exts[i], exts[j]).has_value());
        CHECK(*general == (c.class_of[i] == c.class_of[j]));
      }
  }
}

TEST_CASE("classification against classical and poset oracles") {
  struct Case {
    std::string name;
    GroupoidPtr q;
    long long m;
    std::size_t expected;
  };
  std::vector<Case> cases{{"C2, Z/2", fixtures::cyclic(2), 2, oracle::cyclic_group_cohomology(2, 2, 2).order()},
                          {"C3, Z/3", fixtures::cyclic(3), 3, oracle::cyclic_group_cohomology(3, 3, 2).order()},
                          {"C2, Z/4", fixtures::cyclic(2), 4, oracle::cyclic_group_cohomology(2, 4, 2).order()},
                          {"C3, Z/2", fixtures::cyclic(3), 2, oracle::cyclic_group_cohomology(3, 2, 2).order()},
                          {"chain, Z/2", fixtures::chain2(), 2, poset_h2(fixtures::chain2(), 2)},
                          {"chain3, Z/3", fixtures::chain3(), 3, poset_h2(fixtures::chain3(), 3)},
                          {"pair, Z/2", fixtures::pair_groupoid(), 2, poset_h2(fixtures::pair_groupoid(), 2)},
                          {"clifford, Z/2", fixtures::clifford_c2(), 2, poset_h2(fixtures::clifford_c2(), 2)}};
  CHECK(cases[0].expected == 2);
  CHECK(cases[1].expected == 3);
  CHECK(cases[2].expected == 2);
  CHECK(cases[3].expected == 1);
  CHECK(cases[4].expected == 1);
  for (const auto& c : cases) {
    INFO(c.name);
    Classification r = classify(c.q, constant(c.q, c.m));
    CHECK(r.classes() == c.expected);
    CHECK(order_of(r.h2) == c.expected);
    CHECK(r.constant_on_classes);
    CHECK(r.injective);
    CHECK(r.surjective);
    CHECK(r.valid_sets_form_subgroup);
    CHECK(r.classes_equal_size);
    CHECK(r.equivalence_relation);
    CHECK(r.ok());
  }
}

TEST_CASE("classification with a nontrivial action") {
  auto c2 = fixtures::cyclic(2);
  GModule sign = make_module(build_L(c2), {AbGroup::cyclic(3)}, {IntMatrix::identity(1), IntMatrix::from_rows({{2}})});
  Classification r = classify(c2, sign);
  CHECK(r.classes() == 1);
  CHECK(r.ok());
}

TEST_CASE("enumeration budget") {
  auto c2 = fixtures::cyclic(2);
  CHECK_THROWS_AS(enumerate_extensions(fixtures::cyclic(7), constant(fixtures::cyclic(7), 2)), BudgetError);
  CHECK_THROWS_AS(enumerate_extensions(c2, constant(c2, 5)), BudgetError);
  CHECK_THROWS_AS(enumerate_extensions(c2, constant(c2, 0)), BudgetError);
  auto k4 = fixtures::klein_four();
  Budget small;
  small.max_candidates = 100;
  CHECK_THROWS_AS(enumerate_extensions(k4, constant(k4, 2), small), BudgetError);
  CHECK(factor_set_shape(k4, constant(k4, 2)).candidates() == 512);
}

TEST_CASE("enumeration does not depend on the worker count") {
  auto c3 = fixtures::cyclic(3);
  const char* old = std::getenv("OGKIT_THREADS");
  std::string saved = old ? old : "";
  setenv("OGKIT_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  ExtensionCensus a = enumerate_extensions(c3, constant(c3, 3));
  setenv("OGKIT_THREADS", "5", 1);
  CHECK(worker_count() == 5);
  ExtensionCensus b = enumerate_extensions(c3, constant(c3, 3));
  if (old)
    setenv("OGKIT_THREADS", saved.c_str(), 1);
  else
    unsetenv("OGKIT_THREADS");
  CHECK(a.valid_index == b.valid_index);
  CHECK(a.class_of == b.class_of);
  CHECK(a.representatives == b.representatives);
  CHECK(a.rejections == b.rejections);
}

TEST_CASE("transgression") {
  ModuleExtension z4 = fixtures::z4_over_c2();
  Abelianisation nab = abelianisation(z4.ext, z4.A.base);
  HomModules mod = hom_modules(nab.module, z4.A);
  REQUIRE(order_of(mod.group()) == 2);
  Vector z4_class = cocycle_of_extension(z4).cls;
  for (const GMap& psi : mod.enumerate()) {
    ExtensionClass c = transgression(z4.ext, z4.A, nab, psi);
    bool zero = mod.group().is_zero(mod.class_of(psi));
    CHECK(c.h2.group().is_zero(c.cls) == zero);
    if (!zero) CHECK(c.h2.group().equal(c.cls, z4_class));
  }
  ModuleExtension sd = semidirect(fixtures::cyclic(2), constant(fixtures::cyclic(2), 2));
  Abelianisation nab_sd = abelianisation(sd.ext, sd.A.base);
  HomModules mod_sd = hom_modules(nab_sd.module, sd.A);
  for (const GMap& psi : mod_sd.enumerate()) {
    ExtensionClass c = transgression(sd.ext, sd.A, nab_sd, psi);
    CHECK(c.h2.group().is_zero(c.cls));
  }
}

TEST_CASE("five-term sequence for Z/2 -> Z/4 -> Z/2") {
  ModuleExtension z4 = fixtures::z4_over_c2();
  FiveTerm f = five_term(z4.ext, z4.A);
  CHECK(f.ok());
  CHECK(order_of(f.groups[0]) == oracle::cyclic_derivations(2, 2));
  CHECK(order_of(f.groups[1]) == oracle::cyclic_derivations(4, 2));
  CHECK(order_of(f.groups[2]) == 2);
  CHECK(order_of(f.groups[3]) == oracle::cyclic_group_cohomology(2, 2, 2).order());
  CHECK(order_of(f.groups[4]) == oracle::cyclic_group_cohomology(4, 2, 2).order());
  CHECK(f.maps[1].is_zero());
  CHECK(f.maps[2].is_injective());
  CHECK(f.maps[3].is_zero());
}

TEST_CASE("five-term sequence for C2 x| DeltaZ/2") {
  auto c2 = fixtures::cyclic(2);
  ModuleExtension sd = semidirect(c2, constant(c2, 2));
  FiveTerm f = five_term(sd.ext, sd.A);
  CHECK(f.ok());
  CHECK(order_of(f.groups[0]) == 2);
  CHECK(order_of(f.groups[1]) == 4);
  CHECK(order_of(f.groups[2]) == 2);
  CHECK(order_of(f.groups[3]) == 2);
  CHECK(order_of(f.groups[4]) == 8);
  CHECK(f.maps[2].is_zero());
  CHECK(f.maps[3].is_injective());
}

TEST_CASE("five-term sequence on further extensions") {
  auto c2 = fixtures::cyclic(2);
  auto cl = fixtures::clifford_c2();
  std::vector<std::pair<std::string, std::pair<Extension, GModule>>> cases;
  ModuleExtension s3 = fixtures::s3_over_c2();
  ModuleExtension cz4 = fixtures::clifford_z4_over_c2();
  cases.push_back({"S3", {s3.ext, s3.A}});
  cases.push_back({"S3 with Z/2", {s3.ext, constant_module(s3.A.base, AbGroup::cyclic(2))}});
  cases.push_back({"clifford-Z4", {cz4.ext, cz4.A}});
  ModuleExtension clsd = semidirect(cl, constant(cl, 2));
  cases.push_back({"clifford x| Z/2", {clsd.ext, clsd.A}});
  ModuleExtension z4 = fixtures::z4_over_c2();
  cases.push_back({"Z4 with Z/4", {z4.ext, constant_module(z4.A.base, AbGroup::cyclic(4))}});
  cases.push_back({"Z4 with 0", {z4.ext, constant_module(z4.A.base, AbGroup::zero())}});
  for (const auto& [name, c] : cases) {
    INFO(name);
    FiveTerm f = five_term(c.first, c.second);
    CHECK(f.ok());
    if (name == "Z4 with 0")
      for (const auto& g : f.groups) CHECK(g.is_trivial());
  }
}
