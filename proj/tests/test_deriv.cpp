#include <doctest.h>

#include "ogkit/deriv.hpp"
#include "ogkit/error.hpp"
#include "ogkit/fixtures.hpp"

#include <functional>
#include <set>

using namespace ogkit;
using zlin::AbGroup;
using zlin::IntMatrix;
using zlin::Vector;

namespace {

// Counts theta-derivations by trying every assignment of stalk elements.
std::size_t brute_derivation_count(const OrderedFunctor& theta, const GModule& b) {
  const OrderedGroupoid& g = *theta.dom;
  const Category& lq = *b.base;
  std::vector<std::vector<Vector>> choices;
  for (MorphismId x = 0; x < static_cast<MorphismId>(g.size()); ++x)
    choices.push_back(b.group(*lq.object_of(theta(g.r(x)))).elements());
  std::size_t count = 0;
  DerivationValues cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      count += validate_derivation(theta, b, cur).ok();
      return;
    }
    for (const auto& v : choices[i]) {
      cur.push_back(v);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return count;
}

GModule sign_module(const CategoryPtr& l) {
  return make_module(l, {AbGroup::cyclic(3)}, {IntMatrix::identity(1), IntMatrix::from_rows({{2}})});
}

std::vector<std::pair<std::string, ModuleExtension>> extension_fixtures() {
  auto c2 = fixtures::cyclic(2);
  auto ch = fixtures::chain2();
  auto cl = fixtures::clifford_c2();
  return {{"Z4", fixtures::z4_over_c2()},
          {"clifford-Z4", fixtures::clifford_z4_over_c2()},
          {"S3", fixtures::s3_over_c2()},
          {"C2 x| Z/2", semidirect(c2, constant_module(build_L(c2), AbGroup::cyclic(2)))},
          {"C2 x| sign", semidirect(c2, sign_module(build_L(c2)))},
          {"chain x| Z/3", semidirect(ch, constant_module(build_L(ch), AbGroup::cyclic(3)))},
          {"clifford x| Z/2", semidirect(cl, constant_module(build_L(cl), AbGroup::cyclic(2)))},
          {"clifford x| ZG/2", semidirect(cl, adjoint_module(build_L(cl), 2))}};
}

}  // namespace

TEST_CASE("derivation groups agree with brute force") {
  for (const auto& [name, g] : fixtures::all_groupoids()) {
    INFO(name);
    auto l = build_L(g);
    OrderedFunctor id = identity_functor(g);
    for (long long n : {2LL, 3LL}) {
      GModule b = constant_module(l, AbGroup::cyclic(n));
      auto der = derivations(id, b);
      CHECK(*der.group().order() == brute_derivation_count(id, b));
      for (const auto& f : der.enumerate()) {
        CHECK(validate_derivation(id, b, f).ok());
        CHECK(der.group().equal(der.class_of(f), der.class_of(der.values_of(der.class_of(f)))));
      }
    }
    if (g->size() <= 4) {
      GModule zg2 = adjoint_module(l, 2);
      CHECK(*derivations(id, zg2).group().order() == brute_derivation_count(id, zg2));
    }
    CHECK(derivations(id, constant_module(l, AbGroup::zero())).group().is_trivial());
  }
  auto c2 = fixtures::cyclic(2);
  auto l2 = build_L(c2);
  CHECK(derivations(identity_functor(c2), constant_module(l2, AbGroup::cyclic(2))).group().to_string() == "Z/2");
  auto triv = fixtures::cyclic(1);
  CHECK(derivations(identity_functor(triv), constant_module(build_L(triv), AbGroup::cyclic(0))).group().is_trivial());
  for (const auto& [name, e] : extension_fixtures()) {
    INFO(name);
    if (e.ext.G->size() > 8) continue;
    CHECK(*derivations(e.ext.phi, e.A).group().order() == brute_derivation_count(e.ext.phi, e.A));
  }
}

TEST_CASE("an order-violating assignment is rejected") {
  auto cl = fixtures::clifford_c2();
  auto l = build_L(cl);
  GModule b = constant_module(l, AbGroup::cyclic(2));
  DerivationValues f(cl->size(), Vector{0});
  f[static_cast<std::size_t>(*cl->find("s"))] = Vector{1};
  auto rep = validate_derivation(identity_functor(cl), b, f);
  CHECK(rep.mentions("ORDER"));
  CHECK(!rep.mentions("COCYCLE"));
}

TEST_CASE("the universal derivation and the universal property") {
  for (const auto& [name, g] : fixtures::all_groupoids()) {
    INFO(name);
    auto l = build_L(g);
    OrderedFunctor id = identity_functor(g);
    DerivedModule d = derived_module(id, l);
    CHECK(validate_module(d.module).ok());
    CHECK(validate_derivation(id, d.module, d.delta).ok());
    CHECK(same_map(factor_through(d, d.module, d.delta), identity_map(d.module)));
    GModule b = constant_module(l, AbGroup::cyclic(2));
    auto der = derivations(id, b).enumerate();
    std::set<Vector> classes;
    HomModules hom = hom_modules(d.module, b);
    for (const auto& f : der) {
      GMap fh = factor_through(d, b, f);
      CHECK(validate_gmap(d.module, b, fh).ok());
      for (MorphismId x = 0; x < static_cast<MorphismId>(g->size()); ++x)
        CHECK(b.group(0).equal(fh.at(*l->object_of(g->r(x))).apply(d.delta[static_cast<std::size_t>(x)]),
                               f[static_cast<std::size_t>(x)]));
      classes.insert(hom.class_of(fh));
    }
    CHECK(classes.size() == der.size());
    CHECK(*hom.group().order() == der.size());
    CHECK(same_map(factor_through(d, b, DerivationValues(g->size(), Vector{0})), zero_map(d.module, b)));
  }
}

TEST_CASE("D_id is KG") {
  for (const auto& [name, g] : fixtures::all_groupoids()) {
    INFO(name);
    auto l = build_L(g);
    DerivedModule d = derived_module(identity_functor(g), l);
    GModule zg = adjoint_module(l);
    auto kg = augmentation_module(l);
    DerivationValues f = augmentation_derivation(zg, kg);
    CHECK(validate_derivation(identity_functor(g), kg.module, f).ok());
    GMap fh = factor_through(d, kg.module, f);
    CHECK(validate_gmap(d.module, kg.module, fh).ok());
    for (const auto& c : fh.components) CHECK(c.is_isomorphism());
  }
}

TEST_CASE("D_epsilon is the abelianisation") {
  auto s3 = fixtures::symmetric3();
  auto ext = identities_extension(s3);
  auto l0 = build_L(ext.Q);
  auto nab = abelianisation(ext, l0);
  CHECK(nab.module.group(0).to_string() == "Z/2");
  for (const auto& [name, e] : extension_fixtures()) {
    INFO(name);
    auto sub = subgroupoid(e.ext.G, e.ext.kernel());
    auto eps = identities_extension(sub.groupoid);
    auto ln = build_L(eps.Q);
    auto ab = abelianisation(eps, ln);
    CHECK(validate_module(ab.module).ok());
    DerivationValues alpha;
    for (const auto& v : ab.alpha) alpha.push_back(*v);
    CHECK(validate_derivation(eps.phi, ab.module, alpha).ok());
    DerivedModule d = derived_module(eps.phi, ln);
    GMap fh = factor_through(d, ab.module, alpha);
    CHECK(validate_gmap(d.module, ab.module, fh).ok());
    for (const auto& c : fh.components) CHECK(c.is_isomorphism());
    // The kernel is abelian here, so N^ab has the stalks of A.
    auto over_q = abelianisation(e.ext, e.A.base);
    for (ObjectId o = 0; o < static_cast<ObjectId>(e.A.groups.size()); ++o)
      CHECK(over_q.module.group(o) == e.A.group(o));
  }
}

TEST_CASE("Crowell sequence is exact and split by kappa") {
  for (const auto& [name, e] : extension_fixtures()) {
    INFO(name);
    auto cs = crowell_sequence(e.ext, e.A.base);
    CHECK(cs.iota_natural);
    CHECK(cs.phi_natural);
    CHECK(cs.iota_injective);
    CHECK(cs.phi_surjective);
    CHECK(cs.exact_middle);
    CHECK(cs.kappa_splits);
    CHECK(validate_module(cs.d.module).ok());
    CHECK(validate_module(cs.nab.module).ok());
    for (const auto& t : all_transversals(e.ext, 64)) CHECK(crowell_sequence(e.ext, e.A.base, t).kappa_splits);
  }
  // Trivial extension: N = Q_0, D_phi = KQ and iota is zero.
  for (const auto& [name, q] : fixtures::all_groupoids()) {
    INFO(name);
    Extension triv{q, q, identity_functor(q)};
    auto lq = build_L(q);
    auto cs = crowell_sequence(triv, lq);
    CHECK(cs.ok());
    for (const auto& c : cs.phi_bar.components) CHECK(c.is_isomorphism());
    for (const auto& c : cs.iota_bar.components) CHECK(c.is_zero());
  }
  auto z4 = fixtures::z4_over_c2();
  auto cs = crowell_sequence(z4.ext, z4.A.base);
  CHECK(cs.nab.module.group(0).to_string() == "Z/2");
  CHECK(cs.kq.module.group(0).to_string() == "Z");
  CHECK(cs.d.module.group(0).to_string() == "Z/2 + Z");
}

TEST_CASE("derivations correspond to sections of the semidirect product") {
  for (const auto& g : {fixtures::cyclic(2), fixtures::chain2(), fixtures::clifford_c2(), fixtures::pair_groupoid()}) {
    auto l = build_L(g);
    for (long long n : {2LL, 3LL}) {
      auto r = section_correspondence(g, constant_module(l, AbGroup::cyclic(n)));
      CHECK(r.ok());
    }
    auto z = section_correspondence(g, constant_module(l, AbGroup::zero()));
    CHECK(z.ok());
    CHECK(z.sections == 1);
  }
  auto c2 = fixtures::cyclic(2);
  auto r = section_correspondence(c2, constant_module(build_L(c2), AbGroup::cyclic(2)));
  CHECK(r.sections == 2);
  auto ch = fixtures::chain2();
  auto rc = section_correspondence(ch, constant_module(build_L(ch), AbGroup::cyclic(2)));
  CHECK(rc.sections == rc.derivations);
}
