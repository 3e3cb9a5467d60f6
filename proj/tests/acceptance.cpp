// Acceptance run: one PASS/FAIL line per criterion with its wall-clock time.
// A criterion passes when every check holds and it finishes within its limit.
// Exit status is 0 iff every criterion passes.

#include "mutations.hpp"
#include "oracles.hpp"

#include "ogkit/cohom.hpp"
#include "ogkit/deriv.hpp"
#include "ogkit/ext.hpp"
#include "ogkit/fixtures.hpp"
#include "ogkit/gmod.hpp"
#include "ogkit/lcat.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace ogkit;
using zlin::AbGroup;
using zlin::IntMatrix;
using zlin::Vector;

namespace {

struct Checks {
  std::vector<std::string> failures;
  std::size_t count = 0;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Checks&)> body;
};

std::size_t order_of(const AbGroup& g) { return static_cast<std::size_t>(*g.order()); }

GModule constant(const GroupoidPtr& g, long long n) { return constant_module(build_L(g), AbGroup::cyclic(n)); }

void axiom_suite(Checks& c) {
  auto all = fixtures::all_groupoids();
  c.expect(all.size() >= 8, "at least 8 fixtures");
  std::set<std::string> names;
  for (const auto& [name, g] : all) {
    names.insert(name);
    c.expect(validate(*g).ok(), name + " passes validate");
  }
  for (const char* required : {"C2", "C3", "chain2", "pair", "chain3", "Z4", "klein", "two-component"})
    c.expect(names.count(required) == 1, std::string("fixture ") + required + " present");
  auto muts = mutations::axiom_mutations();
  c.expect(muts.size() >= 10, "at least 10 mutations");
  for (const auto& m : muts) {
    auto rep = validate(m.groupoid);
    c.expect(!rep.ok() && rep.mentions(m.axiom), "mutation " + m.axiom + " detected and named");
  }
}

void left_cancellative(Checks& c) {
  for (const auto& [name, g] : fixtures::all_groupoids()) {
    auto l = build_L(g);
    c.expect(validate_category(*l).ok() && check_left_cancellative(*l), name);
  }
}

void augmentation_sequence(Checks& c) {
  for (const auto& [name, g] : fixtures::all_groupoids()) {
    auto l = build_L(g);
    GModule zg = adjoint_module(l);
    GModule dz = constant_module(l, AbGroup::cyclic(0));
    GMap eps = augmentation(zg, dz);
    c.expect(validate_gmap(zg, dz, eps).ok(), name + ": augmentation natural");
    auto kg = kernel_module(zg, dz, eps);
    for (ObjectId o = 0; o < static_cast<ObjectId>(l->num_objects()); ++o) {
      const std::string at = name + " at " + l->object_name(o);
      auto costar = g->costar(l->object_identity(o));
      const zlin::AbHom& emb = kg.embedding.at(o);
      c.expect(emb.is_injective(), at + ": KG -> ZG injective");
      c.expect(eps.at(o).is_surjective(), at + ": ZG -> Z surjective");
      c.expect(emb.then(eps.at(o)).is_zero() && zlin::homology(emb, eps.at(o)).is_trivial(), at + ": exact at ZG");
      c.expect(kg.module.group(o).free_rank() == costar.size() - 1, at + ": rank KG = |costar| - 1");
    }
  }
}

void adjunctions(Checks& c) {
  for (const auto& [gname, g] : {std::pair{"C2", fixtures::cyclic(2)}, std::pair{"chain2", fixtures::chain2()}}) {
    auto gi = std::make_shared<OrderedGroupoid>(adjoin_identity(*g));
    auto l = build_L(g);
    auto li = build_L(gi);
    auto e = build_E(g);
    for (long long n : {2LL, 4LL}) {
      const std::string at = std::string(gname) + " Z/" + std::to_string(n);
      AbGroup a = AbGroup::cyclic(n);
      std::vector<GModule> over_l = {constant_module(l, a), adjoint_module(l, n)};
      std::vector<GModule> over_li = {constant_module(li, a), adjoint_module(li, n)};
      for (const auto& cm : over_l) {
        c.expect(adjunction_check_H(l, e, constant_module(e, a), cm).ok(), at + ": H left adjoint to restriction");
        for (const auto& bi : over_li) {
          c.expect(adjunction_check_I(l, li, bi, cm).ok(), at + ": (-)^I right adjoint");
          c.expect(adjunction_check_0(l, li, cm, bi).ok(), at + ": (-)^0 left adjoint");
        }
      }
    }
  }
}

void h0_is_limit(Checks& c) {
  for (const auto& [name, g] : fixtures::all_groupoids()) {
    auto l = build_L(g);
    std::vector<std::pair<std::string, GModule>> mods{{"Z/2", constant_module(l, AbGroup::cyclic(2))},
                                                      {"Z/3", constant_module(l, AbGroup::cyclic(3))},
                                                      {"Z", constant_module(l, AbGroup::cyclic(0))},
                                                      {"ZG", adjoint_module(l)},
                                                      {"ZG/2", adjoint_module(l, 2)}};
    for (const auto& [mname, m] : mods) {
      Limit lim = lim_module(m);
      Cohomology h0 = cohomology(cochain_complex(m, 0), 0);
      bool same = lim.group() == h0.group();
      const IntMatrix& nb = lim.space.numerator_basis();
      for (std::size_t j = 0; j < nb.cols(); ++j) same = same && h0.is_cocycle(nb.column(j));
      const IntMatrix& hb = h0.space.numerator_basis();
      for (std::size_t j = 0; j < hb.cols(); ++j) same = same && lim.space.contains(hb.column(j));
      c.expect(same, name + " / " + mname);
    }
  }
}

void kg_adjoin(Checks& c) {
  for (const auto& [name, g] : fixtures::all_groupoids()) {
    auto l = build_L(g);
    auto li = build_L(std::make_shared<OrderedGroupoid>(adjoin_identity(*g)));
    GModule kgi = augmentation_module(li).module;
    GModule kg0 = zero_extend(augmentation_module(l).module, li);
    c.expect(same_module(kgi, kg0), name);
  }
}

void derived_modules(Checks& c) {
  for (const auto& [name, g] : fixtures::all_groupoids()) {
    auto l = build_L(g);
    OrderedFunctor id = identity_functor(g);
    DerivedModule d = derived_module(id, l);
    auto kg = augmentation_module(l);
    DerivationValues f = augmentation_derivation(adjoint_module(l), kg);
    GMap fh = factor_through(d, kg.module, f);
    bool iso = validate_derivation(id, kg.module, f).ok() && validate_gmap(d.module, kg.module, fh).ok();
    for (const auto& comp : fh.components) iso = iso && comp.is_isomorphism();
    c.expect(iso, name + ": D_id -> KG natural isomorphism");
  }
  ModuleExtension z4 = fixtures::z4_over_c2();
  auto sub = subgroupoid(z4.ext.G, z4.ext.kernel());
  auto eps = identities_extension(sub.groupoid);
  auto ln = build_L(eps.Q);
  auto ab = abelianisation(eps, ln);
  c.expect(ab.module.group(0).to_string() == "Z/2", "N^ab = Z/2 for the Z/4 kernel");
  DerivationValues alpha;
  for (const auto& v : ab.alpha) alpha.push_back(*v);
  DerivedModule d = derived_module(eps.phi, ln);
  GMap fh = factor_through(d, ab.module, alpha);
  bool iso = validate_derivation(eps.phi, ab.module, alpha).ok() && validate_gmap(d.module, ab.module, fh).ok();
  for (const auto& comp : fh.components) iso = iso && comp.is_isomorphism();
  c.expect(iso, "D_epsilon -> N^ab natural isomorphism");
}

void crowell(Checks& c) {
  std::vector<std::pair<std::string, ModuleExtension>> exts{{"Z/2 -> Z/4 -> Z/2", fixtures::z4_over_c2()}};
  for (const auto& [name, q] : {std::pair{"C2", fixtures::cyclic(2)}, std::pair{"chain2", fixtures::chain2()},
                                std::pair{"clifford", fixtures::clifford_c2()}})
    exts.emplace_back(std::string(name) + " x| Z/2", semidirect(q, constant(q, 2)));
  for (const auto& [name, e] : exts) {
    auto cs = crowell_sequence(e.ext, e.A.base);
    c.expect(cs.iota_natural && cs.phi_natural, name + ": maps natural");
    c.expect(cs.iota_injective && cs.phi_surjective && cs.exact_middle, name + ": exact");
    c.expect(cs.kappa_splits, name + ": kappa splits");
    for (const auto& t : all_transversals(e.ext, 64))
      c.expect(crowell_sequence(e.ext, e.A.base, t).kappa_splits, name + ": kappa splits for every transversal");
  }
}

void sections(Checks& c) {
  for (const auto& [name, g] : {std::pair{"C2", fixtures::cyclic(2)}, std::pair{"chain2", fixtures::chain2()}})
    for (long long n : {2LL, 3LL}) {
      auto r = section_correspondence(g, constant(g, n));
      c.expect(r.ok() && r.sections > 0, std::string(name) + " Z/" + std::to_string(n));
    }
}

void five_term_exactness(Checks& c) {
  auto c2 = fixtures::cyclic(2);
  ModuleExtension z4 = fixtures::z4_over_c2();
  ModuleExtension sd = semidirect(c2, constant(c2, 2));
  const std::size_t der = oracle::cyclic_derivations(2, 2);
  const std::size_t h2 = oracle::cyclic_group_cohomology(2, 2, 2).order();
  c.expect(der == 2 && h2 == 2, "classical oracle: Der(Z/2, Z/2) = Z/2, H^2(Z/2, Z/2) = Z/2");
  for (const auto& [name, e] : {std::pair{"Z/2 -> Z/4 -> Z/2", &z4}, std::pair{"C2 x| Z/2", &sd}}) {
    FiveTerm f = five_term(e->ext, e->A);
    c.expect(f.injective, std::string(name) + ": injective at Der(Q,A)");
    for (int i = 0; i < 3; ++i) {
      c.expect(f.composite_zero[i], std::string(name) + ": composite zero at spot " + std::to_string(i + 2));
      c.expect(f.exact[i], std::string(name) + ": ker = im at spot " + std::to_string(i + 2));
    }
    c.expect(order_of(f.groups[0]) == der, std::string(name) + ": Der(Q,A) matches classical");
    c.expect(order_of(f.groups[3]) == h2, std::string(name) + ": H^2(Q^I,A^0) matches classical");
  }
  FiveTerm f = five_term(z4.ext, z4.A);
  c.expect(order_of(f.groups[1]) == oracle::cyclic_derivations(4, 2), "Z/4: Der_phi matches classical");
  c.expect(order_of(f.groups[4]) == oracle::cyclic_group_cohomology(4, 2, 2).order(),
           "Z/4: H^2(G^I,A^0) matches classical");
}

void classification(Checks& c) {
  auto chain = fixtures::chain2();
  QI qi = adjoin_identity_module(constant(chain, 2));
  struct Case {
    std::string name;
    GroupoidPtr q;
    long long m;
    std::size_t oracle;
    std::size_t expected;
  };
  std::vector<Case> cases{{"C2, Z/2", fixtures::cyclic(2), 2, oracle::cyclic_group_cohomology(2, 2, 2).order(), 2},
                          {"C3, Z/3", fixtures::cyclic(3), 3, oracle::cyclic_group_cohomology(3, 3, 2).order(), 3},
                          {"C2, Z/4", fixtures::cyclic(2), 4, oracle::cyclic_group_cohomology(2, 4, 2).order(), 2},
                          {"chain2, Z/2", chain, 2, oracle::category_cohomology(qi.a0, 2).order(), 1}};
  for (const auto& k : cases) {
    c.expect(k.oracle == k.expected, k.name + ": oracle gives " + std::to_string(k.expected));
    Classification r = classify(k.q, constant(k.q, k.m));
    c.expect(r.classes() == k.oracle, k.name + ": #classes = oracle");
    c.expect(order_of(r.h2) == k.oracle, k.name + ": |H^2| = oracle");
    c.expect(r.constant_on_classes && r.injective && r.surjective, k.name + ": bijection classes -> H^2");
    c.expect(r.ok(), k.name + ": census checks");
  }
}

void transversal_independence(Checks& c) {
  ModuleExtension z4 = fixtures::z4_over_c2();
  ExtensionClass ec = cocycle_of_extension(z4);
  auto ts = all_transversals(z4.ext, 64);
  c.expect(ts.size() >= 2, "at least two transversals");
  c.expect(!ec.h2.group().is_zero(ec.cls), "class of Z/4 is nonzero");
  for (std::size_t i = 0; i < ts.size(); ++i)
    c.expect(ec.h2.group().equal(ec.cls, cocycle_of_extension(z4, ts[i]).cls),
             "transversal " + std::to_string(i));
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "axiom suite on fixtures and single-axiom mutations", 5, axiom_suite},
      {2, "L(G) is left cancellative", 1, left_cancellative},
      {3, "0 -> KG -> ZG -> DeltaZ -> 0 stalkwise, rank KG_e = |costar e| - 1", 2, augmentation_sequence},
      {4, "adjunction bijections with Z/2, Z/4 on C2 and chain", 30, adjunctions},
      {5, "H^0 = lim", 2, h0_is_limit},
      {6, "KG^I = (KG)^0", 1, kg_adjoin},
      {7, "D_id = KG and D_epsilon = N^ab", 5, derived_modules},
      {8, "Crowell sequence exact and split by kappa", 10, crowell},
      {9, "derivations <-> sections of the semidirect product", 10, sections},
      {10, "five-term exactness", 60, five_term_exactness},
      {11, "classification of extensions by H^2(Q^I, A^0)", 300, classification},
      {12, "extension class independent of the transversal", 5, transversal_independence},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      checks.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < cr.limit_seconds;
    bool pass = checks.failures.empty() && in_time;
    failed += !pass;
    std::printf("criterion %2d %s  %-68s %4zu checks  %7.3f s (limit %g s)\n", cr.number, pass ? "PASS" : "FAIL",
                cr.title.c_str(), checks.count, secs, cr.limit_seconds);
    for (const auto& f : checks.failures) std::printf("    failed: %s\n", f.c_str());
    if (!in_time) std::printf("    failed: time limit\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
