#include <doctest.h>

#include "ogkit/error.hpp"
#include "ogkit/fixtures.hpp"
#include "ogkit/quotients.hpp"

using namespace ogkit;
using zlin::AbGroup;
using zlin::IntMatrix;

namespace {

std::vector<MorphismId> ids(const OrderedGroupoid& g, std::initializer_list<const char*> names) {
  std::vector<MorphismId> out;
  for (const char* n : names) out.push_back(*g.find(n));
  return out;
}

GModule constant_over(const GroupoidPtr& q, long long n) { return constant_module(build_L(q), AbGroup::cyclic(n)); }

}  // namespace

TEST_CASE("quotient by the identities is the groupoid itself") {
  for (const auto& [name, g] : fixtures::all_groupoids()) {
    INFO(name);
    CHECK(is_normal(*g, g->objects()).ok());
    auto q = quotient(g, g->objects());
    CHECK(validate(*q.quotient).ok());
    CHECK(validate_functor(q.projection).ok());
    CHECK(is_isomorphism(q.projection));
    CHECK(simplified_relation_agrees(*g, g->objects()));
  }
}

TEST_CASE("quotient examples") {
  auto z4 = fixtures::cyclic(4);
  auto n = ids(*z4, {"e", "a2"});
  CHECK(is_normal(*z4, n).ok());
  auto q = quotient(z4, n);
  CHECK(find_isomorphism(q.quotient, fixtures::cyclic(2)).has_value());
  CHECK(kernel_of(q.projection) == n);

  auto cl = fixtures::clifford_c2();
  auto local = ids(*cl, {"u", "s", "v", "t"});
  CHECK(is_normal(*cl, local).ok());
  CHECK(find_isomorphism(quotient(cl, local).quotient, fixtures::chain2()).has_value());

  // Not a union of groups: collapsing the pair groupoid over z.
  auto pp = fixtures::pair_over_point();
  std::vector<MorphismId> all = pp->morphisms();
  CHECK(is_normal(*pp, all).ok());
  auto qpp = quotient(pp, all);
  CHECK(validate(*qpp.quotient).ok());
  CHECK(find_isomorphism(qpp.quotient, fixtures::chain2()).has_value());

  auto s3 = fixtures::symmetric3();
  CHECK(validate(*s3).ok());
  auto a3 = ids(*s3, {"e", "r", "r2"});
  CHECK(is_normal(*s3, a3).ok());
  CHECK(find_isomorphism(quotient(s3, a3).quotient, fixtures::cyclic(2)).has_value());
  CHECK(simplified_relation_agrees(*s3, a3));
}

TEST_CASE("non-normal subsets are reported") {
  auto s3 = fixtures::symmetric3();
  auto rep = is_normal(*s3, ids(*s3, {"e", "t0"}));
  CHECK(rep.mentions("N03"));
  CHECK(!rep.mentions("SUBGROUPOID"));
  CHECK(is_normal(*s3, ids(*s3, {"e", "r"})).mentions("SUBGROUPOID"));

  auto ch = fixtures::chain2();
  CHECK(is_normal(*ch, ids(*ch, {"u"})).mentions("N01"));

  auto cl = fixtures::clifford_c2();
  auto rep2 = is_normal(*cl, ids(*cl, {"u", "s", "v"}));
  CHECK(rep2.mentions("N02"));
}

TEST_CASE("extension fixtures are valid and their quotients recover Q") {
  for (const auto& e : {fixtures::z4_over_c2(), fixtures::clifford_z4_over_c2(), fixtures::s3_over_c2()}) {
    CHECK(validate(*e.ext.G).ok());
    CHECK(validate_module_extension(e).ok());
    auto n = e.ext.kernel();
    CHECK(is_normal(*e.ext.G, n).ok());
    CHECK(simplified_relation_agrees(*e.ext.G, n));
    auto q = quotient(e.ext.G, n);
    CHECK(find_isomorphism(q.quotient, e.ext.Q).has_value());
  }
}

TEST_CASE("semidirect products") {
  auto c2 = fixtures::cyclic(2);
  auto sd = semidirect(c2, constant_over(c2, 2));
  CHECK(validate(*sd.ext.G).ok());
  CHECK(validate_module_extension(sd).ok());
  CHECK(find_isomorphism(sd.ext.G, fixtures::klein_four()).has_value());

  // Z/3 with the sign action gives S3.
  auto l = build_L(c2);
  GModule sign = make_module(l, {AbGroup::cyclic(3)}, {IntMatrix::identity(1), IntMatrix::from_rows({{2}})});
  auto s = semidirect(c2, sign);
  CHECK(validate_module_extension(s).ok());
  CHECK(find_isomorphism(s.ext.G, fixtures::symmetric3()).has_value());

  for (const auto& [name, q] : fixtures::all_groupoids()) {
    INFO(name);
    auto triv = semidirect(q, constant_module(build_L(q), AbGroup::zero()));
    CHECK(find_isomorphism(triv.ext.G, q).has_value());
    for (long long n : {2LL, 3LL}) {
      auto e = semidirect(q, constant_over(q, n));
      CHECK(validate(*e.ext.G).ok());
      CHECK(validate_module_extension(e).ok());
      CHECK(e.ext.G->size() == q->size() * static_cast<std::size_t>(n));
      for (MorphismId x = 0; x < static_cast<MorphismId>(e.ext.G->size()); ++x)
        CHECK(e.kernel_value[static_cast<std::size_t>(x)].has_value() == q->is_identity(e.ext.phi(x)));
    }
    auto adj = semidirect(q, adjoint_module(build_L(q), 2));
    CHECK(validate_module_extension(adj).ok());
  }
  CHECK_THROWS_AS(semidirect(c2, constant_over(c2, 0)), UnsupportedError);
}

TEST_CASE("module extension violations are reported") {
  auto e = fixtures::s3_over_c2();
  e.A = make_module(e.A.base, {AbGroup::cyclic(3)}, {IntMatrix::identity(1), IntMatrix::identity(1)});
  CHECK(validate_module_extension(e).mentions("CONJUGATION"));
  auto f = fixtures::z4_over_c2();
  f.kernel_value[2] = zlin::Vector{0};
  CHECK(validate_module_extension(f).mentions("KERNEL-VALUE"));
  auto g = fixtures::z4_over_c2();
  g.ext.phi.map = {0, 0, 0, 0};
  CHECK(!validate_module_extension(g).ok());
}
