#include <doctest.h>

#include "ogkit/error.hpp"
#include "ogkit/zlin.hpp"

#include <numeric>
#include <random>

using namespace ogkit::zlin;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Fraction-free Gaussian elimination.
Integer bareiss_det(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer gcd_all(const IntMatrix& m) {
  Integer g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g = boost::multiprecision::gcd(g, m(i, j));
  return g;
}

long long brute_hom_count(const std::vector<long long>& a, const std::vector<long long>& b) {
  AbGroup B = direct_sum([&] {
    std::vector<AbGroup> v;
    for (long long x : b) v.push_back(AbGroup::cyclic(x));
    return v;
  }());
  auto elems = B.elements();
  // Images of each generator of A that respect its order.
  std::vector<std::size_t> admissible;
  long long count = 1;
  for (long long order : a) {
    std::size_t ok = 0;
    for (const auto& y : elems) {
      Vector multiple = B.zero_element();
      for (long long k = 0; k < order; ++k) multiple = B.add(multiple, y);
      if (B.is_zero(multiple)) ++ok;
    }
    count *= static_cast<long long>(ok);
  }
  return count;
}

}  // namespace

TEST_CASE("smith normal form: property test on random matrices") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, r, c, -6, 6);
    if (trial % 7 == 0) m = random_matrix(rng, r, c, 0, 1);
    SmithForm s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(s.U * s.Uinv == IntMatrix::identity(r));
    CHECK(s.V * s.Vinv == IntMatrix::identity(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    for (std::size_t i = 0; i < std::min(r, c); ++i) {
      CHECK(s.D(i, i) >= 0);
      if (i + 1 < std::min(r, c) && s.D(i, i) != 0) CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
      if (s.D(i, i) == 0 && i + 1 < std::min(r, c)) CHECK(s.D(i + 1, i + 1) == 0);
    }
    if (s.rank > 0) CHECK(s.diag(0) == gcd_all(m));
    if (r == c) {
      Integer prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= s.D(i, i);
      Integer det = bareiss_det(m);
      CHECK(prod == abs(det));
      CHECK((s.rank == r) == (det != 0));
    }
  }
}

TEST_CASE("abelian groups in canonical form") {
  CHECK(AbGroup::cyclic(1).is_trivial());
  CHECK(AbGroup::cyclic(0).free_rank() == 1);
  CHECK_THROWS_AS(AbGroup({Integer(4), Integer(2)}), ogkit::PreconditionError);
  CHECK_THROWS_AS(AbGroup({Integer(1)}), ogkit::PreconditionError);
  AbGroup g = direct_sum({AbGroup::cyclic(2), AbGroup::cyclic(3), AbGroup::cyclic(4)});
  CHECK(g.to_string() == "Z/2 + Z/12");
  CHECK(*g.order() == 24);
  CHECK(g.elements().size() == 24);
  CHECK(direct_sum({AbGroup::cyclic(0), AbGroup::cyclic(2)}).to_string() == "Z/2 + Z");
  CHECK(AbGroup::zero().to_string() == "0");
}

TEST_CASE("cokernel order equals |det| for random nonsingular matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, n, n, -5, 5);
    Integer det = bareiss_det(m);
    AbGroup g = cokernel(m);
    if (det == 0) {
      CHECK(!g.is_finite());
    } else {
      CHECK(*g.order() == abs(det));
    }
    CanonicalQuotient q = canonicalize(m);
    // Relations map to zero and the canonical section is a right inverse.
    for (std::size_t j = 0; j < n; ++j) CHECK(q.group.is_zero(q.class_of(m.column(j))));
    if (g.is_finite()) {
      for (const auto& x : g.elements()) CHECK(q.group.equal(q.class_of(q.representative(x)), x));
    }
  }
}

TEST_CASE("subquotient: kernel of multiplication by 2 on Z/4 + Z/6") {
  // numerator = {x : 2x == 0}, i.e. 2 x0 == 0 mod 4, 2 x1 == 0 mod 6.
  IntMatrix cond = IntMatrix::from_rows({{2, 0}, {0, 2}});
  Subquotient s(2, cond, {4, 6}, {4, 6}, IntMatrix(2, 0));
  CHECK(s.group().to_string() == "Z/2 + Z/2");
  CHECK(s.contains({2, 3}));
  CHECK(!s.contains({1, 0}));
  CHECK_THROWS_AS(s.class_of({1, 0}), ogkit::PreconditionError);
  CHECK(s.is_trivial_class({4, 6}));
  CHECK(s.elements().size() == 4);
}

TEST_CASE("subquotient: quotient by extra relations") {
  IntMatrix rel = IntMatrix::from_rows({{1}, {1}});
  Subquotient s(2, IntMatrix(0, 2), {}, {0, 0}, rel);
  CHECK(s.group().to_string() == "Z");
  CHECK(s.group().equal(s.class_of({1, 0}), s.class_of({0, 1})) == false);
  CHECK(s.group().equal(s.class_of({1, 0}), s.group().negate(s.class_of({0, 1}))));
}

TEST_CASE("hom groups agree with brute-force counting") {
  std::vector<std::pair<std::vector<long long>, std::vector<long long>>> cases = {
      {{2}, {4}}, {{4}, {6}}, {{2, 2}, {2}}, {{6}, {2, 6}}, {{3}, {2}}, {{4, 2}, {2, 4}}, {{12}, {8}}};
  for (const auto& [a, b] : cases) {
    std::vector<AbGroup> as, bs;
    for (long long x : a) as.push_back(AbGroup::cyclic(x));
    for (long long x : b) bs.push_back(AbGroup::cyclic(x));
    HomGroup h = hom_group(direct_sum(as), direct_sum(bs));
    CHECK(*h.group().order() == brute_hom_count(a, b));
    for (const auto& f : h.enumerate()) CHECK(f.is_well_defined());
  }
  HomGroup zz = hom_group(AbGroup::free(2), AbGroup::cyclic(0));
  CHECK(zz.group().to_string() == "Z + Z");
}

TEST_CASE("homomorphism predicates") {
  AbGroup z4 = AbGroup::cyclic(4), z2 = AbGroup::cyclic(2);
  AbHom proj{z4, z2, IntMatrix::from_rows({{1}})};
  AbHom incl{z2, z4, IntMatrix::from_rows({{2}})};
  CHECK(proj.is_well_defined());
  CHECK(incl.is_well_defined());
  CHECK(proj.is_surjective());
  CHECK(!proj.is_injective());
  CHECK(incl.is_injective());
  CHECK(incl.then(proj).is_zero());
  AbHom bad{z2, z4, IntMatrix::from_rows({{1}})};
  CHECK(!bad.is_well_defined());
  KernelResult k = kernel_subgroup(proj);
  CHECK(k.group.to_string() == "Z/2");
  CHECK(k.embedding.then(proj).is_zero());
  KernelResult im = image_subgroup(incl);
  CHECK(im.group.to_string() == "Z/2");
}

TEST_CASE("solve_linear over Z and modulo moduli") {
  IntMatrix m = IntMatrix::from_rows({{2, 4}});
  CHECK(!solve_linear(m, {1}, {0}).has_value());
  auto s = solve_linear(m, {1}, {3});
  REQUIRE(s.has_value());
  Integer v = (2 * s->particular[0] + 4 * s->particular[1] - 1) % 3;
  CHECK(v == 0);
  auto t = solve_linear(m, {6}, {0});
  REQUIRE(t.has_value());
  CHECK(2 * t->particular[0] + 4 * t->particular[1] == 6);
  CHECK(t->kernel_basis.size() == 1);
}

TEST_CASE("integer kernel and lattice basis") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 4, -4, 4);
    IntMatrix k = integer_kernel(m);
    CHECK((m * k).is_zero());
    IntMatrix b = lattice_basis(m);
    // Same span: the cokernels of the two generating sets agree.
    CHECK(cokernel(b) == cokernel(m));
  }
}

TEST_CASE("documented small examples") {
  SmithForm s = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(s.D == IntMatrix::from_rows({{2, 0}, {0, 4}}));
  CHECK(smith_normal_form(IntMatrix::from_rows({{0}})).D == IntMatrix::from_rows({{0}}));
  CHECK(cokernel(IntMatrix::from_rows({{2, 0}, {0, 3}})).to_string() == "Z/6");
  CHECK(cokernel(IntMatrix(3, 0)).to_string() == "Z + Z + Z");
  CHECK(hom_group(AbGroup::cyclic(0), AbGroup::cyclic(3)).group().to_string() == "Z/3");
  CHECK(hom_group(AbGroup::cyclic(2), AbGroup::cyclic(0)).group().is_trivial());
  AbHom sum{AbGroup::free(2), AbGroup::free(1), IntMatrix::from_rows({{1, 1}})};
  CHECK(kernel_subgroup(sum).group.to_string() == "Z");
  auto none = solve_linear(IntMatrix::from_rows({{2}}), {1}, {4});
  CHECK(!none.has_value());
  auto sol = solve_linear(IntMatrix::from_rows({{1, 1}}), {3}, {0});
  REQUIRE(sol.has_value());
  CHECK(sol->particular[0] + sol->particular[1] == 3);
  REQUIRE(sol->kernel_basis.size() == 1);
  CHECK(sol->kernel_basis[0][0] == -sol->kernel_basis[0][1]);
}

TEST_CASE("|dom| = |ker| * |im| for random finite homomorphisms") {
  std::mt19937 rng(4242);
  const long long orders[] = {2, 3, 4, 6};
  for (int trial = 0; trial < 80; ++trial) {
    AbGroup a = direct_sum({AbGroup::cyclic(orders[rng() % 4]), AbGroup::cyclic(orders[rng() % 4])});
    AbGroup b = direct_sum({AbGroup::cyclic(orders[rng() % 4]), AbGroup::cyclic(orders[rng() % 4])});
    HomGroup hg = hom_group(a, b);
    auto all = hg.enumerate();
    const AbHom& h = all[rng() % all.size()];
    Integer k = *kernel_subgroup(h).group.order();
    Integer i = *image_subgroup(h).group.order();
    CHECK(k * i == *a.order());
    CHECK(kernel_subgroup(h).embedding.is_injective());
  }
}
