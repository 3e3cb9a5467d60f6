#include "ogkit/fixtures.hpp"

#include <algorithm>
#include <array>

namespace ogkit::fixtures {

GroupoidPtr group(const std::string& object, const std::vector<std::string>& elements,
                  const std::vector<std::vector<int>>& table) {
  GroupoidBuilder b;
  MorphismId e = b.add_object(object);
  for (std::size_t i = 1; i < elements.size(); ++i) b.add_morphism(elements[i], e, e);
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      b.set_compose(static_cast<MorphismId>(i), static_cast<MorphismId>(j), table[i][j]);
  return b.build_shared();
}

GroupoidPtr cyclic(int n) {
  std::vector<std::string> names{"e"};
  for (int i = 1; i < n; ++i) names.push_back(i == 1 ? "a" : "a" + std::to_string(i));
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return group("e", names, table);
}

GroupoidPtr klein_four() {
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i ^ j;
  return group("e", {"e", "a", "b", "c"}, table);
}

GroupoidPtr chain2() {
  GroupoidBuilder b;
  MorphismId u = b.add_object("u");
  MorphismId v = b.add_object("v");
  b.set_leq(v, u);
  return b.build_shared();
}

GroupoidPtr chain3() {
  GroupoidBuilder b;
  MorphismId u = b.add_object("u");
  MorphismId v = b.add_object("v");
  MorphismId w = b.add_object("w");
  b.set_leq(v, u);
  b.set_leq(w, v);
  return b.build_shared();
}

GroupoidPtr pair_groupoid() {
  GroupoidBuilder b;
  MorphismId x = b.add_object("x");
  MorphismId y = b.add_object("y");
  MorphismId xy = b.add_morphism("xy", x, y);
  MorphismId yx = b.add_morphism("yx", y, x);
  b.set_compose(xy, yx, x);
  b.set_compose(yx, xy, y);
  return b.build_shared();
}

GroupoidPtr two_component() {
  GroupoidBuilder b;
  MorphismId a = b.add_object("a");
  b.add_object("b");
  MorphismId s = b.add_morphism("s", a, a);
  b.set_compose(s, s, a);
  return b.build_shared();
}

GroupoidPtr clifford_c2() {
  GroupoidBuilder b;
  MorphismId u = b.add_object("u");
  MorphismId v = b.add_object("v");
  MorphismId s = b.add_morphism("s", u, u);
  MorphismId t = b.add_morphism("t", v, v);
  b.set_compose(s, s, u);
  b.set_compose(t, t, v);
  b.set_leq(v, u);
  b.set_leq(t, s);
  return b.build_shared();
}

GroupoidPtr pair_over_point() {
  GroupoidBuilder b;
  MorphismId x = b.add_object("x");
  MorphismId y = b.add_object("y");
  MorphismId z = b.add_object("z");
  MorphismId xy = b.add_morphism("xy", x, y);
  MorphismId yx = b.add_morphism("yx", y, x);
  b.set_compose(xy, yx, x);
  b.set_compose(yx, xy, y);
  for (MorphismId m : {x, y, xy, yx}) b.set_leq(z, m);
  return b.build_shared();
}

std::vector<std::pair<std::string, GroupoidPtr>> all_groupoids() {
  return {{"C2", cyclic(2)},
          {"C3", cyclic(3)},
          {"Z4", cyclic(4)},
          {"klein", klein_four()},
          {"chain2", chain2()},
          {"chain3", chain3()},
          {"pair", pair_groupoid()},
          {"two-component", two_component()},
          {"clifford", clifford_c2()},
          {"pair-over-point", pair_over_point()}};
}

}  // namespace ogkit::fixtures

namespace ogkit::fixtures {

GroupoidPtr clifford_cyclic(int n) {
  GroupoidBuilder b;
  MorphismId u = b.add_object("u");
  MorphismId v = b.add_object("v");
  std::vector<MorphismId> at_u{u}, at_v{v};
  for (int i = 1; i < n; ++i) {
    at_u.push_back(b.add_morphism("a" + std::to_string(i) + "u", u, u));
    at_v.push_back(b.add_morphism("a" + std::to_string(i) + "v", v, v));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b.set_compose(at_u[static_cast<std::size_t>(i)], at_u[static_cast<std::size_t>(j)], at_u[static_cast<std::size_t>((i + j) % n)]);
      b.set_compose(at_v[static_cast<std::size_t>(i)], at_v[static_cast<std::size_t>(j)], at_v[static_cast<std::size_t>((i + j) % n)]);
    }
    b.set_leq(at_v[static_cast<std::size_t>(i)], at_u[static_cast<std::size_t>(i)]);
  }
  return b.build_shared();
}

GroupoidPtr symmetric3() {
  const std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> p{};
      for (std::size_t k = 0; k < 3; ++k) p[k] = perms[j][static_cast<std::size_t>(perms[i][k])];
      table[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    }
  return group("e", {"e", "r", "r2", "t0", "t1", "t2"}, table);
}

namespace {

ModuleExtension cyclic_kernel_extension(const GroupoidPtr& g, const GroupoidPtr& q, std::vector<MorphismId> map,
                                        const zlin::IntMatrix& q_action, long long n,
                                        const std::vector<std::pair<MorphismId, long long>>& values) {
  CategoryPtr l = build_L(q);
  std::vector<zlin::IntMatrix> acts;
  for (ArrowId f = 0; f < static_cast<ArrowId>(l->num_arrows()); ++f) {
    auto [e, x] = l->arrow_pair(f);
    acts.push_back(q->is_identity(x) ? zlin::IntMatrix::identity(1) : q_action);
  }
  GModule a = make_module(l, std::vector<zlin::AbGroup>(l->num_objects(), zlin::AbGroup::cyclic(n)), acts);
  ModuleExtension out{Extension{g, q, OrderedFunctor{g, q, std::move(map)}}, a,
                      std::vector<std::optional<zlin::Vector>>(g->size())};
  for (auto [m, v] : values) out.kernel_value[static_cast<std::size_t>(m)] = zlin::Vector{v};
  return out;
}

}  // namespace

ModuleExtension z4_over_c2() {
  auto z4 = cyclic(4);
  return cyclic_kernel_extension(z4, cyclic(2), {0, 1, 0, 1}, zlin::IntMatrix::identity(1), 2, {{0, 0}, {2, 1}});
}

ModuleExtension clifford_z4_over_c2() {
  auto g = clifford_cyclic(4);
  auto q = clifford_c2();
  std::vector<MorphismId> map(g->size());
  std::vector<std::pair<MorphismId, long long>> values;
  for (MorphismId x = 0; x < static_cast<MorphismId>(g->size()); ++x) {
    bool at_u = g->d(x) == *g->find("u");
    int power = g->is_identity(x) ? 0 : std::stoi(g->name(x).substr(1, g->name(x).size() - 2));
    map[static_cast<std::size_t>(x)] = *q->find(power % 2 == 0 ? (at_u ? "u" : "v") : (at_u ? "s" : "t"));
    if (power % 2 == 0) values.emplace_back(x, power / 2);
  }
  return cyclic_kernel_extension(g, q, map, zlin::IntMatrix::identity(1), 2, values);
}

ModuleExtension s3_over_c2() {
  auto s3 = symmetric3();
  return cyclic_kernel_extension(s3, cyclic(2), {0, 0, 0, 1, 1, 1}, zlin::IntMatrix::from_rows({{2}}), 3,
                                 {{0, 0}, {1, 1}, {2, 2}});
}

}  // namespace ogkit::fixtures
