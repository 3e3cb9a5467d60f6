// Writes the example documents used by the CLI tests and the README into a
// directory: groupoids, modules and extensions built from the fixtures.

#include "ogkit/fixtures.hpp"
#include "ogkit/io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

using namespace ogkit;

namespace {

std::filesystem::path out_dir;

void write(const std::string& name, const std::string& text) {
  std::ofstream(out_dir / name, std::ios::binary) << text;
  std::cout << (out_dir / name).string() << "\n";
}

// The kernel of phi as a groupoid of its own, with the inclusion.
std::pair<OrderedGroupoid, std::vector<MorphismId>> kernel_groupoid(const Extension& e) {
  const OrderedGroupoid& g = *e.G;
  std::vector<MorphismId> members = e.kernel();
  GroupoidBuilder b;
  std::map<MorphismId, MorphismId> local;
  for (MorphismId x : members)
    if (g.is_identity(x)) local[x] = b.add_object(g.name(x));
  for (MorphismId x : members)
    if (!g.is_identity(x)) local[x] = b.add_morphism(g.name(x), local.at(g.d(x)), local.at(g.r(x)));
  for (MorphismId x : members)
    for (MorphismId y : members) {
      MorphismId c = g.compose(x, y);
      if (c != kUndefined && !g.is_identity(x) && !g.is_identity(y)) b.set_compose(local[x], local[y], local.at(c));
      if (x != y && g.leq(x, y)) b.set_leq(local[x], local[y]);
    }
  OrderedGroupoid n = b.build();
  std::vector<MorphismId> iota(n.size());
  for (const auto& [x, l] : local) iota[static_cast<std::size_t>(l)] = x;
  return {std::move(n), std::move(iota)};
}

void extension(const std::string& name, const Extension& e) {
  auto [n, iota] = kernel_groupoid(e);
  write(name, io::extension_document(n, *e.G, *e.Q, iota, e.phi.map));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_examples <directory>\n";
    return 2;
  }
  out_dir = argv[1];
  std::filesystem::create_directories(out_dir);

  for (const auto& [name, g] : fixtures::all_groupoids()) write("groupoid_" + name + ".json", io::groupoid_document(*g));
  write("groupoid_S3.json", io::groupoid_document(*fixtures::symmetric3()));
  {
    auto z4 = fixtures::cyclic(4);
    std::vector<MorphismId> n{*z4->find("e"), *z4->find("a2")};
    write("groupoid_Z4_with_normal.json", io::groupoid_document(*z4, n));
    std::vector<MorphismId> bad{*z4->find("e"), *z4->find("a")};
    write("groupoid_Z4_not_subgroupoid.json", io::groupoid_document(*z4, bad));
  }
  {
    auto cl = fixtures::clifford_c2();
    OrderedGroupoid::Tables t = cl->tables();
    MorphismId s = *cl->find("s"), tt = *cl->find("t");
    t.leq[static_cast<std::size_t>(tt) * t.names.size() + static_cast<std::size_t>(s)] = 0;
    write("groupoid_broken_OG3.json", io::groupoid_document(OrderedGroupoid(std::move(t))));
  }

  auto c2 = fixtures::cyclic(2);
  auto c3 = fixtures::cyclic(3);
  auto ch = fixtures::chain2();
  auto cl = fixtures::clifford_c2();
  auto constant = [](const GroupoidPtr& g, long long n) {
    return constant_module(build_L(g), zlin::AbGroup::cyclic(n));
  };
  write("module_C2_Z2.json", io::module_document(constant(c2, 2), io::ModuleBase::L));
  write("module_C2_Z4.json", io::module_document(constant(c2, 4), io::ModuleBase::L));
  write("module_C3_Z3.json", io::module_document(constant(c3, 3), io::ModuleBase::L));
  write("module_chain2_Z2.json", io::module_document(constant(ch, 2), io::ModuleBase::L));
  write("module_clifford_c2_Z2.json", io::module_document(constant(cl, 2), io::ModuleBase::L));
  write("module_clifford_c2_ZG.json", io::module_document(adjoint_module(build_L(cl)), io::ModuleBase::L));
  write("module_C2_sign_Z3.json",
        io::module_document(make_module(build_L(c2), {zlin::AbGroup::cyclic(3)},
                                        {zlin::IntMatrix::identity(1), zlin::IntMatrix::from_rows({{2}})}),
                            io::ModuleBase::L));
  write("module_C2_not_functor.json",
        io::module_document(make_module(build_L(c2), {zlin::AbGroup::cyclic(3)},
                                        {zlin::IntMatrix::identity(1), zlin::IntMatrix::from_rows({{0}})}),
                            io::ModuleBase::L));

  extension("extension_Z4_over_C2.json", fixtures::z4_over_c2().ext);
  extension("extension_C2_semidirect_Z2.json", semidirect(c2, constant(c2, 2)).ext);
  extension("extension_S3_over_C2.json", fixtures::s3_over_c2().ext);
  extension("extension_clifford_Z4_over_C2.json", fixtures::clifford_z4_over_c2().ext);
  return 0;
}
