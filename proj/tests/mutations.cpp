#include "mutations.hpp"

#include "ogkit/fixtures.hpp"

#include <functional>
#include <stdexcept>

using namespace ogkit;

namespace mutations {

namespace {

using Edit = std::function<void(OrderedGroupoid::Tables&, const OrderedGroupoid&)>;

MorphismId id(const OrderedGroupoid& g, const std::string& name) {
  auto x = g.find(name);
  if (!x) throw std::logic_error("no morphism " + name);
  return *x;
}

void set_leq(OrderedGroupoid::Tables& t, MorphismId x, MorphismId y, bool value) {
  t.leq[static_cast<std::size_t>(x) * t.names.size() + static_cast<std::size_t>(y)] = value ? 1 : 0;
}

void set_compose(OrderedGroupoid::Tables& t, MorphismId x, MorphismId y, MorphismId v) {
  t.compose[static_cast<std::size_t>(x) * t.names.size() + static_cast<std::size_t>(y)] = v;
}

Mutation mutate(const std::string& axiom, const GroupoidPtr& g, const Edit& f) {
  OrderedGroupoid::Tables t = g->tables();
  f(t, *g);
  return {axiom, OrderedGroupoid(std::move(t))};
}

}  // namespace

std::vector<Mutation> axiom_mutations() {
  std::vector<Mutation> out;
  out.push_back(mutate("OG1", fixtures::cyclic(4),
                       [](auto& t, const auto& g) { set_leq(t, id(g, "a"), id(g, "a3"), true); }));
  out.push_back(mutate("OG2", fixtures::clifford_c2(), [](auto& t, const auto& g) {
    set_leq(t, id(g, "t"), id(g, "s"), false);
    set_leq(t, id(g, "t"), id(g, "u"), true);
    set_leq(t, id(g, "v"), id(g, "s"), true);
  }));
  out.push_back(mutate("OG3", fixtures::clifford_c2(),
                       [](auto& t, const auto& g) { set_leq(t, id(g, "t"), id(g, "s"), false); }));
  out.push_back(mutate("OG4", fixtures::pair_over_point(),
                       [](auto& t, const auto& g) { set_leq(t, id(g, "z"), id(g, "xy"), false); }));
  out.push_back(mutate("ORDER-REFL", fixtures::chain2(),
                       [](auto& t, const auto& g) { set_leq(t, id(g, "v"), id(g, "v"), false); }));
  out.push_back(mutate("ORDER-ANTISYM", fixtures::cyclic(2), [](auto& t, const auto& g) {
    set_leq(t, id(g, "a"), id(g, "e"), true);
    set_leq(t, id(g, "e"), id(g, "a"), true);
  }));
  out.push_back(mutate("ORDER-TRANS", fixtures::chain3(),
                       [](auto& t, const auto& g) { set_leq(t, id(g, "w"), id(g, "u"), false); }));
  out.push_back(mutate("ORDER-IDENT", fixtures::pair_over_point(),
                       [](auto& t, const auto& g) { set_leq(t, id(g, "x"), id(g, "xy"), true); }));
  out.push_back(mutate("ASSOC", fixtures::klein_four(),
                       [](auto& t, const auto& g) { set_compose(t, id(g, "a"), id(g, "b"), id(g, "b")); }));
  out.push_back(mutate("INVERSE", fixtures::cyclic(4),
                       [](auto& t, const auto& g) { t.inv[static_cast<std::size_t>(id(g, "a"))] = id(g, "a"); }));
  out.push_back(mutate("IDENTITY", fixtures::cyclic(4),
                       [](auto& t, const auto& g) { set_compose(t, id(g, "e"), id(g, "a"), id(g, "a2")); }));
  out.push_back(mutate("COMPOSE", fixtures::pair_groupoid(),
                       [](auto& t, const auto& g) { set_compose(t, id(g, "xy"), id(g, "xy"), id(g, "x")); }));
  out.push_back(mutate("DOMAIN", fixtures::cyclic(3),
                       [](auto& t, const auto& g) { t.d[static_cast<std::size_t>(id(g, "a"))] = id(g, "a"); }));
  return out;
}

}  // namespace mutations
