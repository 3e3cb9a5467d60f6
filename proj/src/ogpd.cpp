#include "ogkit/ogpd.hpp"

#include "ogkit/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace ogkit {

// ---------------------------------------------------------------------------
// ValidationReport

void ValidationReport::add(std::string axiom, std::vector<MorphismId> witnesses, std::string detail) {
  auto it = std::find_if(counts_.begin(), counts_.end(),
                         [&](const auto& c) { return c.first == axiom; });
  if (it == counts_.end()) {
    counts_.emplace_back(axiom, 0);
    it = counts_.end() - 1;
  }
  ++it->second;
  if (it->second > kMaxPerAxiom) return;
  violations_.push_back(Violation{std::move(axiom), std::move(witnesses), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
  for (const auto& v : other.violations_) add(v.axiom, v.witnesses, v.detail);
}

bool ValidationReport::mentions(const std::string& axiom) const { return count(axiom) > 0; }

std::size_t ValidationReport::count(const std::string& axiom) const {
  for (const auto& c : counts_)
    if (c.first == axiom) return c.second;
  return 0;
}

// ---------------------------------------------------------------------------
// OrderedGroupoid

OrderedGroupoid::OrderedGroupoid(Tables tables) : t_(std::move(tables)) {
  const std::size_t n = t_.names.size();
  if (t_.d.size() != n || t_.r.size() != n || t_.inv.size() != n || t_.compose.size() != n * n ||
      t_.leq.size() != n * n)
    throw PreconditionError("OrderedGroupoid: table sizes are inconsistent");
  auto in_range = [n](MorphismId x) { return x >= 0 && static_cast<std::size_t>(x) < n; };
  for (std::size_t x = 0; x < n; ++x)
    if (!in_range(t_.d[x]) || !in_range(t_.r[x]) || !in_range(t_.inv[x]))
      throw PreconditionError("OrderedGroupoid: morphism '" + t_.names[x] +
                              "' references an unknown id");
  for (MorphismId c : t_.compose)
    if (c != kUndefined && !in_range(c))
      throw PreconditionError("OrderedGroupoid: composition table references an unknown id");

  for (std::size_t x = 0; x < n; ++x)
    if (t_.d[x] == static_cast<MorphismId>(x) && t_.r[x] == static_cast<MorphismId>(x))
      objects_.push_back(static_cast<MorphismId>(x));

  restriction_.assign(n * n, kUndefined);
  for (std::size_t x = 0; x < n; ++x) {
    MorphismId xd = t_.d[x];
    for (MorphismId e : objects_) {
      if (!leq(e, xd)) continue;
      MorphismId found = kUndefined;
      for (std::size_t z = 0; z < n; ++z) {
        if (t_.d[z] != e || !leq(static_cast<MorphismId>(z), static_cast<MorphismId>(x))) continue;
        found = (found == kUndefined) ? static_cast<MorphismId>(z) : -2;
      }
      restriction_[x * n + static_cast<std::size_t>(e)] = found;
    }
  }
}

std::size_t OrderedGroupoid::idx(MorphismId x) const {
  if (x < 0 || static_cast<std::size_t>(x) >= t_.names.size())
    throw PreconditionError("morphism id " + std::to_string(x) + " out of range");
  return static_cast<std::size_t>(x);
}

std::optional<MorphismId> OrderedGroupoid::find(const std::string& name) const {
  for (std::size_t i = 0; i < t_.names.size(); ++i)
    if (t_.names[i] == name) return static_cast<MorphismId>(i);
  return std::nullopt;
}

MorphismId OrderedGroupoid::mul(MorphismId g, MorphismId h) const {
  MorphismId gh = compose(g, h);
  if (gh == kUndefined)
    throw PreconditionError("product " + name(g) + "*" + name(h) + " is not defined");
  return gh;
}

std::vector<MorphismId> OrderedGroupoid::morphisms() const {
  std::vector<MorphismId> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = static_cast<MorphismId>(i);
  return out;
}

std::vector<MorphismId> OrderedGroupoid::star(MorphismId e) const {
  std::vector<MorphismId> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (t_.d[x] == e) out.push_back(static_cast<MorphismId>(x));
  return out;
}

std::vector<MorphismId> OrderedGroupoid::costar(MorphismId e) const {
  std::vector<MorphismId> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (t_.r[x] == e) out.push_back(static_cast<MorphismId>(x));
  return out;
}

std::vector<MorphismId> OrderedGroupoid::local_group(MorphismId e) const {
  std::vector<MorphismId> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (t_.r[x] == e && t_.d[x] == e) out.push_back(static_cast<MorphismId>(x));
  return out;
}

MorphismId OrderedGroupoid::restriction(MorphismId e, MorphismId x) const {
  if (!is_identity(e)) throw PreconditionError("restriction: '" + name(e) + "' is not an identity");
  if (!leq(e, d(x)))
    throw PreconditionError("restriction: " + name(e) + " is not below the domain of " + name(x));
  MorphismId z = restriction_[idx(x) * size() + idx(e)];
  if (z == kUndefined) throw AxiomError("OG3: no restriction of " + name(x) + " to " + name(e));
  if (z == -2) throw AxiomError("OG3: restriction of " + name(x) + " to " + name(e) + " is not unique");
  return z;
}

MorphismId OrderedGroupoid::corestriction(MorphismId x, MorphismId e) const {
  if (!is_identity(e))
    throw PreconditionError("corestriction: '" + name(e) + "' is not an identity");
  if (!leq(e, r(x)))
    throw PreconditionError("corestriction: " + name(e) + " is not below the range of " + name(x));
  return inv(restriction(e, inv(x)));
}

std::optional<MorphismId> OrderedGroupoid::glb(MorphismId e, MorphismId f) const {
  std::vector<MorphismId> lower;
  for (MorphismId x : objects_)
    if (leq(x, e) && leq(x, f)) lower.push_back(x);
  for (MorphismId l : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](MorphismId y) { return leq(y, l); })) return l;
  return std::nullopt;
}

std::optional<MorphismId> OrderedGroupoid::pseudoproduct(MorphismId g, MorphismId h) const {
  auto l = glb(r(g), d(h));
  if (!l) return std::nullopt;
  return mul(corestriction(g, *l), restriction(*l, h));
}

bool OrderedGroupoid::is_inductive() const {
  for (MorphismId e : objects_)
    for (MorphismId f : objects_)
      if (!glb(e, f)) return false;
  return true;
}

bool OrderedGroupoid::is_union_of_groups() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (t_.d[x] != t_.r[x]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Builder

MorphismId GroupoidBuilder::add_object(const std::string& name) {
  auto id = static_cast<MorphismId>(names_.size());
  names_.push_back(name);
  d_.push_back(id);
  r_.push_back(id);
  return id;
}

MorphismId GroupoidBuilder::add_morphism(const std::string& name, MorphismId d, MorphismId r) {
  auto id = static_cast<MorphismId>(names_.size());
  names_.push_back(name);
  d_.push_back(d);
  r_.push_back(r);
  return id;
}

void GroupoidBuilder::set_compose(MorphismId g, MorphismId h, MorphismId gh) {
  compose_.push_back({{g, h}, gh});
}

void GroupoidBuilder::set_leq(MorphismId x, MorphismId y) { leq_.emplace_back(x, y); }

void GroupoidBuilder::set_inverse(MorphismId x, MorphismId y) { inverse_.emplace_back(x, y); }

void close_order(std::vector<char>& leq, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (leq[k * n + j]) leq[i * n + j] = 1;
    }
}

OrderedGroupoid GroupoidBuilder::build() const {
  const std::size_t n = names_.size();
  OrderedGroupoid::Tables t;
  t.names = names_;
  t.d = d_;
  t.r = r_;
  t.inv.assign(n, kUndefined);
  t.compose.assign(n * n, kUndefined);
  t.leq.assign(n * n, 0);
  auto in_range = [n](MorphismId x) { return x >= 0 && static_cast<std::size_t>(x) < n; };
  for (const auto& [gh, v] : compose_) {
    if (!in_range(gh.first) || !in_range(gh.second) || !in_range(v))
      throw PreconditionError("GroupoidBuilder: composition references an unknown id");
    t.compose[static_cast<std::size_t>(gh.first) * n + static_cast<std::size_t>(gh.second)] = v;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!in_range(t.d[x]) || !in_range(t.r[x]))
      throw PreconditionError("GroupoidBuilder: morphism '" + names_[x] + "' has an unknown endpoint");
    auto& left = t.compose[static_cast<std::size_t>(t.d[x]) * n + x];
    if (left == kUndefined) left = static_cast<MorphismId>(x);
    auto& right = t.compose[x * n + static_cast<std::size_t>(t.r[x])];
    if (right == kUndefined) right = static_cast<MorphismId>(x);
  }
  for (const auto& [x, y] : inverse_) {
    if (!in_range(x) || !in_range(y)) throw PreconditionError("GroupoidBuilder: bad inverse");
    t.inv[static_cast<std::size_t>(x)] = y;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (t.inv[x] != kUndefined) continue;
    for (std::size_t y = 0; y < n; ++y)
      if (t.compose[x * n + y] == t.d[x] && t.compose[y * n + x] == t.r[x]) {
        t.inv[x] = static_cast<MorphismId>(y);
        break;
      }
    // Left unmatched; validation reports INVERSE.
    if (t.inv[x] == kUndefined) t.inv[x] = static_cast<MorphismId>(x);
  }
  for (const auto& [x, y] : leq_) {
    if (!in_range(x) || !in_range(y)) throw PreconditionError("GroupoidBuilder: order references an unknown id");
    t.leq[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] = 1;
  }
  close_order(t.leq, n);
  return OrderedGroupoid(std::move(t));
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(const OrderedGroupoid& g) {
  ValidationReport rep;
  const auto n = static_cast<MorphismId>(g.size());

  for (MorphismId x = 0; x < n; ++x) {
    if (!g.is_identity(g.d(x)) || !g.is_identity(g.r(x)))
      rep.add("DOMAIN", {x}, "domain or range of " + g.name(x) + " is not an identity");
  }
  for (MorphismId e : g.objects())
    if (g.inv(e) != e) rep.add("IDENTITY", {e}, "identity " + g.name(e) + " is not self-inverse");
  if (!rep.ok()) return rep;

  for (MorphismId x = 0; x < n; ++x)
    for (MorphismId y = 0; y < n; ++y) {
      MorphismId xy = g.compose(x, y);
      bool composable = g.r(x) == g.d(y);
      if (composable != (xy != kUndefined)) {
        rep.add("COMPOSE", {x, y},
                composable ? "missing product" : "product defined although ranges differ");
        continue;
      }
      if (xy != kUndefined && (g.d(xy) != g.d(x) || g.r(xy) != g.r(y)))
        rep.add("COMPOSE", {x, y, xy}, "product has wrong domain or range");
    }
  for (MorphismId x = 0; x < n; ++x) {
    if (g.compose(g.d(x), x) != x || g.compose(x, g.r(x)) != x)
      rep.add("IDENTITY", {x}, "identities do not act as units on " + g.name(x));
    MorphismId xi = g.inv(x);
    if (g.compose(x, xi) != g.d(x) || g.compose(xi, x) != g.r(x))
      rep.add("INVERSE", {x, xi}, "inverse law fails for " + g.name(x));
  }
  if (!rep.ok()) return rep;

  for (MorphismId a = 0; a < n; ++a)
    for (MorphismId b = 0; b < n; ++b) {
      MorphismId ab = g.compose(a, b);
      if (ab == kUndefined) continue;
      for (MorphismId c = 0; c < n; ++c) {
        MorphismId bc = g.compose(b, c);
        if (bc == kUndefined) continue;
        if (g.compose(ab, c) != g.compose(a, bc)) rep.add("ASSOC", {a, b, c});
      }
    }

  // Partial order.
  for (MorphismId x = 0; x < n; ++x)
    if (!g.leq(x, x)) rep.add("ORDER-REFL", {x});
  for (MorphismId x = 0; x < n; ++x)
    for (MorphismId y = x + 1; y < n; ++y)
      if (g.leq(x, y) && g.leq(y, x)) rep.add("ORDER-ANTISYM", {x, y});
  for (MorphismId x = 0; x < n; ++x)
    for (MorphismId y = 0; y < n; ++y) {
      if (!g.leq(x, y)) continue;
      for (MorphismId z = 0; z < n; ++z)
        if (g.leq(y, z) && !g.leq(x, z)) rep.add("ORDER-TRANS", {x, y, z});
    }

  for (MorphismId x = 0; x < n; ++x)
    for (MorphismId y = 0; y < n; ++y) {
      if (!g.leq(x, y)) continue;
      if (!g.leq(g.inv(x), g.inv(y))) rep.add("OG1", {x, y});
      if (!g.leq(g.d(x), g.d(y)) || !g.leq(g.r(x), g.r(y))) rep.add("ORDER-IDENT", {x, y});
    }

  for (MorphismId x = 0; x < n; ++x)
    for (MorphismId y = 0; y < n; ++y) {
      if (!g.leq(x, y)) continue;
      for (MorphismId u = 0; u < n; ++u) {
        MorphismId xu = g.compose(x, u);
        if (xu == kUndefined) continue;
        for (MorphismId v = 0; v < n; ++v) {
          if (!g.leq(u, v)) continue;
          MorphismId yv = g.compose(y, v);
          if (yv == kUndefined) continue;
          if (!g.leq(xu, yv)) rep.add("OG2", {x, y, u, v});
        }
      }
    }

  for (MorphismId x = 0; x < n; ++x)
    for (MorphismId e : g.objects()) {
      if (g.leq(e, g.d(x))) {
        std::vector<MorphismId> cands;
        for (MorphismId z = 0; z < n; ++z)
          if (g.d(z) == e && g.leq(z, x)) cands.push_back(z);
        if (cands.size() != 1) {
          std::vector<MorphismId> w{e, x};
          w.insert(w.end(), cands.begin(), cands.end());
          rep.add("OG3", w, cands.empty() ? "no restriction" : "restriction not unique");
        }
      }
      if (g.leq(e, g.r(x))) {
        std::vector<MorphismId> cands;
        for (MorphismId z = 0; z < n; ++z)
          if (g.r(z) == e && g.leq(z, x)) cands.push_back(z);
        if (cands.size() != 1) {
          std::vector<MorphismId> w{x, e};
          w.insert(w.end(), cands.begin(), cands.end());
          rep.add("OG4", w, cands.empty() ? "no corestriction" : "corestriction not unique");
        }
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Functors

ValidationReport validate_functor(const OrderedFunctor& f) {
  ValidationReport rep;
  const auto& a = *f.dom;
  const auto& b = *f.cod;
  if (f.map.size() != a.size()) {
    rep.add("FUNCTOR", {}, "map has wrong length");
    return rep;
  }
  for (MorphismId x : f.map)
    if (x < 0 || static_cast<std::size_t>(x) >= b.size()) {
      rep.add("FUNCTOR", {}, "map references an unknown id");
      return rep;
    }
  const auto n = static_cast<MorphismId>(a.size());
  for (MorphismId x = 0; x < n; ++x) {
    MorphismId fx = f(x);
    if (b.d(fx) != f(a.d(x)) || b.r(fx) != f(a.r(x))) rep.add("FUNCTOR", {x}, "domain/range not preserved");
    if (a.is_identity(x) && !b.is_identity(fx)) rep.add("FUNCTOR", {x}, "identity not preserved");
    for (MorphismId y = 0; y < n; ++y) {
      MorphismId xy = a.compose(x, y);
      if (xy != kUndefined && b.compose(fx, f(y)) != f(xy)) rep.add("FUNCTOR", {x, y}, "composition not preserved");
      if (a.leq(x, y) && !b.leq(fx, f(y))) rep.add("ORDER", {x, y}, "order not preserved");
    }
  }
  return rep;
}

bool is_identity_separating(const OrderedFunctor& f) {
  const auto& objs = f.dom->objects();
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = i + 1; j < objs.size(); ++j)
      if (f(objs[i]) == f(objs[j])) return false;
  return true;
}

bool is_surjective(const OrderedFunctor& f) {
  std::vector<char> hit(f.cod->size(), 0);
  for (MorphismId x : f.map) hit[static_cast<std::size_t>(x)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_isomorphism(const OrderedFunctor& f) {
  if (f.dom->size() != f.cod->size() || !is_surjective(f)) return false;
  if (!validate_functor(f).ok()) return false;
  const auto n = static_cast<MorphismId>(f.dom->size());
  for (MorphismId x = 0; x < n; ++x)
    for (MorphismId y = 0; y < n; ++y)
      if (f.cod->leq(f(x), f(y)) && !f.dom->leq(x, y)) return false;
  return true;
}

OrderedFunctor identity_functor(const GroupoidPtr& g) {
  OrderedFunctor f{g, g, g->morphisms()};
  return f;
}

OrderedFunctor compose(const OrderedFunctor& first, const OrderedFunctor& second) {
  OrderedFunctor f{first.dom, second.cod, {}};
  f.map.reserve(first.map.size());
  for (MorphismId x : first.map) f.map.push_back(second(x));
  return f;
}

// ---------------------------------------------------------------------------
// Constructions

OrderedGroupoid adjoin_identity(const OrderedGroupoid& g) {
  const std::size_t n = g.size();
  const std::size_t m = n + 1;
  const auto& src = g.tables();
  OrderedGroupoid::Tables t;
  std::string top = "I";
  while (g.find(top)) top += "'";
  t.names = src.names;
  t.names.push_back(top);
  t.d = src.d;
  t.r = src.r;
  t.inv = src.inv;
  auto I = static_cast<MorphismId>(n);
  t.d.push_back(I);
  t.r.push_back(I);
  t.inv.push_back(I);
  t.compose.assign(m * m, kUndefined);
  t.leq.assign(m * m, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      t.compose[x * m + y] = src.compose[x * n + y];
      t.leq[x * m + y] = src.leq[x * n + y];
    }
  t.compose[n * m + n] = I;
  t.leq[n * m + n] = 1;
  for (MorphismId e : g.objects()) t.leq[static_cast<std::size_t>(e) * m + n] = 1;
  return OrderedGroupoid(std::move(t));
}

OrderedFunctor adjoin_identity_inclusion(const GroupoidPtr& g, const GroupoidPtr& gi) {
  return OrderedFunctor{g, gi, g->morphisms()};
}

OrderedFunctor adjoin_identity_functor(const OrderedFunctor& phi, const GroupoidPtr& gi,
                                       const GroupoidPtr& qi) {
  OrderedFunctor f{gi, qi, phi.map};
  f.map.push_back(static_cast<MorphismId>(phi.cod->size()));
  return f;
}

SubgroupoidResult subgroupoid(const GroupoidPtr& g, const std::vector<MorphismId>& members) {
  std::vector<MorphismId> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<MorphismId, MorphismId> local;
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<MorphismId>(i);
  auto to_local = [&](MorphismId x) {
    auto it = local.find(x);
    if (it == local.end())
      throw PreconditionError("subgroupoid: member set is not closed (missing " + g->name(x) + ")");
    return it->second;
  };
  const std::size_t k = sorted.size();
  OrderedGroupoid::Tables t;
  t.compose.assign(k * k, kUndefined);
  t.leq.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    MorphismId x = sorted[i];
    t.names.push_back(g->name(x));
    t.d.push_back(to_local(g->d(x)));
    t.r.push_back(to_local(g->r(x)));
    t.inv.push_back(to_local(g->inv(x)));
    for (std::size_t j = 0; j < k; ++j) {
      MorphismId y = sorted[j];
      MorphismId xy = g->compose(x, y);
      if (xy != kUndefined) t.compose[i * k + j] = to_local(xy);
      t.leq[i * k + j] = g->leq(x, y) ? 1 : 0;
    }
  }
  auto sub = std::make_shared<OrderedGroupoid>(std::move(t));
  return SubgroupoidResult{sub, OrderedFunctor{sub, g, sorted}};
}

GroupoidPtr identities_of(const OrderedGroupoid& g) {
  GroupoidBuilder b;
  std::map<MorphismId, MorphismId> local;
  for (MorphismId e : g.objects()) local[e] = b.add_object(g.name(e));
  for (MorphismId e : g.objects())
    for (MorphismId f : g.objects())
      if (g.leq(e, f)) b.set_leq(local[e], local[f]);
  return b.build_shared();
}

std::optional<OrderedFunctor> find_isomorphism(const GroupoidPtr& a, const GroupoidPtr& b) {
  const std::size_t n = a->size();
  if (n != b->size() || a->objects().size() != b->objects().size()) return std::nullopt;
  std::vector<MorphismId> order = a->objects();
  for (std::size_t x = 0; x < n; ++x)
    if (!a->is_identity(static_cast<MorphismId>(x))) order.push_back(static_cast<MorphismId>(x));

  auto signature = [](const OrderedGroupoid& g, MorphismId x) {
    std::size_t below = 0, above = 0;
    for (std::size_t y = 0; y < g.size(); ++y) {
      below += g.leq(static_cast<MorphismId>(y), x);
      above += g.leq(x, static_cast<MorphismId>(y));
    }
    return std::tuple<bool, bool, std::size_t, std::size_t, std::size_t>(
        g.is_identity(x), g.d(x) == g.r(x), below, above, g.local_group(g.d(x)).size());
  };

  std::vector<MorphismId> map(n, kUndefined);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    MorphismId x = order[pos];
    auto sx = signature(*a, x);
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      auto y = static_cast<MorphismId>(cand);
      if (signature(*b, y) != sx) continue;
      if (!a->is_identity(x) && (map[static_cast<std::size_t>(a->d(x))] != b->d(y) ||
                                 map[static_cast<std::size_t>(a->r(x))] != b->r(y)))
        continue;
      map[static_cast<std::size_t>(x)] = y;
      bool ok = true;
      for (std::size_t p = 0; p <= pos && ok; ++p) {
        MorphismId u = order[p];
        MorphismId fu = map[static_cast<std::size_t>(u)];
        if (a->leq(x, u) != b->leq(y, fu) || a->leq(u, x) != b->leq(fu, y)) ok = false;
        MorphismId xu = a->compose(x, u), ux = a->compose(u, x);
        if (ok && xu != kUndefined && map[static_cast<std::size_t>(xu)] != kUndefined &&
            b->compose(y, fu) != map[static_cast<std::size_t>(xu)])
          ok = false;
        if (ok && ux != kUndefined && map[static_cast<std::size_t>(ux)] != kUndefined &&
            b->compose(fu, y) != map[static_cast<std::size_t>(ux)])
          ok = false;
        // Products of earlier pairs whose value is x itself.
        for (std::size_t q = 0; q <= pos && ok; ++q) {
          MorphismId w = order[q];
          MorphismId uw = a->compose(u, w);
          if (uw == x && b->compose(fu, map[static_cast<std::size_t>(w)]) != y) ok = false;
        }
      }
      if (ok) {
        used[cand] = 1;
        if (extend(pos + 1)) return true;
        used[cand] = 0;
      }
      map[static_cast<std::size_t>(x)] = kUndefined;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  OrderedFunctor f{a, b, map};
  if (!is_isomorphism(f)) return std::nullopt;
  return f;
}

std::string describe(const OrderedGroupoid& g, const ValidationReport& report) {
  std::ostringstream os;
  for (const auto& v : report.violations()) {
    os << v.axiom << ":";
    for (MorphismId w : v.witnesses) {
      os << ' ';
      if (w >= 0 && static_cast<std::size_t>(w) < g.size())
        os << g.name(w);
      else
        os << '#' << w;
    }
    if (!v.detail.empty()) os << " (" << v.detail << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace ogkit
