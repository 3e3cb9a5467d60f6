#include "ogkit/quotients.hpp"

#include "ogkit/error.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>

namespace ogkit {

using zlin::Vector;

namespace {

std::size_t ucast(int x) { return static_cast<std::size_t>(x); }

std::vector<char> membership(const OrderedGroupoid& g, const std::vector<MorphismId>& members) {
  std::vector<char> in(g.size(), 0);
  for (MorphismId m : members) {
    if (m < 0 || ucast(m) >= g.size()) throw PreconditionError("member id out of range");
    in[ucast(m)] = 1;
  }
  return in;
}

// R(g, h): a g b <= h for some a, b in N.
std::vector<char> below_relation(const OrderedGroupoid& g, const std::vector<char>& in) {
  const std::size_t n = g.size();
  std::vector<char> rel(n * n, 0);
  for (MorphismId x = 0; x < static_cast<MorphismId>(n); ++x) {
    std::vector<MorphismId> products;
    for (MorphismId a = 0; a < static_cast<MorphismId>(n); ++a) {
      if (!in[ucast(a)] || g.r(a) != g.d(x)) continue;
      MorphismId ax = g.mul(a, x);
      for (MorphismId b = 0; b < static_cast<MorphismId>(n); ++b)
        if (in[ucast(b)] && g.d(b) == g.r(x)) products.push_back(g.mul(ax, b));
    }
    for (MorphismId y = 0; y < static_cast<MorphismId>(n); ++y)
      for (MorphismId p : products)
        if (g.leq(p, y)) {
          rel[ucast(x) * n + ucast(y)] = 1;
          break;
        }
  }
  return rel;
}

std::string element_string(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s.empty() ? "0" : s;
}

}  // namespace

ValidationReport is_normal(const OrderedGroupoid& g, const std::vector<MorphismId>& members) {
  ValidationReport rep;
  auto in = membership(g, members);
  const auto n = static_cast<MorphismId>(g.size());
  for (MorphismId x = 0; x < n; ++x) {
    if (!in[ucast(x)]) continue;
    if (!in[ucast(g.inv(x))] || !in[ucast(g.d(x))] || !in[ucast(g.r(x))]) rep.add("SUBGROUPOID", {x}, "inverse or an identity not in the subset");
    for (MorphismId y = 0; y < n; ++y) {
      MorphismId xy = g.compose(x, y);
      if (in[ucast(y)] && xy != kUndefined && !in[ucast(xy)]) rep.add("SUBGROUPOID", {x, y}, "composite not in the subset");
    }
  }
  for (MorphismId e : g.objects())
    if (!in[ucast(e)]) rep.add("N01", {e}, "object " + g.name(e) + " missing");
  for (MorphismId x = 0; x < n; ++x) {
    if (!in[ucast(x)]) continue;
    for (MorphismId e : g.objects())
      if (g.leq(e, g.d(x)) && !in[ucast(g.restriction(e, x))]) rep.add("N02", {x, e});
  }
  std::vector<char> bounded(g.size() * g.size(), 0);
  for (MorphismId k = 0; k < n; ++k)
    for (MorphismId h = 0; h < n; ++h)
      for (MorphismId up = 0; up < n; ++up)
        if (g.leq(k, up) && g.leq(h, up)) {
          bounded[ucast(k) * g.size() + ucast(h)] = 1;
          break;
        }
  for (MorphismId x = 0; x < n; ++x) {
    if (!in[ucast(x)]) continue;
    for (MorphismId h = 0; h < n; ++h) {
      if (g.d(h) != g.d(x)) continue;
      MorphismId hx = g.mul(g.inv(h), x);
      for (MorphismId k = 0; k < n; ++k) {
        if (g.d(k) != g.r(x) || !bounded[ucast(k) * g.size() + ucast(h)]) continue;
        MorphismId c = g.mul(hx, k);
        if (!in[ucast(c)]) rep.add("N03", {x, k, h}, "conjugate " + g.name(c) + " not in N");
      }
    }
  }
  return rep;
}

QuotientResult quotient(const GroupoidPtr& gp, const std::vector<MorphismId>& members) {
  const OrderedGroupoid& g = *gp;
  const std::size_t n = g.size();
  auto in = membership(g, members);
  auto rel = below_relation(g, in);
  auto R = [&](MorphismId x, MorphismId y) { return rel[ucast(x) * n + ucast(y)] != 0; };

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (MorphismId x = 0; x < static_cast<MorphismId>(n); ++x)
    for (MorphismId y = x + 1; y < static_cast<MorphismId>(n); ++y)
      if (R(x, y) && R(y, x)) parent[find(ucast(y))] = find(ucast(x));

  std::map<std::size_t, int> class_index;
  std::vector<int> cls(n);
  std::vector<MorphismId> rep_of;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t root = find(x);
    auto it = class_index.find(root);
    if (it == class_index.end()) {
      it = class_index.emplace(root, static_cast<int>(rep_of.size())).first;
      rep_of.push_back(static_cast<MorphismId>(x));
    }
    cls[x] = it->second;
  }
  const std::size_t k = rep_of.size();
  std::vector<std::vector<MorphismId>> members_of(k);
  for (std::size_t x = 0; x < n; ++x) members_of[ucast(cls[x])].push_back(static_cast<MorphismId>(x));

  for (const auto& c : members_of)
    for (MorphismId x : c)
      for (MorphismId y : c) {
        if (!(R(x, y) && R(y, x))) throw AxiomError("quotient: class relation is not transitive (N not normal?)");
        if (cls[ucast(g.d(x))] != cls[ucast(g.d(y))] || cls[ucast(g.r(x))] != cls[ucast(g.r(y))] ||
            cls[ucast(g.inv(x))] != cls[ucast(g.inv(y))])
          throw AxiomError("quotient: domain, range or inverse not constant on a class");
      }

  OrderedGroupoid::Tables t;
  t.compose.assign(k * k, kUndefined);
  t.leq.assign(k * k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    MorphismId x = rep_of[c];
    t.names.push_back(members_of[c].size() == 1 ? g.name(x) : "[" + g.name(x) + "]");
    t.d.push_back(cls[ucast(g.d(x))]);
    t.r.push_back(cls[ucast(g.r(x))]);
    t.inv.push_back(cls[ucast(g.inv(x))]);
  }
  for (std::size_t c1 = 0; c1 < k; ++c1)
    for (std::size_t c2 = 0; c2 < k; ++c2) {
      bool first = R(rep_of[c1], rep_of[c2]);
      for (MorphismId x : members_of[c1])
        for (MorphismId y : members_of[c2])
          if (R(x, y) != first) throw AxiomError("quotient: order depends on representatives");
      t.leq[c1 * k + c2] = first ? 1 : 0;
    }
  for (std::size_t c1 = 0; c1 < k; ++c1)
    for (std::size_t c2 = 0; c2 < k; ++c2) {
      if (t.r[c1] != t.d[c2]) continue;
      int result = -1;
      for (MorphismId x : members_of[c1])
        for (MorphismId y : members_of[c2])
          for (MorphismId p = 0; p < static_cast<MorphismId>(n); ++p) {
            if (!in[ucast(p)] || g.r(p) != g.d(y) || !g.leq(g.d(p), g.r(x))) continue;
            MorphismId prod = g.mul(g.mul(g.corestriction(x, g.d(p)), p), y);
            if (result == -1)
              result = cls[ucast(prod)];
            else if (result != cls[ucast(prod)])
              throw AxiomError("quotient: composition depends on the chosen representatives");
          }
      if (result == -1) throw AxiomError("quotient: no connecting element of N for a composable pair");
      t.compose[c1 * k + c2] = result;
    }
  auto q = std::make_shared<OrderedGroupoid>(std::move(t));
  std::vector<MorphismId> map(cls.begin(), cls.end());
  return QuotientResult{q, OrderedFunctor{gp, q, map}};
}

bool simplified_relation_agrees(const OrderedGroupoid& g, const std::vector<MorphismId>& members) {
  const std::size_t n = g.size();
  auto in = membership(g, members);
  auto rel = below_relation(g, in);
  for (MorphismId x = 0; x < static_cast<MorphismId>(n); ++x)
    for (MorphismId y = 0; y < static_cast<MorphismId>(n); ++y) {
      bool general = rel[ucast(x) * n + ucast(y)] && rel[ucast(y) * n + ucast(x)];
      bool simple = false;
      for (MorphismId a = 0; a < static_cast<MorphismId>(n) && !simple; ++a) {
        if (!in[ucast(a)] || g.r(a) != g.d(x)) continue;
        MorphismId ax = g.mul(a, x);
        for (MorphismId b = 0; b < static_cast<MorphismId>(n) && !simple; ++b)
          if (in[ucast(b)] && g.d(b) == g.r(x) && g.mul(ax, b) == y) simple = true;
      }
      if (general != simple) return false;
    }
  return true;
}

std::vector<MorphismId> kernel_of(const OrderedFunctor& phi) {
  std::vector<MorphismId> out;
  for (MorphismId x = 0; x < static_cast<MorphismId>(phi.dom->size()); ++x)
    if (phi.cod->is_identity(phi(x))) out.push_back(x);
  return out;
}

ValidationReport validate_extension(const Extension& e) {
  ValidationReport rep = validate_functor(e.phi);
  if (!rep.ok()) return rep;
  if (!is_surjective(e.phi)) rep.add("SURJECTIVE", {});
  if (!is_identity_separating(e.phi)) rep.add("IDENTITY-SEPARATING", {});
  for (MorphismId n : e.kernel())
    if (e.G->d(n) != e.G->r(n)) rep.add("UNION-OF-GROUPS", {n}, e.G->name(n) + " is not a loop");
  return rep;
}

MorphismId ModuleExtension::kernel_element(MorphismId x, const Vector& a) const {
  const zlin::AbGroup& grp = A.group(q_object(ext.phi(x)));
  for (MorphismId n : ext.G->local_group(x))
    if (kernel_value[ucast(n)] && grp.equal(*kernel_value[ucast(n)], a)) return n;
  throw PreconditionError("kernel_element: no kernel element with this value");
}

ObjectId ModuleExtension::q_object(MorphismId q_identity) const {
  auto o = A.base->object_of(q_identity);
  if (!o) throw PreconditionError("q_object: not an identity of Q");
  return *o;
}

ValidationReport validate_module_extension(const ModuleExtension& e) {
  ValidationReport rep = validate_extension(e.ext);
  if (!rep.ok()) return rep;
  rep.merge(validate_module(e.A));
  if (!rep.ok()) return rep;
  const OrderedGroupoid& g = *e.ext.G;
  const Category& l = *e.A.base;
  if (e.kernel_value.size() != g.size()) {
    rep.add("KERNEL-VALUE", {}, "one entry per morphism of G required");
    return rep;
  }
  std::vector<char> in(g.size(), 0);
  for (MorphismId n : e.ext.kernel()) in[ucast(n)] = 1;
  for (MorphismId x = 0; x < static_cast<MorphismId>(g.size()); ++x)
    if (in[ucast(x)] != static_cast<char>(e.kernel_value[ucast(x)].has_value()))
      rep.add("KERNEL-VALUE", {x}, "value present exactly on the kernel");
  if (!rep.ok()) return rep;
  auto value = [&](MorphismId n) -> const Vector& { return *e.kernel_value[ucast(n)]; };

  for (MorphismId x : g.objects()) {
    const zlin::AbGroup& grp = e.A.group(e.q_object(e.ext.phi(x)));
    std::vector<MorphismId> nx;
    for (MorphismId n : g.local_group(x))
      if (in[ucast(n)]) nx.push_back(n);
    std::vector<Vector> seen;
    for (MorphismId n : nx) {
      if (value(n).size() != grp.generators()) {
        rep.add("KERNEL-VALUE", {n}, "value has the wrong length");
        return rep;
      }
      Vector v = grp.reduce(value(n));
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) rep.add("KERNEL-VALUE", {n}, "not injective");
      seen.push_back(v);
    }
    auto order = grp.order();
    if (!order || *order != seen.size()) rep.add("KERNEL-VALUE", {x}, "not onto the stalk");
    for (MorphismId a : nx)
      for (MorphismId b : nx)
        if (!grp.equal(value(g.mul(a, b)), grp.add(value(a), value(b)))) rep.add("ADDITIVE", {a, b});
  }
  if (!rep.ok()) return rep;
  for (MorphismId x = 0; x < static_cast<MorphismId>(g.size()); ++x) {
    MorphismId xd = g.d(x);
    ArrowId arrow = *l.arrow_of(e.ext.phi(xd), e.ext.phi(x));
    for (MorphismId n : g.local_group(xd)) {
      if (!in[ucast(n)]) continue;
      MorphismId conj = g.mul(g.mul(g.inv(x), n), x);
      const zlin::AbGroup& grp = e.A.group(l.cod(arrow));
      if (!grp.equal(value(conj), e.A.act(value(n), arrow))) rep.add("CONJUGATION", {x, n});
    }
  }
  for (MorphismId n = 0; n < static_cast<MorphismId>(g.size()); ++n) {
    if (!in[ucast(n)]) continue;
    for (MorphismId y : g.objects()) {
      if (!g.leq(y, g.d(n))) continue;
      ArrowId arrow = *l.arrow_of(e.ext.phi(g.d(n)), e.ext.phi(y));
      if (!e.A.group(l.cod(arrow)).equal(value(g.restriction(y, n)), e.A.act(value(n), arrow)))
        rep.add("RESTRICTION", {n, y});
    }
  }
  return rep;
}

ModuleExtension semidirect(const GroupoidPtr& qp, const GModule& a) {
  const OrderedGroupoid& q = *qp;
  const Category& l = *a.base;
  if (!l.source() || l.source()->size() != q.size()) throw PreconditionError("semidirect: module is not over L(Q)");
  std::vector<std::vector<Vector>> elems(l.num_objects());
  for (ObjectId o = 0; o < static_cast<ObjectId>(l.num_objects()); ++o) {
    if (!a.group(o).is_finite()) throw UnsupportedError("semidirect: stalks must be finite");
    elems[ucast(o)] = a.group(o).elements();
  }
  auto obj = [&](MorphismId e) { return *l.object_of(e); };
  // Arrows (q, a) in order of q then a; identities first so that objects
  // keep small ids is not required.
  std::vector<std::pair<MorphismId, std::size_t>> arrows;
  std::map<std::pair<MorphismId, Vector>, MorphismId> index;
  for (MorphismId x = 0; x < static_cast<MorphismId>(q.size()); ++x) {
    const auto& es = elems[ucast(obj(q.r(x)))];
    for (std::size_t i = 0; i < es.size(); ++i) {
      index[{x, es[i]}] = static_cast<MorphismId>(arrows.size());
      arrows.emplace_back(x, i);
    }
  }
  auto elem = [&](MorphismId id) -> const Vector& {
    auto [x, i] = arrows[ucast(id)];
    return elems[ucast(obj(q.r(x)))][i];
  };
  auto lookup = [&](MorphismId x, const Vector& v) {
    return index.at({x, a.group(obj(q.r(x))).reduce(v)});
  };
  const std::size_t m = arrows.size();
  OrderedGroupoid::Tables t;
  t.compose.assign(m * m, kUndefined);
  t.leq.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    auto [x, _] = arrows[i];
    const Vector& v = elem(static_cast<MorphismId>(i));
    t.names.push_back("(" + q.name(x) + ";" + element_string(v) + ")");
    Vector zero = a.group(obj(q.d(x))).zero_element();
    t.d.push_back(lookup(q.d(x), zero));
    t.r.push_back(lookup(q.r(x), a.group(obj(q.r(x))).zero_element()));
    MorphismId xi = q.inv(x);
    Vector w = a.group(obj(q.r(xi))).negate(a.act(v, *l.arrow_of(q.d(xi), xi)));
    t.inv.push_back(lookup(xi, w));
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto [x, _i] = arrows[i];
    for (std::size_t j = 0; j < m; ++j) {
      auto [y, _j] = arrows[j];
      if (q.r(x) == q.d(y)) {
        const zlin::AbGroup& grp = a.group(obj(q.r(y)));
        Vector v = grp.add(a.act(elem(static_cast<MorphismId>(i)), *l.arrow_of(q.d(y), y)),
                           elem(static_cast<MorphismId>(j)));
        t.compose[i * m + j] = lookup(q.mul(x, y), v);
      }
      if (q.leq(x, y)) {
        Vector down = a.act(elem(static_cast<MorphismId>(j)), *l.arrow_of(q.r(y), q.r(x)));
        if (a.group(obj(q.r(x))).equal(down, elem(static_cast<MorphismId>(i)))) t.leq[i * m + j] = 1;
      }
    }
  }
  auto g = std::make_shared<OrderedGroupoid>(std::move(t));
  ModuleExtension out{Extension{g, qp, OrderedFunctor{g, qp, {}}}, a, {}};
  for (std::size_t i = 0; i < m; ++i) {
    auto [x, _] = arrows[i];
    out.ext.phi.map.push_back(x);
    if (q.is_identity(x))
      out.kernel_value.push_back(elem(static_cast<MorphismId>(i)));
    else
      out.kernel_value.push_back(std::nullopt);
  }
  return out;
}

MorphismId semidirect_arrow(const ModuleExtension& sd, MorphismId q, const Vector& a) {
  const OrderedGroupoid& s = *sd.ext.G;
  const zlin::AbGroup& grp = sd.A.group(sd.q_object(sd.ext.Q->r(q)));
  auto elems = grp.elements();
  auto it = std::find(elems.begin(), elems.end(), grp.reduce(a));
  if (it == elems.end()) throw PreconditionError("semidirect_arrow: not an element of the stalk");
  for (MorphismId x = 0; x < static_cast<MorphismId>(s.size()); ++x)
    if (sd.ext.phi(x) == q) return x + static_cast<MorphismId>(it - elems.begin());
  throw PreconditionError("semidirect_arrow: no arrow over q");
}

Vector semidirect_value(const ModuleExtension& sd, MorphismId x) {
  MorphismId q = sd.ext.phi(x);
  MorphismId first = x;
  while (first > 0 && sd.ext.phi(first - 1) == q) --first;
  return sd.A.group(sd.q_object(sd.ext.Q->r(q))).elements().at(static_cast<std::size_t>(x - first));
}

}  // namespace ogkit
