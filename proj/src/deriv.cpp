#include "ogkit/deriv.hpp"

#include "ogkit/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ogkit {

using zlin::AbGroup;
using zlin::AbHom;
using zlin::IntMatrix;
using zlin::Subquotient;
using zlin::Vector;

namespace {

std::size_t ucast(int x) { return static_cast<std::size_t>(x); }

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

const OrderedGroupoid& source_of(const Category& l) {
  if (!l.source()) throw PreconditionError("base category is not L(Q)");
  return *l.source();
}

void check_base(const OrderedFunctor& theta, const Category& lq) {
  if (source_of(lq).size() != theta.cod->size()) throw PreconditionError("module is not over L(Q) for Q = cod(theta)");
}

// q * k = (q|k.d) k in Q.
MorphismId star(const OrderedGroupoid& q, MorphismId a, MorphismId b) {
  return q.mul(q.corestriction(a, q.d(b)), b);
}

ObjectId obj(const Category& l, MorphismId e) { return *l.object_of(e); }

// Stalk of B a derivation value at g lives in.
ObjectId value_object(const Category& lq, const OrderedFunctor& theta, MorphismId g) {
  return obj(lq, theta(theta.dom->r(g)));
}

}  // namespace

ArrowId order_arrow(const Category& lq, const OrderedFunctor& theta, MorphismId g, MorphismId h) {
  const OrderedGroupoid& G = *theta.dom;
  return *lq.arrow_of(theta(G.r(h)), theta(G.r(g)));
}

ValidationReport validate_derivation(const OrderedFunctor& theta, const GModule& b, const DerivationValues& f) {
  ValidationReport rep;
  const OrderedGroupoid& G = *theta.dom;
  const OrderedGroupoid& Q = *theta.cod;
  const Category& lq = *b.base;
  check_base(theta, lq);
  if (f.size() != G.size()) {
    rep.add("STALK", {}, "one value per morphism required");
    return rep;
  }
  for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g)
    if (f[ucast(g)].size() != b.group(value_object(lq, theta, g)).generators()) rep.add("STALK", {g});
  if (!rep.ok()) return rep;
  for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g)
    for (MorphismId h = 0; h < static_cast<MorphismId>(G.size()); ++h) {
      if (G.r(g) == G.d(h)) {
        ArrowId a = *lq.arrow_of(Q.d(theta(h)), theta(h));
        const AbGroup& t = b.group(value_object(lq, theta, h));
        if (!t.equal(f[ucast(G.mul(g, h))], t.add(b.act(f[ucast(g)], a), f[ucast(h)]))) rep.add("COCYCLE", {g, h});
      }
      if (G.leq(g, h)) {
        const AbGroup& t = b.group(value_object(lq, theta, g));
        if (!t.equal(f[ucast(g)], b.act(f[ucast(h)], order_arrow(lq, theta, g, h)))) rep.add("ORDER", {g, h});
      }
    }
  return rep;
}

DerivationValues DerivationGroup::values_of(const Vector& canonical) const {
  Vector rep = space.representative(canonical);
  const OrderedGroupoid& G = *theta.dom;
  const Category& lq = *target->base;
  DerivationValues out;
  for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g) {
    const AbGroup& t = target->group(value_object(lq, theta, g));
    Vector v(rep.begin() + static_cast<std::ptrdiff_t>(offsets[ucast(g)]),
             rep.begin() + static_cast<std::ptrdiff_t>(offsets[ucast(g)] + t.generators()));
    out.push_back(t.reduce(v));
  }
  return out;
}

Vector DerivationGroup::class_of(const DerivationValues& f) const {
  Vector flat(space.ambient_dim(), 0);
  for (std::size_t g = 0; g < f.size(); ++g)
    std::copy(f[g].begin(), f[g].end(), flat.begin() + static_cast<std::ptrdiff_t>(offsets[g]));
  return group().reduce(space.class_of(flat));
}

std::vector<DerivationValues> DerivationGroup::enumerate() const {
  if (!group().is_finite()) throw UnsupportedError("derivations: the group of derivations is infinite");
  std::vector<DerivationValues> out;
  for (const auto& x : group().elements()) out.push_back(values_of(x));
  return out;
}

DerivationGroup derivations(const OrderedFunctor& theta, const GModule& b) {
  const OrderedGroupoid& G = *theta.dom;
  const OrderedGroupoid& Q = *theta.cod;
  const Category& lq = *b.base;
  check_base(theta, lq);
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  Vector moduli;
  for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g) {
    offsets.push_back(total);
    const AbGroup& t = b.group(value_object(lq, theta, g));
    total += t.generators();
    moduli.insert(moduli.end(), t.factors().begin(), t.factors().end());
  }
  std::vector<Vector> rows;
  Vector row_moduli;
  // Adds rows x_lhs - A x_src - x_extra == 0 in the stalk t.
  auto add_rows = [&](const AbGroup& t, MorphismId lhs, const IntMatrix& a, MorphismId src,
                      std::optional<MorphismId> extra) {
    for (std::size_t i = 0; i < t.generators(); ++i) {
      Vector row(total, 0);
      row[offsets[ucast(lhs)] + i] += 1;
      for (std::size_t j = 0; j < a.cols(); ++j) row[offsets[ucast(src)] + j] -= a(i, j);
      if (extra) row[offsets[ucast(*extra)] + i] -= 1;
      rows.push_back(std::move(row));
      row_moduli.push_back(t.factors()[i]);
    }
  };
  for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g)
    for (MorphismId h = 0; h < static_cast<MorphismId>(G.size()); ++h) {
      if (G.r(g) == G.d(h)) {
        ArrowId a = *lq.arrow_of(Q.d(theta(h)), theta(h));
        add_rows(b.group(value_object(lq, theta, h)), G.mul(g, h), b.action(a).matrix, g, h);
      }
      if (G.leq(g, h) && g != h)
        add_rows(b.group(value_object(lq, theta, g)), g, b.action(order_arrow(lq, theta, g, h)).matrix, h,
                 std::nullopt);
    }
  IntMatrix cond = IntMatrix::from_rows(rows, total);
  return DerivationGroup{&b, theta, Subquotient(total, cond, row_moduli, moduli, IntMatrix(total, 0)),
                         std::move(offsets)};
}

std::size_t DerivedModule::generator_index(ObjectId o, MorphismId g, MorphismId q) const {
  const auto& gens = generators.at(ucast(o));
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].first == g && gens[i].second == q) return i;
  throw PreconditionError("generator_index: (g, q) is not a generator");
}

Vector DerivedModule::generator_class(MorphismId g, MorphismId q) const {
  const Category& lq = *module.base;
  ObjectId o = obj(lq, theta.cod->r(q));
  std::size_t n = generators[ucast(o)].size();
  return module.class_of(o, unit(n, generator_index(o, g, q)));
}

DerivedModule derived_module(const OrderedFunctor& theta, const CategoryPtr& lq) {
  const OrderedGroupoid& G = *theta.dom;
  const OrderedGroupoid& Q = *theta.cod;
  check_base(theta, *lq);
  DerivedModule out;
  out.theta = theta;
  const std::size_t nobj = lq->num_objects();
  out.generators.resize(nobj);
  std::vector<std::map<std::pair<MorphismId, MorphismId>, std::size_t>> index(nobj);
  for (MorphismId q = 0; q < static_cast<MorphismId>(Q.size()); ++q)
    for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g)
      if (Q.leq(Q.d(q), theta(G.r(g)))) {
        ObjectId o = obj(*lq, Q.r(q));
        index[ucast(o)][{g, q}] = out.generators[ucast(o)].size();
        out.generators[ucast(o)].emplace_back(g, q);
      }
  std::vector<Subquotient> coords;
  for (std::size_t o = 0; o < nobj; ++o) {
    const std::size_t n = out.generators[o].size();
    std::vector<Vector> rels;
    // (g*h, q) - (g, h theta * q) - (h, q) for g.r >= h.d, (h.r) theta >= q.d.
    for (const auto& [h, q] : out.generators[o])
      for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g) {
        if (!G.leq(G.d(h), G.r(g))) continue;
        Vector rel(n, 0);
        rel[index[o].at({star(G, g, h), q})] += 1;
        rel[index[o].at({g, star(Q, theta(h), q)})] -= 1;
        rel[index[o].at({h, q})] -= 1;
        rels.push_back(std::move(rel));
      }
    IntMatrix r = rels.empty() ? IntMatrix(n, 0) : IntMatrix::from_columns(rels, n);
    coords.emplace_back(n, IntMatrix(0, n), Vector{}, Vector(n, 0), r);
    out.relations.push_back(std::move(r));
  }
  out.module = realize(lq, std::move(coords), [&](ArrowId f) {
    auto [e, k] = lq->arrow_pair(f);
    const auto& dom = out.generators[ucast(obj(*lq, e))];
    ObjectId to = obj(*lq, Q.r(k));
    IntMatrix a(out.generators[ucast(to)].size(), dom.size());
    for (std::size_t j = 0; j < dom.size(); ++j) {
      auto [g, q] = dom[j];
      a(index[ucast(to)].at({g, star(Q, q, k)}), j) = 1;
    }
    return a;
  });
  for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g)
    out.delta.push_back(out.generator_class(g, theta(G.r(g))));
  return out;
}

AbHom induced_hom(const GModule& dom, ObjectId o, const IntMatrix& relations, const AbGroup& cod,
                  const IntMatrix& images) {
  for (std::size_t c = 0; c < relations.cols(); ++c)
    if (!cod.is_zero(images * relations.column(c)))
      throw InternalError("induced_hom: a defining relation is not sent to zero");
  const AbGroup& d = dom.group(o);
  IntMatrix m(cod.generators(), d.generators());
  for (std::size_t j = 0; j < d.generators(); ++j)
    m.set_column(j, cod.reduce(images * dom.representative(o, unit(d.generators(), j))));
  return AbHom{d, cod, m};
}

GMap factor_through(const DerivedModule& d, const GModule& a, const DerivationValues& f) {
  if (!validate_derivation(d.theta, a, f).ok()) throw PreconditionError("factor_through: not a derivation");
  const Category& lq = *a.base;
  const OrderedGroupoid& G = *d.theta.dom;
  GMap out;
  for (ObjectId o = 0; o < static_cast<ObjectId>(lq.num_objects()); ++o) {
    const AbGroup& cod = a.group(o);
    const auto& gens = d.generators[ucast(o)];
    IntMatrix images(cod.generators(), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      auto [g, q] = gens[j];
      images.set_column(j, a.act(f[ucast(g)], *lq.arrow_of(d.theta(G.r(g)), q)));
    }
    out.components.push_back(induced_hom(d.module, o, d.relations[ucast(o)], cod, images));
  }
  return out;
}

DerivationValues augmentation_derivation(const GModule& zg, const SubmoduleResult& kg) {
  const Category& l = *zg.base;
  const OrderedGroupoid& G = source_of(l);
  DerivationValues out;
  for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g) {
    ObjectId o = obj(l, G.r(g));
    Vector v(zg.coords[ucast(o)].ambient_dim(), 0);
    v[adjoint_basis_index(G, g)] += 1;
    v[adjoint_basis_index(G, G.r(g))] -= 1;
    out.push_back(kg.module.class_of(o, zg.class_of(o, v)));
  }
  return out;
}

std::vector<MorphismId> object_lifts(const Extension& e, const Category& lq) {
  std::vector<MorphismId> out(lq.num_objects(), -1);
  for (MorphismId x : e.G->objects()) {
    ObjectId o = obj(lq, e.phi(x));
    if (out[ucast(o)] != -1) throw PreconditionError("object_lifts: phi is not identity-separating");
    out[ucast(o)] = x;
  }
  for (MorphismId x : out)
    if (x == -1) throw PreconditionError("object_lifts: phi is not surjective on objects");
  return out;
}

Abelianisation abelianisation(const Extension& e, const CategoryPtr& lq) {
  const OrderedGroupoid& G = *e.G;
  const OrderedGroupoid& Q = *e.Q;
  check_base(e.phi, *lq);
  auto lifts = object_lifts(e, *lq);
  Abelianisation out;
  std::vector<char> in(G.size(), 0);
  for (MorphismId n : e.kernel()) {
    if (G.d(n) != G.r(n)) throw PreconditionError("abelianisation: kernel is not a union of groups");
    in[ucast(n)] = 1;
  }
  std::vector<std::map<MorphismId, std::size_t>> index(lq->num_objects());
  std::vector<Subquotient> coords;
  for (ObjectId o = 0; o < static_cast<ObjectId>(lq->num_objects()); ++o) {
    std::vector<MorphismId> gens;
    for (MorphismId n : G.local_group(lifts[ucast(o)]))
      if (in[ucast(n)]) {
        index[ucast(o)][n] = gens.size();
        gens.push_back(n);
      }
    const std::size_t k = gens.size();
    std::vector<Vector> rels;
    for (MorphismId a : gens)
      for (MorphismId b : gens) {
        Vector rel(k, 0);
        rel[index[ucast(o)].at(G.mul(a, b))] += 1;
        rel[index[ucast(o)].at(a)] -= 1;
        rel[index[ucast(o)].at(b)] -= 1;
        rels.push_back(std::move(rel));
      }
    IntMatrix r = IntMatrix::from_columns(rels, k);
    coords.emplace_back(k, IntMatrix(0, k), Vector{}, Vector(k, 0), r);
    out.relations.push_back(std::move(r));
    out.generators.push_back(std::move(gens));
  }
  auto ambient = [&](ArrowId f, MorphismId lift) {
    auto [eq, k] = lq->arrow_pair(f);
    ObjectId from = obj(*lq, eq), to = obj(*lq, Q.r(k));
    MorphismId y = G.d(lift);
    const auto& gens = out.generators[ucast(from)];
    IntMatrix a(out.generators[ucast(to)].size(), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      MorphismId c = G.mul(G.mul(G.inv(lift), G.restriction(y, gens[j])), lift);
      a(index[ucast(to)].at(c), j) = 1;
    }
    return a;
  };
  std::vector<IntMatrix> chosen;
  for (ArrowId f = 0; f < static_cast<ArrowId>(lq->num_arrows()); ++f) {
    auto [eq, k] = lq->arrow_pair(f);
    ObjectId from = obj(*lq, eq), to = obj(*lq, Q.r(k));
    MorphismId y = lifts[ucast(obj(*lq, Q.d(k)))];
    if (!G.leq(y, lifts[ucast(from)]))
      throw AxiomError("abelianisation: lift of " + Q.name(Q.d(k)) + " is not below the lift of " + Q.name(eq));
    std::optional<IntMatrix> first;
    std::vector<Vector> first_classes;
    for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g) {
      if (e.phi(g) != k) continue;
      IntMatrix a = ambient(f, g);
      std::vector<Vector> classes;
      for (std::size_t j = 0; j < a.cols(); ++j) classes.push_back(coords[ucast(to)].class_of(a.column(j)));
      if (!first) {
        first = a;
        first_classes = classes;
      } else {
        for (std::size_t j = 0; j < classes.size(); ++j)
          if (!coords[ucast(to)].group().equal(classes[j], first_classes[j]))
            throw AxiomError("abelianisation: the action of " + lq->arrow_name(f) + " depends on the lift");
      }
    }
    if (!first) throw PreconditionError("abelianisation: phi is not surjective");
    chosen.push_back(*first);
  }
  out.module = realize(lq, std::move(coords), [&](ArrowId f) { return chosen[ucast(f)]; });
  out.alpha.assign(G.size(), std::nullopt);
  for (ObjectId o = 0; o < static_cast<ObjectId>(lq->num_objects()); ++o) {
    const auto& gens = out.generators[ucast(o)];
    for (std::size_t j = 0; j < gens.size(); ++j) out.alpha[ucast(gens[j])] = out.module.class_of(o, unit(gens.size(), j));
  }
  return out;
}

Extension identities_extension(const GroupoidPtr& n) {
  if (!n->is_union_of_groups()) throw PreconditionError("identities_extension: not a union of groups");
  GroupoidPtr n0 = identities_of(*n);
  const auto& objs = n->objects();
  std::vector<MorphismId> map;
  for (MorphismId x = 0; x < static_cast<MorphismId>(n->size()); ++x)
    map.push_back(static_cast<MorphismId>(std::find(objs.begin(), objs.end(), n->d(x)) - objs.begin()));
  return Extension{n, n0, OrderedFunctor{n, n0, std::move(map)}};
}

std::vector<MorphismId> default_transversal(const Extension& e) {
  const OrderedGroupoid& G = *e.G;
  const OrderedGroupoid& Q = *e.Q;
  std::vector<MorphismId> t(Q.size(), -1);
  for (MorphismId x : G.objects()) t[ucast(e.phi(x))] = x;
  for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g)
    if (t[ucast(e.phi(g))] == -1) t[ucast(e.phi(g))] = g;
  return t;
}

std::vector<std::vector<MorphismId>> all_transversals(const Extension& e, std::size_t limit) {
  const OrderedGroupoid& G = *e.G;
  const OrderedGroupoid& Q = *e.Q;
  std::vector<std::vector<MorphismId>> choices(Q.size());
  for (MorphismId x : G.objects()) choices[ucast(e.phi(x))] = {x};
  for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g)
    if (!Q.is_identity(e.phi(g))) choices[ucast(e.phi(g))].push_back(g);
  std::vector<std::vector<MorphismId>> out;
  std::vector<MorphismId> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (out.size() >= limit) return;
    if (i == choices.size()) {
      out.push_back(cur);
      return;
    }
    for (MorphismId g : choices[i]) {
      cur.push_back(g);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

CrowellSequence crowell_sequence(const Extension& e, const CategoryPtr& lq,
                                 const std::vector<MorphismId>& transversal) {
  const OrderedGroupoid& G = *e.G;
  const OrderedGroupoid& Q = *e.Q;
  CrowellSequence cs{abelianisation(e, lq), derived_module(e.phi, lq), adjoint_module(lq), {}, {}, {}, {},
                     transversal.empty() ? default_transversal(e) : transversal};
  const auto& tau = cs.transversal;
  for (MorphismId q = 0; q < static_cast<MorphismId>(Q.size()); ++q)
    if (e.phi(tau.at(ucast(q))) != q || (Q.is_identity(q) && !G.is_identity(tau[ucast(q)])))
      throw PreconditionError("crowell_sequence: not a transversal fixing objects");
  GModule dz = constant_module(lq, AbGroup::cyclic(0));
  cs.kq = kernel_module(cs.zq, dz, augmentation(cs.zq, dz));
  const GModule& nab = cs.nab.module;
  const GModule& d = cs.d.module;
  const GModule& kq = cs.kq.module;
  bool splits = true;
  for (ObjectId o = 0; o < static_cast<ObjectId>(lq->num_objects()); ++o) {
    MorphismId eq = lq->object_identity(o);
    const auto& ngens = cs.nab.generators[ucast(o)];
    IntMatrix ii(d.group(o).generators(), ngens.size());
    for (std::size_t j = 0; j < ngens.size(); ++j) ii.set_column(j, cs.d.generator_class(ngens[j], eq));
    cs.iota_bar.components.push_back(induced_hom(nab, o, cs.nab.relations[ucast(o)], d.group(o), ii));

    const auto& dgens = cs.d.generators[ucast(o)];
    IntMatrix pi(kq.group(o).generators(), dgens.size());
    IntMatrix ki(nab.group(o).generators(), dgens.size());
    for (std::size_t j = 0; j < dgens.size(); ++j) {
      auto [g, q] = dgens[j];
      MorphismId p = star(Q, e.phi(g), q);
      Vector v(cs.zq.coords[ucast(o)].ambient_dim(), 0);
      v[adjoint_basis_index(Q, p)] += 1;
      v[adjoint_basis_index(Q, q)] -= 1;
      pi.set_column(j, kq.class_of(o, cs.zq.class_of(o, v)));
      auto left = G.pseudoproduct(G.inv(tau[ucast(p)]), g);
      auto w = left ? G.pseudoproduct(*left, tau[ucast(q)]) : std::nullopt;
      if (!w || !cs.nab.alpha[ucast(*w)])
        throw InternalError("crowell_sequence: kappa does not land in the kernel");
      ki.set_column(j, *cs.nab.alpha[ucast(*w)]);
    }
    cs.phi_bar.components.push_back(induced_hom(d, o, cs.d.relations[ucast(o)], kq.group(o), pi));
    cs.kappa.push_back(induced_hom(d, o, cs.d.relations[ucast(o)], nab.group(o), ki));
    if (!cs.iota_bar.at(o).then(cs.kappa.back()).equals(AbHom::identity(nab.group(o)))) splits = false;
  }
  cs.kappa_splits = splits;
  cs.iota_natural = validate_gmap(nab, d, cs.iota_bar).ok();
  cs.phi_natural = validate_gmap(d, kq, cs.phi_bar).ok();
  cs.iota_injective = cs.phi_surjective = cs.exact_middle = true;
  for (ObjectId o = 0; o < static_cast<ObjectId>(lq->num_objects()); ++o) {
    const AbHom& i = cs.iota_bar.at(o);
    const AbHom& p = cs.phi_bar.at(o);
    if (!i.is_injective()) cs.iota_injective = false;
    if (!p.is_surjective()) cs.phi_surjective = false;
    if (!i.then(p).is_zero() || !zlin::homology(i, p).is_trivial()) cs.exact_middle = false;
  }
  return cs;
}

SectionCheck section_correspondence(const GroupoidPtr& gp, const GModule& m) {
  const OrderedGroupoid& G = *gp;
  SectionCheck out;
  auto sd = semidirect(gp, m);
  const OrderedGroupoid& S = *sd.ext.G;
  OrderedFunctor id = identity_functor(gp);
  auto der = derivations(id, m).enumerate();
  out.derivations = der.size();

  // Brute-force sections, pruned on every assigned pair.
  std::vector<std::vector<MorphismId>> over(G.size());
  for (MorphismId x = 0; x < static_cast<MorphismId>(S.size()); ++x) over[ucast(sd.ext.phi(x))].push_back(x);
  std::vector<MorphismId> s(G.size(), -1);
  std::set<std::vector<MorphismId>> sections;
  auto consistent = [&](MorphismId g) {
    for (MorphismId a = 0; a <= g; ++a)
      for (MorphismId b = 0; b <= g; ++b) {
        if (G.leq(a, b) && !S.leq(s[ucast(a)], s[ucast(b)])) return false;
        if (G.r(a) != G.d(b)) continue;
        MorphismId ab = G.mul(a, b);
        if (ab <= g && S.compose(s[ucast(a)], s[ucast(b)]) != s[ucast(ab)]) return false;
      }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == G.size()) {
      sections.insert(s);
      return;
    }
    for (MorphismId x : over[i]) {
      s[i] = x;
      if (consistent(static_cast<MorphismId>(i))) rec(i + 1);
    }
    s[i] = -1;
  };
  rec(0);
  std::set<std::vector<MorphismId>> valid;
  for (const auto& sec : sections)
    if (validate_functor(OrderedFunctor{gp, sd.ext.G, sec}).ok()) valid.insert(sec);
  out.sections = valid.size();

  out.derived_sections_valid = true;
  std::set<std::vector<MorphismId>> images;
  for (const auto& f : der) {
    std::vector<MorphismId> sec;
    for (MorphismId g = 0; g < static_cast<MorphismId>(G.size()); ++g) sec.push_back(semidirect_arrow(sd, g, f[ucast(g)]));
    if (!validate_functor(OrderedFunctor{gp, sd.ext.G, sec}).ok()) out.derived_sections_valid = false;
    images.insert(sec);
  }
  out.bijective = images.size() == der.size() && images == valid;
  return out;
}

}  // namespace ogkit
