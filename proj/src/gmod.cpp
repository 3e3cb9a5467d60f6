#include "ogkit/gmod.hpp"

#include "ogkit/error.hpp"

namespace ogkit {

using zlin::AbGroup;
using zlin::AbHom;
using zlin::IntMatrix;
using zlin::Subquotient;
using zlin::Vector;

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

std::size_t ucast(int x) { return static_cast<std::size_t>(x); }

// Canonical matrix of the map induced by an ambient matrix between two
// presentations.
IntMatrix canonical_matrix(const Subquotient& dom, const Subquotient& cod, const IntMatrix& ambient) {
  const std::size_t k = dom.group().generators();
  IntMatrix out(cod.group().generators(), k);
  for (std::size_t j = 0; j < k; ++j) {
    Vector rep = dom.representative(unit(k, j));
    out.set_column(j, cod.group().reduce(cod.class_of(ambient * rep)));
  }
  return out;
}

Vector block(const Vector& v, std::size_t offset, std::size_t len) {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(offset),
                v.begin() + static_cast<std::ptrdiff_t>(offset + len));
}

ObjectId object_in(const Category& c, MorphismId e) {
  auto o = c.object_of(e);
  if (!o) throw PreconditionError("identity " + std::to_string(e) + " is not an object of the base");
  return *o;
}

ArrowId arrow_in(const Category& c, MorphismId a, MorphismId b) {
  auto f = c.arrow_of(a, b);
  if (!f) throw PreconditionError("pair is not an arrow of the base");
  return *f;
}

}  // namespace

Vector GModule::class_of(ObjectId o, const Vector& ambient) const {
  return group(o).reduce(coords.at(ucast(o)).class_of(ambient));
}

Vector GModule::representative(ObjectId o, const Vector& canonical) const {
  return coords.at(ucast(o)).representative(canonical);
}

GModule realize(const CategoryPtr& base, std::vector<Subquotient> coords,
                const std::function<IntMatrix(ArrowId)>& ambient_action) {
  if (coords.size() != base->num_objects()) throw PreconditionError("realize: one presentation per object required");
  GModule m;
  m.base = base;
  for (const auto& c : coords) m.groups.push_back(c.group());
  for (ArrowId f = 0; f < static_cast<ArrowId>(base->num_arrows()); ++f) {
    const Subquotient& dom = coords[ucast(base->dom(f))];
    const Subquotient& cod = coords[ucast(base->cod(f))];
    IntMatrix a = ambient_action(f);
    if (a.rows() != cod.ambient_dim() || a.cols() != dom.ambient_dim())
      throw PreconditionError("realize: ambient action has the wrong shape at " + base->arrow_name(f));
    m.actions.push_back(AbHom{dom.group(), cod.group(), canonical_matrix(dom, cod, a)});
  }
  m.coords = std::move(coords);
  return m;
}

GModule make_module(const CategoryPtr& base, std::vector<AbGroup> groups, std::vector<IntMatrix> action_matrices) {
  if (groups.size() != base->num_objects() || action_matrices.size() != base->num_arrows())
    throw PreconditionError("make_module: wrong number of groups or actions");
  GModule m;
  m.base = base;
  for (ArrowId f = 0; f < static_cast<ArrowId>(base->num_arrows()); ++f) {
    const AbGroup& dom = groups[ucast(base->dom(f))];
    const AbGroup& cod = groups[ucast(base->cod(f))];
    IntMatrix& a = action_matrices[ucast(f)];
    if (a.rows() != cod.generators() || a.cols() != dom.generators())
      throw PreconditionError("make_module: action matrix has the wrong shape at " + base->arrow_name(f));
    m.actions.push_back(AbHom{dom, cod, a});
  }
  for (const auto& g : groups) m.coords.push_back(Subquotient::product(g.factors()));
  m.groups = std::move(groups);
  return m;
}

ValidationReport validate_module(const GModule& m) {
  ValidationReport rep;
  const Category& c = *m.base;
  if (m.groups.size() != c.num_objects() || m.actions.size() != c.num_arrows()) {
    rep.add("SHAPE", {}, "wrong number of groups or actions");
    return rep;
  }
  for (ArrowId f = 0; f < static_cast<ArrowId>(c.num_arrows()); ++f) {
    const AbHom& a = m.action(f);
    if (!(a.dom == m.group(c.dom(f))) || !(a.cod == m.group(c.cod(f))) ||
        a.matrix.rows() != a.cod.generators() || a.matrix.cols() != a.dom.generators()) {
      rep.add("SHAPE", {f}, "action " + c.arrow_name(f) + " has the wrong domain or codomain");
      continue;
    }
    if (!a.is_well_defined()) rep.add("WELL-DEFINED", {f}, c.arrow_name(f));
  }
  if (!rep.ok()) return rep;
  for (ObjectId o = 0; o < static_cast<ObjectId>(c.num_objects()); ++o)
    if (!m.action(c.identity(o)).equals(AbHom::identity(m.group(o))))
      rep.add("FUNCTOR-IDENTITY", {c.identity(o)}, c.object_name(o));
  for (ArrowId f = 0; f < static_cast<ArrowId>(c.num_arrows()); ++f)
    for (ArrowId g = 0; g < static_cast<ArrowId>(c.num_arrows()); ++g) {
      ArrowId fg = c.compose(f, g);
      if (fg < 0) continue;
      if (!m.action(f).then(m.action(g)).equals(m.action(fg)))
        rep.add("FUNCTOR-COMPOSE", {f, g}, c.arrow_name(f) + " then " + c.arrow_name(g));
    }
  if (c.source() && c.source()->size() > 0) {
    const OrderedGroupoid& g = *c.source();
    for (ArrowId f = 0; f < static_cast<ArrowId>(c.num_arrows()); ++f) {
      auto [e, x] = c.arrow_pair(f);
      if (e == g.d(x) && !m.action(f).is_isomorphism()) rep.add("GROUPOID-ISO", {f}, c.arrow_name(f));
    }
  }
  return rep;
}

bool same_module(const GModule& a, const GModule& b) {
  if (a.base->tables().arrow_names != b.base->tables().arrow_names ||
      a.base->tables().compose != b.base->tables().compose ||
      a.base->tables().object_names != b.base->tables().object_names)
    return false;
  if (a.groups != b.groups) return false;
  for (std::size_t f = 0; f < a.actions.size(); ++f)
    if (!a.actions[f].equals(b.actions[f])) return false;
  return true;
}

ValidationReport validate_gmap(const GModule& dom, const GModule& cod, const GMap& f) {
  ValidationReport rep;
  const Category& c = *dom.base;
  if (f.components.size() != c.num_objects() || cod.groups.size() != c.num_objects()) {
    rep.add("SHAPE", {}, "wrong number of components");
    return rep;
  }
  for (ObjectId o = 0; o < static_cast<ObjectId>(c.num_objects()); ++o) {
    const AbHom& h = f.at(o);
    if (!(h.dom == dom.group(o)) || !(h.cod == cod.group(o))) {
      rep.add("SHAPE", {o}, "component at " + c.object_name(o) + " has the wrong type");
      return rep;
    }
    if (!h.is_well_defined()) rep.add("WELL-DEFINED", {o}, c.object_name(o));
  }
  for (ArrowId a = 0; a < static_cast<ArrowId>(c.num_arrows()); ++a) {
    ObjectId s = c.dom(a), t = c.cod(a);
    if (!dom.action(a).then(f.at(t)).equals(f.at(s).then(cod.action(a))))
      rep.add("NATURAL", {a}, c.arrow_name(a));
  }
  return rep;
}

GMap compose(const GMap& first, const GMap& second) {
  GMap out;
  for (std::size_t o = 0; o < first.components.size(); ++o)
    out.components.push_back(first.components[o].then(second.components.at(o)));
  return out;
}

GMap identity_map(const GModule& m) {
  GMap out;
  for (const auto& g : m.groups) out.components.push_back(AbHom::identity(g));
  return out;
}

GMap zero_map(const GModule& dom, const GModule& cod) {
  GMap out;
  for (std::size_t o = 0; o < dom.groups.size(); ++o)
    out.components.push_back(AbHom::zero(dom.groups[o], cod.groups.at(o)));
  return out;
}

bool same_map(const GMap& a, const GMap& b) {
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t o = 0; o < a.components.size(); ++o)
    if (!a.components[o].equals(b.components[o])) return false;
  return true;
}

GModule constant_module(const CategoryPtr& base, const AbGroup& a) {
  std::vector<AbGroup> groups(base->num_objects(), a);
  std::vector<IntMatrix> acts(base->num_arrows(), IntMatrix::identity(a.generators()));
  return make_module(base, std::move(groups), std::move(acts));
}

std::size_t adjoint_basis_index(const OrderedGroupoid& g, MorphismId h) {
  auto cs = g.costar(g.r(h));
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i] == h) return i;
  throw InternalError("adjoint_basis_index: morphism not in its costar");
}

GModule adjoint_module(const CategoryPtr& l, long long coefficient) {
  if (!l->source()) throw PreconditionError("adjoint_module: base is not L(G)");
  const OrderedGroupoid& g = *l->source();
  std::vector<Subquotient> coords;
  for (ObjectId o = 0; o < static_cast<ObjectId>(l->num_objects()); ++o) {
    std::size_t k = g.costar(l->object_identity(o)).size();
    coords.push_back(Subquotient::product(Vector(k, coefficient)));
  }
  return realize(l, std::move(coords), [&](ArrowId f) {
    auto [e, x] = l->arrow_pair(f);
    auto dom = g.costar(e);
    IntMatrix a(g.costar(g.r(x)).size(), dom.size());
    for (std::size_t j = 0; j < dom.size(); ++j) {
      MorphismId image = g.mul(g.corestriction(dom[j], g.d(x)), x);
      a(adjoint_basis_index(g, image), j) = 1;
    }
    return a;
  });
}

SubmoduleResult kernel_module(const GModule& dom, const GModule& cod, const GMap& f) {
  const Category& c = *dom.base;
  std::vector<Subquotient> coords;
  for (ObjectId o = 0; o < static_cast<ObjectId>(c.num_objects()); ++o) {
    const AbGroup& g = dom.group(o);
    coords.emplace_back(g.generators(), f.at(o).matrix, cod.group(o).factors(), g.factors(),
                        IntMatrix(g.generators(), 0));
  }
  GModule k = realize(dom.base, std::move(coords), [&](ArrowId a) { return dom.action(a).matrix; });
  GMap emb;
  for (ObjectId o = 0; o < static_cast<ObjectId>(c.num_objects()); ++o) {
    const std::size_t n = k.group(o).generators();
    IntMatrix m(dom.group(o).generators(), n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, dom.group(o).reduce(k.representative(o, unit(n, j))));
    emb.components.push_back(AbHom{k.group(o), dom.group(o), m});
  }
  return SubmoduleResult{std::move(k), std::move(emb)};
}

GMap augmentation(const GModule& adjoint, const GModule& delta_z) {
  GMap eps;
  for (ObjectId o = 0; o < static_cast<ObjectId>(adjoint.groups.size()); ++o) {
    const Subquotient& s = adjoint.coords[ucast(o)];
    IntMatrix ones(1, s.ambient_dim());
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) ones(0, j) = 1;
    const std::size_t n = adjoint.group(o).generators();
    IntMatrix m(1, n);
    for (std::size_t j = 0; j < n; ++j) m(0, j) = (ones * s.representative(unit(n, j)))[0];
    eps.components.push_back(AbHom{adjoint.group(o), delta_z.group(o), m});
  }
  return eps;
}

SubmoduleResult augmentation_module(const CategoryPtr& l) {
  GModule zg = adjoint_module(l);
  GModule dz = constant_module(l, AbGroup::cyclic(0));
  return kernel_module(zg, dz, augmentation(zg, dz));
}

GModule pullback(const GModule& m, const CategoryFunctor& f) {
  GModule out;
  out.base = f.dom;
  for (ObjectId o : f.object_map) {
    out.groups.push_back(m.group(o));
    out.coords.push_back(m.coords.at(ucast(o)));
  }
  for (ArrowId a : f.arrow_map) out.actions.push_back(m.action(a));
  return out;
}

GMap pullback(const GMap& f, const CategoryFunctor& functor) {
  GMap out;
  for (ObjectId o : functor.object_map) out.components.push_back(f.at(o));
  return out;
}

CategoryFunctor inclusion_E_to_L(const CategoryPtr& e, const CategoryPtr& l) {
  CategoryFunctor f{e, l, {}, {}};
  for (ObjectId o = 0; o < static_cast<ObjectId>(e->num_objects()); ++o)
    f.object_map.push_back(object_in(*l, e->object_identity(o)));
  for (ArrowId a = 0; a < static_cast<ArrowId>(e->num_arrows()); ++a) {
    auto [x, y] = e->arrow_pair(a);
    f.arrow_map.push_back(arrow_in(*l, x, y));
  }
  return f;
}

CategoryFunctor inclusion_L_to_LI(const CategoryPtr& l, const CategoryPtr& li) {
  CategoryFunctor f{l, li, {}, {}};
  for (ObjectId o = 0; o < static_cast<ObjectId>(l->num_objects()); ++o)
    f.object_map.push_back(object_in(*li, l->object_identity(o)));
  for (ArrowId a = 0; a < static_cast<ArrowId>(l->num_arrows()); ++a) {
    auto [x, y] = l->arrow_pair(a);
    f.arrow_map.push_back(arrow_in(*li, x, y));
  }
  return f;
}

GModule restrict_to_E(const GModule& m, const CategoryPtr& e) { return pullback(m, inclusion_E_to_L(e, m.base)); }

GModule restrict_I(const GModule& m, const CategoryPtr& l) { return pullback(m, inclusion_L_to_LI(l, m.base)); }

Vector Limit::class_of_family(const std::vector<Vector>& family) const {
  Vector all;
  for (const auto& v : family) all.insert(all.end(), v.begin(), v.end());
  return group().reduce(space.class_of(all));
}

std::vector<Vector> Limit::family_of(const Vector& canonical) const {
  Vector rep = space.representative(canonical);
  std::vector<Vector> out;
  for (std::size_t o = 0; o < projections.size(); ++o)
    out.push_back(projections[o].cod.reduce(block(rep, offsets[o], projections[o].cod.generators())));
  return out;
}

namespace {

Subquotient limit_space(const GModule& m, std::vector<std::size_t>& offsets) {
  const Category& c = *m.base;
  std::size_t total = 0;
  Vector moduli;
  for (const auto& g : m.groups) {
    offsets.push_back(total);
    total += g.generators();
    moduli.insert(moduli.end(), g.factors().begin(), g.factors().end());
  }
  std::vector<Vector> rows;
  Vector row_moduli;
  for (ArrowId f = 0; f < static_cast<ArrowId>(c.num_arrows()); ++f) {
    if (c.is_identity(f)) continue;
    ObjectId s = c.dom(f), t = c.cod(f);
    const IntMatrix& a = m.action(f).matrix;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Vector row(total, 0);
      for (std::size_t k = 0; k < a.cols(); ++k) row[offsets[ucast(s)] + k] += a(i, k);
      row[offsets[ucast(t)] + i] -= 1;
      rows.push_back(std::move(row));
      row_moduli.push_back(m.group(t).factors()[i]);
    }
  }
  IntMatrix cond = rows.empty() ? IntMatrix(0, total) : IntMatrix::from_rows(rows, total);
  return Subquotient(total, cond, row_moduli, moduli, IntMatrix(total, 0));
}

}  // namespace

Limit lim_module(const GModule& m) {
  std::vector<std::size_t> offsets;
  Subquotient space = limit_space(m, offsets);
  Limit lim{std::move(space), std::move(offsets), {}};
  const std::size_t n = lim.group().generators();
  for (ObjectId o = 0; o < static_cast<ObjectId>(m.groups.size()); ++o) {
    const AbGroup& g = m.group(o);
    IntMatrix p(g.generators(), n);
    for (std::size_t j = 0; j < n; ++j)
      p.set_column(j, g.reduce(block(lim.space.representative(unit(n, j)), lim.offsets[ucast(o)], g.generators())));
    lim.projections.push_back(AbHom{lim.group(), g, p});
  }
  return lim;
}

std::size_t H_summand_offset(const GModule& b, const OrderedGroupoid& g, MorphismId label) {
  std::size_t off = 0;
  for (MorphismId x : g.costar(g.r(label))) {
    if (x == label) return off;
    off += b.group(object_in(*b.base, g.d(x))).generators();
  }
  throw InternalError("H_summand_offset: label not in costar");
}

GModule H_functor(const CategoryPtr& l, const GModule& b) {
  const OrderedGroupoid& g = *l->source();
  const Category& e = *b.base;
  std::vector<Subquotient> coords;
  std::vector<std::size_t> dims;
  for (ObjectId o = 0; o < static_cast<ObjectId>(l->num_objects()); ++o) {
    Vector moduli;
    for (MorphismId x : g.costar(l->object_identity(o))) {
      const auto& f = b.group(object_in(e, g.d(x))).factors();
      moduli.insert(moduli.end(), f.begin(), f.end());
    }
    dims.push_back(moduli.size());
    coords.push_back(Subquotient::product(moduli));
  }
  return realize(l, std::move(coords), [&](ArrowId f) {
    auto [eo, k] = l->arrow_pair(f);
    IntMatrix a(dims[ucast(l->cod(f))], dims[ucast(l->dom(f))]);
    for (MorphismId x : g.costar(eo)) {
      MorphismId xk = g.corestriction(x, g.d(k));
      MorphismId label = g.mul(xk, k);
      ArrowId beta = arrow_in(e, g.d(x), g.d(xk));
      const IntMatrix& bm = b.action(beta).matrix;
      std::size_t src = H_summand_offset(b, g, x), dst = H_summand_offset(b, g, label);
      for (std::size_t i = 0; i < bm.rows(); ++i)
        for (std::size_t j = 0; j < bm.cols(); ++j) a(dst + i, src + j) = bm(i, j);
    }
    return a;
  });
}

GModule lift_to_I(const GModule& m, const CategoryPtr& li) {
  const Category& l = *m.base;
  const OrderedGroupoid& g = *l.source();
  CategoryPtr e = build_E(l.source());
  Limit lim = lim_module(restrict_to_E(m, e));
  GModule out;
  out.base = li;
  for (ObjectId o = 0; o < static_cast<ObjectId>(li->num_objects()); ++o) {
    auto lo = l.object_of(li->object_identity(o));
    if (lo) {
      out.groups.push_back(m.group(*lo));
      out.coords.push_back(m.coords.at(ucast(*lo)));
    } else {
      out.groups.push_back(lim.group());
      out.coords.push_back(lim.space);
    }
  }
  for (ArrowId f = 0; f < static_cast<ArrowId>(li->num_arrows()); ++f) {
    auto [eo, x] = li->arrow_pair(f);
    if (auto lf = l.arrow_of(eo, x)) {
      out.actions.push_back(m.action(*lf));
    } else if (x == eo) {
      out.actions.push_back(AbHom::identity(lim.group()));
    } else {
      ObjectId d = object_in(l, g.d(x));
      out.actions.push_back(lim.projections[ucast(d)].then(m.action(arrow_in(l, g.d(x), x))));
    }
  }
  return out;
}

GModule zero_extend(const GModule& m, const CategoryPtr& li) {
  const Category& l = *m.base;
  GModule out;
  out.base = li;
  for (ObjectId o = 0; o < static_cast<ObjectId>(li->num_objects()); ++o) {
    auto lo = l.object_of(li->object_identity(o));
    if (lo) {
      out.groups.push_back(m.group(*lo));
      out.coords.push_back(m.coords.at(ucast(*lo)));
    } else {
      out.groups.push_back(AbGroup::zero());
      out.coords.push_back(Subquotient::product({}));
    }
  }
  for (ArrowId f = 0; f < static_cast<ArrowId>(li->num_arrows()); ++f) {
    auto [eo, x] = li->arrow_pair(f);
    if (auto lf = l.arrow_of(eo, x))
      out.actions.push_back(m.action(*lf));
    else
      out.actions.push_back(AbHom::zero(out.groups[ucast(li->dom(f))], out.groups[ucast(li->cod(f))]));
  }
  return out;
}

GMap HomModules::map_of(const Vector& canonical) const {
  Vector rep = space.representative(canonical);
  GMap out;
  for (std::size_t o = 0; o < dom->groups.size(); ++o) {
    const AbGroup& a = dom->groups[o];
    const AbGroup& b = cod->groups[o];
    IntMatrix m(b.generators(), a.generators());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = zlin::reduce(rep[offsets[o] + i * m.cols() + j], b.factors()[i]);
    out.components.push_back(AbHom{a, b, m});
  }
  return out;
}

Vector HomModules::class_of(const GMap& f) const {
  Vector flat(space.ambient_dim(), 0);
  for (std::size_t o = 0; o < f.components.size(); ++o) {
    const IntMatrix& m = f.components[o].matrix;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) flat[offsets[o] + i * m.cols() + j] = m(i, j);
  }
  return group().reduce(space.class_of(flat));
}

std::vector<GMap> HomModules::enumerate() const {
  if (!group().is_finite()) throw UnsupportedError("hom_modules: the group of module maps is infinite");
  std::vector<GMap> out;
  for (const auto& x : group().elements()) out.push_back(map_of(x));
  return out;
}

HomModules hom_modules(const GModule& dom, const GModule& cod) {
  const Category& c = *dom.base;
  if (cod.groups.size() != dom.groups.size()) throw PreconditionError("hom_modules: modules over different bases");
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  Vector moduli;
  for (std::size_t o = 0; o < dom.groups.size(); ++o) {
    offsets.push_back(total);
    const std::size_t r = cod.groups[o].generators(), k = dom.groups[o].generators();
    total += r * k;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) moduli.push_back(cod.groups[o].factors()[i]);
  }
  std::vector<Vector> rows;
  Vector row_moduli;
  auto entry = [&](std::size_t o, std::size_t i, std::size_t j) {
    return offsets[o] + i * dom.groups[o].generators() + j;
  };
  for (std::size_t o = 0; o < dom.groups.size(); ++o) {
    const auto& df = dom.groups[o].factors();
    const auto& cf = cod.groups[o].factors();
    for (std::size_t j = 0; j < df.size(); ++j) {
      if (df[j] == 0) continue;
      for (std::size_t i = 0; i < cf.size(); ++i) {
        Vector row(total, 0);
        row[entry(o, i, j)] = df[j];
        rows.push_back(std::move(row));
        row_moduli.push_back(cf[i]);
      }
    }
  }
  for (ArrowId f = 0; f < static_cast<ArrowId>(c.num_arrows()); ++f) {
    if (c.is_identity(f)) continue;
    std::size_t s = ucast(c.dom(f)), t = ucast(c.cod(f));
    const IntMatrix& mf = dom.action(f).matrix;  // dom_t x dom_s
    const IntMatrix& nf = cod.action(f).matrix;  // cod_t x cod_s
    for (std::size_t i = 0; i < nf.rows(); ++i)
      for (std::size_t j = 0; j < mf.cols(); ++j) {
        Vector row(total, 0);
        for (std::size_t k = 0; k < nf.cols(); ++k) row[entry(s, k, j)] += nf(i, k);
        for (std::size_t k = 0; k < mf.rows(); ++k) row[entry(t, i, k)] -= mf(k, j);
        rows.push_back(std::move(row));
        row_moduli.push_back(cod.groups[t].factors()[i]);
      }
  }
  IntMatrix cond = rows.empty() ? IntMatrix(0, total) : IntMatrix::from_rows(rows, total);
  return HomModules{&dom, &cod, Subquotient(total, cond, row_moduli, moduli, IntMatrix(total, 0)),
                    std::move(offsets)};
}

namespace {

template <typename F, typename G>
AdjunctionCheck run_adjunction(const GModule& ld, const GModule& lc, const GModule& rd, const GModule& rc,
                               F left_to_right, G right_to_left) {
  HomModules left = hom_modules(ld, lc);
  HomModules right = hom_modules(rd, rc);
  AdjunctionCheck out;
  auto ls = left.enumerate();
  auto rs = right.enumerate();
  out.left_size = ls.size();
  out.right_size = rs.size();
  out.maps_valid = true;
  out.mutually_inverse = true;
  for (const auto& psi : ls) {
    GMap phi = left_to_right(psi);
    if (!validate_gmap(rd, rc, phi).ok()) out.maps_valid = false;
    if (!same_map(right_to_left(phi), psi)) out.mutually_inverse = false;
  }
  for (const auto& phi : rs) {
    GMap psi = right_to_left(phi);
    if (!validate_gmap(ld, lc, psi).ok()) out.maps_valid = false;
    if (!same_map(left_to_right(psi), phi)) out.mutually_inverse = false;
  }
  return out;
}

}  // namespace

AdjunctionCheck adjunction_check_H(const CategoryPtr& l, const CategoryPtr& e, const GModule& b, const GModule& c) {
  const OrderedGroupoid& g = *l->source();
  GModule hb = H_functor(l, b);
  GModule ce = restrict_to_E(c, e);
  const auto n_obj = static_cast<ObjectId>(l->num_objects());
  // psi in Hom(HB, C) -> phi in Hom(B, C|E): restrict to the summand labelled e.
  auto to_phi = [&](const GMap& psi) {
    GMap phi;
    for (ObjectId o = 0; o < n_obj; ++o) {
      MorphismId id = l->object_identity(o);
      ObjectId eo = object_in(*e, id);
      const AbGroup& bo = b.group(eo);
      std::size_t off = H_summand_offset(b, g, id);
      const std::size_t amb = hb.coords[ucast(o)].ambient_dim();
      IntMatrix m(c.group(o).generators(), bo.generators());
      for (std::size_t j = 0; j < bo.generators(); ++j) {
        Vector v(amb, 0);
        v[off + j] = 1;
        m.set_column(j, psi.at(o).apply(hb.class_of(o, v)));
      }
      phi.components.push_back(AbHom{bo, c.group(o), m});
    }
    return phi;
  };
  // phi -> psi: on the summand labelled x, phi at x.d followed by the action of x.
  auto to_psi = [&](const GMap& phi) {
    GMap psi;
    for (ObjectId o = 0; o < n_obj; ++o) {
      const std::size_t k = hb.group(o).generators();
      IntMatrix m(c.group(o).generators(), k);
      for (std::size_t j = 0; j < k; ++j) {
        Vector amb = hb.representative(o, unit(k, j));
        Vector acc = c.group(o).zero_element();
        for (MorphismId x : g.costar(l->object_identity(o))) {
          ObjectId xd = object_in(*e, g.d(x));
          Vector part = block(amb, H_summand_offset(b, g, x), b.group(xd).generators());
          Vector img = phi.at(xd).apply(part);
          acc = c.group(o).add(acc, c.act(img, arrow_in(*l, g.d(x), x)));
        }
        m.set_column(j, acc);
      }
      psi.components.push_back(AbHom{hb.group(o), c.group(o), m});
    }
    return psi;
  };
  return run_adjunction(hb, c, b, ce, to_phi, to_psi);
}

AdjunctionCheck adjunction_check_I(const CategoryPtr& l, const CategoryPtr& li, const GModule& b, const GModule& c) {
  GModule br = restrict_I(b, l);
  GModule ci = lift_to_I(c, li);
  CategoryFunctor incl = inclusion_L_to_LI(l, li);
  ObjectId top = -1;
  for (ObjectId o = 0; o < static_cast<ObjectId>(li->num_objects()); ++o)
    if (!l->object_of(li->object_identity(o))) top = o;
  // psi in Hom(B, C^I) -> phi in Hom(B|L, C): restriction.
  auto to_phi = [&](const GMap& psi) { return pullback(psi, incl); };
  // phi -> psi: phi away from I, and the induced map into the limit at I.
  auto to_psi = [&](const GMap& phi) {
    GMap psi;
    for (ObjectId o = 0; o < static_cast<ObjectId>(li->num_objects()); ++o) {
      if (o != top) {
        psi.components.push_back(phi.at(object_in(*l, li->object_identity(o))));
        continue;
      }
      const AbGroup& bi = b.group(top);
      IntMatrix m(ci.group(top).generators(), bi.generators());
      for (std::size_t j = 0; j < bi.generators(); ++j) {
        Vector family;
        for (ObjectId lo = 0; lo < static_cast<ObjectId>(l->num_objects()); ++lo) {
          MorphismId id = l->object_identity(lo);
          Vector x = b.act(unit(bi.generators(), j), arrow_in(*li, li->object_identity(top), id));
          Vector y = phi.at(lo).apply(x);
          family.insert(family.end(), y.begin(), y.end());
        }
        m.set_column(j, ci.class_of(top, family));
      }
      psi.components.push_back(AbHom{bi, ci.group(top), m});
    }
    return psi;
  };
  return run_adjunction(b, ci, br, c, to_phi, to_psi);
}

AdjunctionCheck adjunction_check_0(const CategoryPtr& l, const CategoryPtr& li, const GModule& a, const GModule& b) {
  GModule a0 = zero_extend(a, li);
  GModule br = restrict_I(b, l);
  CategoryFunctor incl = inclusion_L_to_LI(l, li);
  auto to_phi = [&](const GMap& psi) { return pullback(psi, incl); };
  auto to_psi = [&](const GMap& phi) {
    GMap psi;
    for (ObjectId o = 0; o < static_cast<ObjectId>(li->num_objects()); ++o) {
      auto lo = l->object_of(li->object_identity(o));
      psi.components.push_back(lo ? phi.at(*lo) : AbHom::zero(a0.group(o), b.group(o)));
    }
    return psi;
  };
  return run_adjunction(a0, b, a, br, to_phi, to_psi);
}

}  // namespace ogkit
