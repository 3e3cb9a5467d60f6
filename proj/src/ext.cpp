#include "ogkit/ext.hpp"

#include "ogkit/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

namespace ogkit {

using zlin::AbGroup;
using zlin::AbHom;
using zlin::IntMatrix;
using zlin::Vector;

namespace {

std::size_t ucast(int x) { return static_cast<std::size_t>(x); }

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

std::string vector_string(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s;
}

ObjectId object(const Category& l, MorphismId e) { return *l.object_of(e); }

// Ids of the fibre coordinates (q, a).
struct Layout {
  std::vector<MorphismId> offset;                       // per morphism of Q
  std::vector<std::vector<Vector>> elements;            // per object of L(Q)
  std::vector<std::map<Vector, std::size_t>> position;  // per object of L(Q)

  Layout(const OrderedGroupoid& q, const GModule& a) {
    const Category& l = *a.base;
    for (ObjectId o = 0; o < static_cast<ObjectId>(l.num_objects()); ++o) {
      if (!a.group(o).is_finite()) throw UnsupportedError("extensions: stalks must be finite");
      elements.push_back(a.group(o).elements());
      std::map<Vector, std::size_t> pos;
      for (std::size_t i = 0; i < elements.back().size(); ++i) pos[elements.back()[i]] = i;
      position.push_back(std::move(pos));
    }
    MorphismId next = 0;
    for (MorphismId x = 0; x < static_cast<MorphismId>(q.size()); ++x) {
      offset.push_back(next);
      next += static_cast<MorphismId>(elements[ucast(object(l, q.r(x)))].size());
    }
  }

  MorphismId id(const OrderedGroupoid& q, const GModule& a, MorphismId x, const Vector& v) const {
    ObjectId o = object(*a.base, q.r(x));
    return offset[ucast(x)] + static_cast<MorphismId>(position[ucast(o)].at(a.group(o).reduce(v)));
  }
};

void check_shape(const GroupoidPtr& q, const GModule& a) {
  if (!a.base->source() || a.base->source()->size() != q->size())
    throw PreconditionError("extensions: module is not over L(Q)");
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

// Mixed-radix enumeration of tuples of stalk elements.
template <typename Visit>
bool for_each_tuple(const std::vector<std::vector<Vector>>& options, std::size_t limit, Visit&& visit) {
  std::size_t total = 1;
  for (const auto& o : options) total = saturating_mul(total, o.size());
  if (total > limit) return false;
  std::vector<std::size_t> digit(options.size(), 0);
  std::vector<Vector> cur;
  for (const auto& o : options) cur.push_back(o.front());
  for (std::size_t n = 0; n < total; ++n) {
    if (visit(cur)) return true;
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (++digit[i] < options[i].size()) {
        cur[i] = options[i][digit[i]];
        break;
      }
      digit[i] = 0;
      cur[i] = options[i][0];
    }
  }
  return true;
}

}  // namespace

std::size_t FactorSetShape::candidates() const {
  std::size_t total = 1;
  for (ObjectId o : slot_object) {
    auto n = a.group(o).order();
    if (!n) return std::numeric_limits<std::size_t>::max();
    total = saturating_mul(total, static_cast<std::size_t>(*n));
  }
  return total;
}

FactorSetShape factor_set_shape(const GroupoidPtr& qp, const GModule& a) {
  check_shape(qp, a);
  const OrderedGroupoid& q = *qp;
  const Category& l = *a.base;
  FactorSetShape s{qp, a, {}, {}, {}};
  for (MorphismId x = 0; x < static_cast<MorphismId>(q.size()); ++x)
    for (MorphismId y = 0; y < static_cast<MorphismId>(q.size()); ++y)
      if (!q.is_identity(x) && !q.is_identity(y) && q.r(x) == q.d(y)) {
        s.pairs.emplace_back(x, y);
        s.slot_object.push_back(object(l, q.r(y)));
      }
  for (MorphismId x = 0; x < static_cast<MorphismId>(q.size()); ++x)
    for (MorphismId e : q.objects())
      if (e != q.d(x) && q.leq(e, q.d(x))) {
        s.restrictions.emplace_back(x, e);
        s.slot_object.push_back(object(l, q.r(q.restriction(e, x))));
      }
  return s;
}

FactorSet zero_factor_set(const FactorSetShape& s) {
  FactorSet fs;
  for (ObjectId o : s.slot_object) fs.values.push_back(s.a.group(o).zero_element());
  return fs;
}

Vector factor_value(const FactorSetShape& s, const FactorSet& fs, MorphismId p, MorphismId q) {
  for (std::size_t i = 0; i < s.pairs.size(); ++i)
    if (s.pairs[i] == std::make_pair(p, q)) return fs.values[i];
  if (s.q->r(p) != s.q->d(q)) throw PreconditionError("factor_value: not a composable pair");
  return s.a.group(object(*s.a.base, s.q->r(q))).zero_element();
}

Vector restriction_value(const FactorSetShape& s, const FactorSet& fs, MorphismId q, MorphismId e) {
  for (std::size_t i = 0; i < s.restrictions.size(); ++i)
    if (s.restrictions[i] == std::make_pair(q, e)) return fs.values[s.pairs.size() + i];
  if (e != s.q->d(q)) throw PreconditionError("restriction_value: not below the domain");
  return s.a.group(object(*s.a.base, s.q->r(q))).zero_element();
}

FactorSet factor_set_at(const FactorSetShape& s, std::size_t index) {
  FactorSet fs;
  for (ObjectId o : s.slot_object) {
    auto elems = s.a.group(o).elements();
    fs.values.push_back(elems[index % elems.size()]);
    index /= elems.size();
  }
  return fs;
}

std::string factor_set_string(const FactorSetShape& s, const FactorSet& fs) {
  const OrderedGroupoid& q = *s.q;
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " ";
    first = false;
  };
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    sep();
    out << "f(" << q.name(s.pairs[i].first) << "," << q.name(s.pairs[i].second) << ")=" << vector_string(fs.values[i]);
  }
  for (std::size_t i = 0; i < s.restrictions.size(); ++i) {
    sep();
    out << "r(" << q.name(s.restrictions[i].first) << "," << q.name(s.restrictions[i].second)
        << ")=" << vector_string(fs.values[s.pairs.size() + i]);
  }
  if (first) out << "-";
  return out.str();
}

BuiltExtension build_extension(const FactorSetShape& s, const FactorSet& fs) {
  if (fs.values.size() != s.slots()) throw PreconditionError("build_extension: factor set has the wrong length");
  const OrderedGroupoid& q = *s.q;
  const GModule& a = s.a;
  const Category& l = *a.base;
  Layout lay(q, a);
  auto grp = [&](MorphismId e) -> const AbGroup& { return a.group(object(l, e)); };
  std::vector<std::pair<MorphismId, Vector>> arrows;
  for (MorphismId x = 0; x < static_cast<MorphismId>(q.size()); ++x)
    for (const auto& v : lay.elements[ucast(object(l, q.r(x)))]) arrows.emplace_back(x, v);
  const std::size_t m = arrows.size();
  auto act = [&](const Vector& v, MorphismId from, MorphismId k) { return a.act(v, *l.arrow_of(from, k)); };

  OrderedGroupoid::Tables t;
  t.compose.assign(m * m, kUndefined);
  t.leq.assign(m * m, 0);
  for (const auto& [x, v] : arrows) {
    t.names.push_back("(" + q.name(x) + ";" + vector_string(v) + ")");
    t.d.push_back(lay.id(q, a, q.d(x), grp(q.d(x)).zero_element()));
    t.r.push_back(lay.id(q, a, q.r(x), grp(q.r(x)).zero_element()));
    MorphismId xi = q.inv(x);
    const AbGroup& target = grp(q.r(xi));
    Vector w = target.negate(target.add(act(v, q.r(x), xi), factor_value(s, fs, x, xi)));
    t.inv.push_back(lay.id(q, a, xi, w));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto& [x, v] = arrows[i];
    for (std::size_t j = 0; j < m; ++j) {
      const auto& [y, w] = arrows[j];
      if (q.r(x) == q.d(y)) {
        const AbGroup& target = grp(q.r(y));
        Vector c = target.add(target.add(act(v, q.d(y), y), w), factor_value(s, fs, x, y));
        t.compose[i * m + j] = lay.id(q, a, q.mul(x, y), c);
      }
      if (q.leq(x, y)) {
        const AbGroup& target = grp(q.r(x));
        Vector down = target.add(act(w, q.r(y), q.r(x)), restriction_value(s, fs, y, q.d(x)));
        if (target.equal(down, v)) t.leq[i * m + j] = 1;
      }
    }
  }

  BuiltExtension out;
  GroupoidPtr g;
  try {
    g = std::make_shared<OrderedGroupoid>(std::move(t));
  } catch (const PreconditionError& err) {
    out.report.add("TABLES", {}, err.what());
    return out;
  }
  out.report = validate(*g);
  if (!out.report.ok()) return out;
  ModuleExtension me{Extension{g, s.q, OrderedFunctor{g, s.q, {}}}, a, {}};
  for (const auto& [x, v] : arrows) {
    me.ext.phi.map.push_back(x);
    if (q.is_identity(x))
      me.kernel_value.push_back(v);
    else
      me.kernel_value.push_back(std::nullopt);
  }
  out.report = validate_module_extension(me);
  if (out.report.ok()) out.extension = std::move(me);
  return out;
}

std::optional<EquivalenceWitness> are_equivalent(const FactorSetShape& s, const ModuleExtension& e1,
                                                 const ModuleExtension& e2) {
  const OrderedGroupoid& q = *s.q;
  const Category& l = *s.a.base;
  Layout lay(q, s.a);
  if (e1.ext.G->size() != e2.ext.G->size()) throw PreconditionError("are_equivalent: different fibre layouts");
  std::vector<MorphismId> free;
  std::vector<std::vector<Vector>> options;
  for (MorphismId x = 0; x < static_cast<MorphismId>(q.size()); ++x)
    if (!q.is_identity(x)) {
      free.push_back(x);
      options.push_back(lay.elements[ucast(object(l, q.r(x)))]);
    }
  std::optional<EquivalenceWitness> found;
  for_each_tuple(options, std::numeric_limits<std::size_t>::max(), [&](const std::vector<Vector>& c) {
    EquivalenceWitness w;
    for (MorphismId x = 0; x < static_cast<MorphismId>(q.size()); ++x)
      w.push_back(s.a.group(object(l, q.r(x))).zero_element());
    for (std::size_t i = 0; i < free.size(); ++i) w[ucast(free[i])] = c[i];
    OrderedFunctor mu{e1.ext.G, e2.ext.G, {}};
    for (MorphismId x = 0; x < static_cast<MorphismId>(q.size()); ++x) {
      const AbGroup& grp = s.a.group(object(l, q.r(x)));
      for (const auto& v : lay.elements[ucast(object(l, q.r(x)))])
        mu.map.push_back(lay.id(q, s.a, x, grp.add(v, w[ucast(x)])));
    }
    if (!validate_functor(mu).ok()) return false;
    found = std::move(w);
    return true;
  });
  return found;
}

std::optional<bool> general_equivalence_exists(const ModuleExtension& e1, const ModuleExtension& e2,
                                               std::size_t limit) {
  const OrderedGroupoid& g1 = *e1.ext.G;
  const OrderedGroupoid& g2 = *e2.ext.G;
  std::vector<std::vector<MorphismId>> options(g1.size());
  std::size_t total = 1;
  for (MorphismId x = 0; x < static_cast<MorphismId>(g1.size()); ++x) {
    const auto& v = e1.kernel_value[ucast(x)];
    for (MorphismId y = 0; y < static_cast<MorphismId>(g2.size()); ++y) {
      if (e2.ext.phi(y) != e1.ext.phi(x)) continue;
      if (v && !(e2.kernel_value[ucast(y)] && *e2.kernel_value[ucast(y)] == *v)) continue;
      options[ucast(x)].push_back(y);
    }
    if (options[ucast(x)].empty()) return false;
    total = saturating_mul(total, options[ucast(x)].size());
  }
  if (total > limit) return std::nullopt;
  std::vector<std::size_t> digit(g1.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    OrderedFunctor mu{e1.ext.G, e2.ext.G, {}};
    for (std::size_t x = 0; x < g1.size(); ++x) mu.map.push_back(options[x][digit[x]]);
    if (validate_functor(mu).ok()) return true;
    for (std::size_t x = 0; x < g1.size(); ++x) {
      if (++digit[x] < options[x].size()) break;
      digit[x] = 0;
    }
  }
  return false;
}

unsigned worker_count() {
  if (const char* env = std::getenv("OGKIT_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && n > 0) return static_cast<unsigned>(std::min<long>(n, 256));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 8u);
}

ExtensionCensus enumerate_extensions(const GroupoidPtr& q, const GModule& a, const Budget& budget) {
  if (q->size() > budget.max_q)
    throw BudgetError("enumerate_extensions: |Q| = " + std::to_string(q->size()) + " exceeds the budget of " +
                      std::to_string(budget.max_q));
  FactorSetShape shape = factor_set_shape(q, a);
  for (ObjectId o = 0; o < static_cast<ObjectId>(a.base->num_objects()); ++o) {
    auto n = a.group(o).order();
    if (!n || *n > budget.max_stalk)
      throw BudgetError("enumerate_extensions: stalk " + a.base->object_name(o) + " = " + a.group(o).to_string() +
                        " exceeds the budget of " + std::to_string(budget.max_stalk) + " elements");
  }
  const std::size_t total = shape.candidates();
  if (total > budget.max_candidates)
    throw BudgetError("enumerate_extensions: " + std::to_string(shape.slots()) + " slots give " +
                      (total == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                         : std::to_string(total)) +
                      " candidates, budget " + std::to_string(budget.max_candidates));

  std::vector<std::string> verdict(total);  // empty: valid
  const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(total)));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < total; i += workers) {
        BuiltExtension b = build_extension(shape, factor_set_at(shape, i));
        if (!b.ok()) verdict[i] = b.report.violations().front().axiom;
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  ExtensionCensus census{shape, total, {}, {}, {}, {}, {}};
  std::vector<ModuleExtension> reps;
  for (std::size_t i = 0; i < total; ++i) {
    if (!verdict[i].empty()) {
      ++census.rejections[verdict[i]];
      continue;
    }
    FactorSet fs = factor_set_at(shape, i);
    ModuleExtension e = *build_extension(shape, fs).extension;
    std::size_t cls = reps.size();
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (are_equivalent(shape, e, reps[k])) {
        cls = k;
        break;
      }
    if (cls == reps.size()) {
      reps.push_back(e);
      census.representatives.push_back(census.valid.size());
    }
    census.class_of.push_back(cls);
    census.valid.push_back(std::move(fs));
    census.valid_index.push_back(i);
  }
  return census;
}

Classification classify(const GroupoidPtr& q, const GModule& a, const Budget& budget) {
  Classification out;
  out.census = enumerate_extensions(q, a, budget);
  const ExtensionCensus& c = out.census;
  const FactorSetShape& s = c.shape;
  QI qi = adjoin_identity_module(a);
  CochainComplex complex = cochain_complex(qi.a0, 2);
  Cohomology h2 = cohomology(complex, 2);
  out.h2 = h2.group();

  std::vector<ModuleExtension> exts;
  std::vector<Vector> cls;
  for (const auto& fs : c.valid) {
    exts.push_back(*build_extension(s, fs).extension);
    const ModuleExtension& e = exts.back();
    Vector cocycle = extension_cocycle(e, qi, complex, default_transversal(e.ext));
    if (!h2.is_cocycle(cocycle)) throw InternalError("classify: an extension cocycle is not a cocycle");
    cls.push_back(h2.class_of(cocycle));
  }
  for (std::size_t r : c.representatives) out.class_cohomology.push_back(cls[r]);

  out.constant_on_classes = true;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (!out.h2.equal(cls[i], out.class_cohomology[c.class_of[i]])) out.constant_on_classes = false;
  out.injective = true;
  for (std::size_t i = 0; i < out.class_cohomology.size(); ++i)
    for (std::size_t j = i + 1; j < out.class_cohomology.size(); ++j)
      if (out.h2.equal(out.class_cohomology[i], out.class_cohomology[j])) out.injective = false;
  auto order = out.h2.order();
  out.surjective = order && *order == out.classes();

  std::set<std::vector<Vector>> valid;
  for (const auto& fs : c.valid) valid.insert(fs.values);
  auto add = [&](const FactorSet& x, const FactorSet& y) {
    std::vector<Vector> v;
    for (std::size_t k = 0; k < s.slots(); ++k)
      v.push_back(s.a.group(s.slot_object[k]).add(x.values[k], y.values[k]));
    return v;
  };
  out.valid_sets_form_subgroup = valid.count(zero_factor_set(s).values) == 1;
  for (const auto& x : c.valid)
    for (const auto& y : c.valid)
      if (!valid.count(add(x, y))) out.valid_sets_form_subgroup = false;

  std::vector<std::size_t> sizes(out.classes(), 0);
  for (std::size_t k : c.class_of) ++sizes[k];
  out.classes_equal_size = !sizes.empty() && std::all_of(sizes.begin(), sizes.end(),
                                                          [&](std::size_t n) { return n == sizes.front(); });

  const std::size_t sample = std::min<std::size_t>(exts.size(), 24);
  std::vector<std::vector<char>> rel(sample, std::vector<char>(sample, 0));
  for (std::size_t i = 0; i < sample; ++i)
    for (std::size_t j = 0; j < sample; ++j) rel[i][j] = are_equivalent(s, exts[i], exts[j]).has_value();
  out.equivalence_relation = true;
  for (std::size_t i = 0; i < sample; ++i) {
    if (!rel[i][i]) out.equivalence_relation = false;
    for (std::size_t j = 0; j < sample; ++j) {
      if (rel[i][j] != rel[j][i] || static_cast<bool>(rel[i][j]) != (c.class_of[i] == c.class_of[j]))
        out.equivalence_relation = false;
      for (std::size_t k = 0; k < sample; ++k)
        if (rel[i][j] && rel[j][k] && !rel[i][k]) out.equivalence_relation = false;
    }
  }
  return out;
}

FactorSet pushout_factor_set(const FactorSetShape& s, const Extension& e, const Abelianisation& nab,
                             const GMap& psi, const std::vector<MorphismId>& tau) {
  const OrderedGroupoid& G = *e.G;
  const OrderedGroupoid& Q = *e.Q;
  const Category& l = *s.a.base;
  auto value = [&](MorphismId n) {
    const auto& alpha = nab.alpha.at(ucast(n));
    if (!alpha) throw InternalError("pushout_factor_set: comparison element is not in the kernel");
    ObjectId o = object(l, Q.r(e.phi(n)));
    return s.a.group(o).reduce(psi.at(o).apply(*alpha));
  };
  FactorSet fs;
  for (const auto& [p, q] : s.pairs) {
    MorphismId pq = Q.mul(p, q);
    fs.values.push_back(value(G.mul(G.inv(tau.at(ucast(pq))), G.mul(tau.at(ucast(p)), tau.at(ucast(q))))));
  }
  for (const auto& [q, ob] : s.restrictions) {
    MorphismId p = Q.restriction(ob, q);
    MorphismId lift = G.restriction(tau.at(ucast(ob)), tau.at(ucast(q)));
    fs.values.push_back(value(G.mul(G.inv(tau.at(ucast(p))), lift)));
  }
  return fs;
}

namespace {

ModuleExtension pushout(const FactorSetShape& s, const Extension& e, const Abelianisation& nab, const GMap& psi) {
  BuiltExtension b = build_extension(s, pushout_factor_set(s, e, nab, psi, default_transversal(e)));
  if (!b.ok()) {
    const Violation& v = b.report.violations().front();
    throw InternalError("transgression: the pushout fails " + v.axiom + (v.detail.empty() ? "" : ": " + v.detail));
  }
  return *b.extension;
}

}  // namespace

ExtensionClass transgression(const Extension& e, const GModule& a, const Abelianisation& nab, const GMap& psi) {
  return cocycle_of_extension(pushout(factor_set_shape(e.Q, a), e, nab, psi));
}

bool FiveTerm::ok() const {
  for (std::size_t i = 0; i < 3; ++i)
    if (!composite_zero[i] || !exact[i]) return false;
  return injective && transgression_additive;
}

FiveTerm five_term(const Extension& e, const GModule& a) {
  const OrderedGroupoid& G = *e.G;
  const CategoryPtr& lq = a.base;
  FactorSetShape shape = factor_set_shape(e.Q, a);
  FiveTerm out;

  DerivationGroup der_q = derivations(identity_functor(e.Q), a);
  DerivationGroup der_g = derivations(e.phi, a);
  Abelianisation nab = abelianisation(e, lq);
  HomModules mod = hom_modules(nab.module, a);
  QI qi = adjoin_identity_module(a);
  CochainComplex complex = cochain_complex(qi.a0, 2);
  Cohomology h2q = cohomology(complex, 2);
  InflationResult inf = inflation(e.phi, qi.a0, 2);
  if (!inf.commutes_with_coboundary) throw InternalError("five_term: inflation does not commute with d");
  out.groups = {der_q.group(), der_g.group(), mod.group(), h2q.group(), inf.target.group()};

  IntMatrix m1(der_g.group().generators(), der_q.group().generators());
  for (std::size_t j = 0; j < der_q.group().generators(); ++j) {
    DerivationValues f = der_q.values_of(unit(der_q.group().generators(), j));
    DerivationValues pulled;
    for (MorphismId x = 0; x < static_cast<MorphismId>(G.size()); ++x) pulled.push_back(f.at(ucast(e.phi(x))));
    m1.set_column(j, der_g.class_of(pulled));
  }
  out.maps[0] = AbHom{der_q.group(), der_g.group(), m1};

  IntMatrix m2(mod.group().generators(), der_g.group().generators());
  for (std::size_t j = 0; j < der_g.group().generators(); ++j) {
    DerivationValues f = der_g.values_of(unit(der_g.group().generators(), j));
    GMap restricted;
    for (ObjectId o = 0; o < static_cast<ObjectId>(lq->num_objects()); ++o) {
      const auto& gens = nab.generators[ucast(o)];
      IntMatrix images(a.group(o).generators(), gens.size());
      for (std::size_t k = 0; k < gens.size(); ++k) images.set_column(k, a.group(o).reduce(f.at(ucast(gens[k]))));
      restricted.components.push_back(induced_hom(nab.module, o, nab.relations[ucast(o)], a.group(o), images));
    }
    m2.set_column(j, mod.class_of(restricted));
  }
  out.maps[1] = AbHom{der_g.group(), mod.group(), m2};

  auto transgress = [&](const GMap& psi) {
    ModuleExtension p = pushout(shape, e, nab, psi);
    Vector cocycle = extension_cocycle(p, qi, complex, default_transversal(p.ext));
    if (!h2q.is_cocycle(cocycle)) throw InternalError("five_term: the pushout cocycle is not a cocycle");
    return h2q.class_of(cocycle);
  };
  IntMatrix m3(h2q.group().generators(), mod.group().generators());
  for (std::size_t j = 0; j < mod.group().generators(); ++j)
    m3.set_column(j, transgress(mod.map_of(unit(mod.group().generators(), j))));
  out.maps[2] = AbHom{mod.group(), h2q.group(), m3};
  out.transgression_additive = true;
  for (const GMap& psi : mod.enumerate())
    if (!h2q.group().equal(transgress(psi), out.maps[2].apply(mod.class_of(psi)))) out.transgression_additive = false;

  out.maps[3] = inf.map;

  for (std::size_t i = 0; i < 3; ++i) {
    out.composite_zero[i] = out.maps[i].then(out.maps[i + 1]).is_zero();
    out.exact[i] = out.composite_zero[i] && zlin::homology(out.maps[i], out.maps[i + 1]).is_trivial();
  }
  out.injective = out.maps[0].is_injective();
  return out;
}

}  // namespace ogkit
