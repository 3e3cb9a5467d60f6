#include "ogkit/cohom.hpp"

#include "ogkit/error.hpp"

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

std::vector<ArrowId> chain_key(const Chain& c) {
  if (c.arrows.empty()) return {-1 - c.start};
  return c.arrows;
}

void add_block(IntMatrix& m, std::size_t row, std::size_t col, const IntMatrix& block, long long sign) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) m(row + i, col + j) += sign * block(i, j);
}

bool vanishes(const IntMatrix& m, const Vector& row_moduli) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (zlin::reduce(m(i, j), row_moduli[i]) != 0) return false;
  return true;
}

}  // namespace

std::size_t CochainComplex::chain_index(const Chain& c) const {
  std::size_t n = c.arrows.size();
  if (n >= index_.size()) throw PreconditionError("chain_index: degree beyond the complex");
  auto it = index_[n].find(chain_key(c));
  if (it == index_[n].end()) throw PreconditionError("chain_index: not a normalized chain");
  return it->second;
}

Vector CochainComplex::value(std::size_t n, const Vector& cochain, std::size_t index) const {
  const Chain& c = chains.at(n).at(index);
  const AbGroup& t = module.group(c.end(*module.base));
  std::size_t off = offsets[n][index];
  Vector v(cochain.begin() + static_cast<std::ptrdiff_t>(off),
           cochain.begin() + static_cast<std::ptrdiff_t>(off + t.generators()));
  return t.reduce(v);
}

CochainComplex cochain_complex(const GModule& a, std::size_t max_degree) {
  const Category& cat = *a.base;
  CochainComplex cc;
  cc.module = a;
  cc.max_degree = max_degree;
  for (std::size_t n = 0; n <= max_degree + 1; ++n) {
    cc.chains.push_back(chains(cat, n));
    std::vector<std::size_t> offs;
    Vector mods;
    std::map<std::vector<ArrowId>, std::size_t> idx;
    for (std::size_t k = 0; k < cc.chains[n].size(); ++k) {
      const Chain& c = cc.chains[n][k];
      idx[chain_key(c)] = k;
      offs.push_back(mods.size());
      const AbGroup& t = a.group(c.end(cat));
      mods.insert(mods.end(), t.factors().begin(), t.factors().end());
    }
    cc.offsets.push_back(std::move(offs));
    cc.moduli.push_back(std::move(mods));
    cc.index_.push_back(std::move(idx));
  }
  for (std::size_t n = 0; n <= max_degree; ++n) {
    IntMatrix d(cc.dim(n + 1), cc.dim(n));
    for (std::size_t k = 0; k < cc.chains[n + 1].size(); ++k) {
      const Chain& c = cc.chains[n + 1][k];
      const std::size_t row = cc.offsets[n + 1][k];
      const std::vector<ArrowId>& a_ = c.arrows;
      const IntMatrix id = IntMatrix::identity(a.group(c.end(cat)).generators());
      Chain first{cat.cod(a_[0]), std::vector<ArrowId>(a_.begin() + 1, a_.end())};
      add_block(d, row, cc.offsets[n][cc.chain_index(first)], id, 1);
      for (std::size_t i = 1; i <= n; ++i) {
        ArrowId comp = cat.compose(a_[i - 1], a_[i]);
        if (cat.is_identity(comp)) continue;
        Chain face{c.start, std::vector<ArrowId>(a_.begin(), a_.begin() + static_cast<std::ptrdiff_t>(i - 1))};
        face.arrows.push_back(comp);
        face.arrows.insert(face.arrows.end(), a_.begin() + static_cast<std::ptrdiff_t>(i + 1), a_.end());
        add_block(d, row, cc.offsets[n][cc.chain_index(face)], id, i % 2 == 0 ? 1 : -1);
      }
      Chain last{c.start, std::vector<ArrowId>(a_.begin(), a_.end() - 1)};
      add_block(d, row, cc.offsets[n][cc.chain_index(last)], a.action(a_.back()).matrix, (n + 1) % 2 == 0 ? 1 : -1);
    }
    cc.coboundary.push_back(std::move(d));
  }
  for (std::size_t n = 0; n + 1 <= max_degree; ++n)
    if (!vanishes(cc.coboundary[n + 1] * cc.coboundary[n], cc.moduli[n + 2]))
      throw InternalError("cochain_complex: dd != 0 in degree " + std::to_string(n));
  return cc;
}

Cohomology cohomology(const CochainComplex& c, std::size_t n) {
  if (n > c.max_degree) throw PreconditionError("cohomology: degree beyond the complex");
  IntMatrix boundaries = n == 0 ? IntMatrix(c.dim(0), 0) : c.coboundary[n - 1];
  return Cohomology{n, Subquotient(c.dim(n), c.coboundary[n], c.moduli[n + 1], c.moduli[n], boundaries)};
}

IntMatrix cochain_pullback(const CochainComplex& dom, const CochainComplex& cod, const CategoryFunctor& f,
                           std::size_t n) {
  const Category& cat = *dom.module.base;
  const Category& target = *cod.module.base;
  IntMatrix p(dom.dim(n), cod.dim(n));
  for (std::size_t k = 0; k < dom.chains[n].size(); ++k) {
    const Chain& c = dom.chains[n][k];
    Chain image{f.object_map[ucast(c.start)], {}};
    bool degenerate = false;
    for (ArrowId x : c.arrows) {
      ArrowId y = f.arrow_map[ucast(x)];
      if (target.is_identity(y)) degenerate = true;
      image.arrows.push_back(y);
    }
    if (degenerate) continue;
    std::size_t gens = dom.module.group(c.end(cat)).generators();
    add_block(p, dom.offsets[n][k], cod.offsets[n][cod.chain_index(image)], IntMatrix::identity(gens), 1);
  }
  return p;
}

InflationResult inflation(const OrderedFunctor& phi, const GModule& a, std::size_t n) {
  const CategoryPtr& lqi = a.base;
  if (!lqi->source()) throw PreconditionError("inflation: module is not over L(Q^I)");
  GroupoidPtr qi = lqi->source();
  auto gi = std::make_shared<OrderedGroupoid>(adjoin_identity(*phi.dom));
  OrderedFunctor phi_i = adjoin_identity_functor(phi, gi, qi);
  CategoryPtr lgi = build_L(gi);
  CategoryFunctor f = build_L_functor(phi_i, lgi, lqi);
  GModule pulled = pullback(a, f);
  CochainComplex cq = cochain_complex(a, n);
  CochainComplex cg = cochain_complex(pulled, n);
  IntMatrix pn = cochain_pullback(cg, cq, f, n);
  IntMatrix pn1 = cochain_pullback(cg, cq, f, n + 1);
  IntMatrix diff = pn1 * cq.coboundary[n];
  IntMatrix other = cg.coboundary[n] * pn;
  for (std::size_t i = 0; i < diff.rows(); ++i)
    for (std::size_t j = 0; j < diff.cols(); ++j) diff(i, j) -= other(i, j);
  InflationResult out{cohomology(cq, n), cohomology(cg, n), {}, vanishes(diff, cg.moduli[n + 1])};
  const AbGroup& src = out.source.group();
  IntMatrix m(out.target.group().generators(), src.generators());
  for (std::size_t j = 0; j < src.generators(); ++j) {
    Vector img = pn * out.source.representative(unit(src.generators(), j));
    if (!out.target.is_cocycle(img)) throw InternalError("inflation: pulled-back cocycle is not a cocycle");
    m.set_column(j, out.target.class_of(img));
  }
  out.map = AbHom{src, out.target.group(), m};
  return out;
}

QI adjoin_identity_module(const GModule& a) {
  const Category& l = *a.base;
  if (!l.source()) throw PreconditionError("adjoin_identity_module: module is not over L(Q)");
  QI out;
  out.qi = std::make_shared<OrderedGroupoid>(adjoin_identity(*l.source()));
  out.lqi = build_L(out.qi);
  out.a0 = zero_extend(a, out.lqi);
  return out;
}

Vector extension_cocycle(const ModuleExtension& e, const QI& qi, const CochainComplex& c,
                         const std::vector<MorphismId>& tau) {
  const OrderedGroupoid& G = *e.ext.G;
  const OrderedGroupoid& Q = *e.ext.Q;
  const Category& lqi = *qi.lqi;
  Vector out(c.dim(2), 0);
  for (std::size_t k = 0; k < c.chains[2].size(); ++k) {
    const Chain& ch = c.chains[2][k];
    MorphismId x = lqi.arrow_pair(ch.arrows[0]).second;
    MorphismId y = lqi.arrow_pair(ch.arrows[1]).second;
    MorphismId tx = tau.at(ucast(x)), ty = tau.at(ucast(y));
    MorphismId prod = G.mul(G.corestriction(tx, G.d(ty)), ty);
    MorphismId xy = Q.mul(Q.corestriction(x, Q.d(y)), y);
    MorphismId n = G.mul(G.inv(tau.at(ucast(xy))), prod);
    const auto& v = e.kernel_value.at(ucast(n));
    if (!v) throw InternalError("extension_cocycle: comparison element is not in the kernel");
    std::copy(v->begin(), v->end(), out.begin() + static_cast<std::ptrdiff_t>(c.offsets[2][k]));
  }
  return out;
}

ExtensionClass cocycle_of_extension(const ModuleExtension& e, const std::vector<MorphismId>& transversal) {
  QI qi = adjoin_identity_module(e.A);
  CochainComplex c = cochain_complex(qi.a0, 2);
  Cohomology h2 = cohomology(c, 2);
  std::vector<MorphismId> tau = transversal.empty() ? default_transversal(e.ext) : transversal;
  Vector cocycle = extension_cocycle(e, qi, c, tau);
  if (!h2.is_cocycle(cocycle)) throw InternalError("cocycle_of_extension: the factor cochain is not a cocycle");
  Vector cls = h2.class_of(cocycle);
  return ExtensionClass{std::move(qi), std::move(c), std::move(h2), std::move(cocycle), std::move(cls)};
}

}  // namespace ogkit
