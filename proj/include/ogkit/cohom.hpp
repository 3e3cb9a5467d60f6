#pragma once

// Cohomology of a finite category with coefficients in a module, through the
// normalized cochain complex: an n-cochain assigns to every chain of n
// non-identity arrows a value in the stalk at its end, and
//
//   (du)(a1..a{n+1}) = u(a2..a{n+1}) + sum_i (-1)^i u(..a_i a_{i+1}..)
//                      + (-1)^{n+1} u(a1..an) <| a{n+1}
//
// where a face whose composite is an identity contributes zero.

#include "ogkit/deriv.hpp"
#include "ogkit/gmod.hpp"
#include "ogkit/quotients.hpp"

#include <map>
#include <vector>

namespace ogkit {

struct CochainComplex {
  GModule module;
  std::size_t max_degree = 0;
  std::vector<std::vector<Chain>> chains;              // degree 0 .. max_degree + 1
  std::vector<std::vector<std::size_t>> offsets;       // per degree, per chain
  std::vector<zlin::Vector> moduli;                    // per degree, per coordinate
  std::vector<zlin::IntMatrix> coboundary;             // d^n: C^n -> C^{n+1}, n <= max_degree

  std::size_t dim(std::size_t n) const { return moduli.at(n).size(); }
  // Position of a chain in degree chain.arrows.size(); PreconditionError if
  // it is not a normalized chain.
  std::size_t chain_index(const Chain& c) const;
  // Value of a cochain on the chain at `index`, in canonical coordinates.
  zlin::Vector value(std::size_t n, const zlin::Vector& cochain, std::size_t index) const;

  std::vector<std::map<std::vector<ArrowId>, std::size_t>> index_;
};
// Throws InternalError if dd != 0.
CochainComplex cochain_complex(const GModule& a, std::size_t max_degree);

struct Cohomology {
  std::size_t degree = 0;
  zlin::Subquotient space;  // ambient = C^n

  const zlin::AbGroup& group() const { return space.group(); }
  bool is_cocycle(const zlin::Vector& cochain) const { return space.contains(cochain); }
  zlin::Vector class_of(const zlin::Vector& cocycle) const { return group().reduce(space.class_of(cocycle)); }
  zlin::Vector representative(const zlin::Vector& canonical) const { return space.representative(canonical); }
};
// H^n for n <= max_degree.
Cohomology cohomology(const CochainComplex& c, std::size_t n);

// Pullback of cochains along a functor F: u -> (b1..bn -> u(Fb1..Fbn)), zero
// when some Fb_i is an identity. `dom` is the complex of a over dom(F) and
// `cod` that of the module it is pulled back from. Rows index C^n(dom).
zlin::IntMatrix cochain_pullback(const CochainComplex& dom, const CochainComplex& cod, const CategoryFunctor& f,
                                 std::size_t n);

struct InflationResult {
  Cohomology source;     // H^n(Q^I, A)
  Cohomology target;     // H^n(G^I, A o phi^I)
  zlin::AbHom map;
  bool commutes_with_coboundary = false;
};
// H^n(Q^I, A) -> H^n(G^I, A o phi^I) for A over L(Q^I).
InflationResult inflation(const OrderedFunctor& phi, const GModule& a_over_qi, std::size_t n);

struct QI {
  GroupoidPtr qi;
  CategoryPtr lqi;
  GModule a0;  // A^0
};
// Q^I, L(Q^I) and A^0 for A over L(Q).
QI adjoin_identity_module(const GModule& a);

struct ExtensionClass {
  QI qi;
  CochainComplex complex;
  Cohomology h2;
  zlin::Vector cocycle;  // in C^2(Q^I, A^0)
  zlin::Vector cls;      // canonical coordinates in H^2
};

// The 2-cocycle c(x, y) = kernel value of tau(x*y)^-1 (tau x * tau y) on every
// 2-chain ((e, x), (x.r, y)) of L(Q^I), for a transversal tau fixing objects.
// Throws InternalError if the result is not a cocycle.
zlin::Vector extension_cocycle(const ModuleExtension& e, const QI& qi, const CochainComplex& c,
                               const std::vector<MorphismId>& transversal);
ExtensionClass cocycle_of_extension(const ModuleExtension& e, const std::vector<MorphismId>& transversal = {});

}  // namespace ogkit
