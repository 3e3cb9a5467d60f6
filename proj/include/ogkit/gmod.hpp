#pragma once

// Modules over an ordered groupoid: functors from a finite category (L(G),
// L(G^I) or E(G)) into finitely generated abelian groups, natural maps
// between them, and the standard constructions on modules.
//
// Actions are written on the right: the arrow (e, g) acts A_e -> A_{g.r}.
// Every stalk keeps the coordinate system it was built in (a Subquotient of
// some ambient Z^n); canonical stalk coordinates are what actions act on.

#include "ogkit/lcat.hpp"
#include "ogkit/zlin.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ogkit {

struct GModule {
  CategoryPtr base;
  std::vector<zlin::AbGroup> groups;    // per object
  std::vector<zlin::AbHom> actions;     // per arrow
  std::vector<zlin::Subquotient> coords;  // per object presentation of groups[o]

  const zlin::AbGroup& group(ObjectId o) const { return groups.at(static_cast<std::size_t>(o)); }
  const zlin::AbHom& action(ArrowId f) const { return actions.at(static_cast<std::size_t>(f)); }
  zlin::Vector act(const zlin::Vector& x, ArrowId f) const { return action(f).apply(x); }
  // Canonical coordinates of an ambient vector, and back.
  zlin::Vector class_of(ObjectId o, const zlin::Vector& ambient) const;
  zlin::Vector representative(ObjectId o, const zlin::Vector& canonical) const;
};

// Builds a module from ambient presentations: stalk o is coords[o]; arrow f
// acts on ambient vectors by ambient_action(f) (cod ambient x dom ambient),
// which must map numerators into numerators and denominators into
// denominators.
GModule realize(const CategoryPtr& base, std::vector<zlin::Subquotient> coords,
                const std::function<zlin::IntMatrix(ArrowId)>& ambient_action);

// Module given directly by canonical groups and action matrices.
GModule make_module(const CategoryPtr& base, std::vector<zlin::AbGroup> groups,
                    std::vector<zlin::IntMatrix> action_matrices);

// Axioms: SHAPE, WELL-DEFINED, FUNCTOR-IDENTITY, FUNCTOR-COMPOSE and, over
// L(G), GROUPOID-ISO (each (g.d, g) acts invertibly).
ValidationReport validate_module(const GModule& m);

// Strict equality: same base shape, same canonical groups and matrices.
bool same_module(const GModule& a, const GModule& b);

struct GMap {
  std::vector<zlin::AbHom> components;  // per object

  const zlin::AbHom& at(ObjectId o) const { return components.at(static_cast<std::size_t>(o)); }
};

// WELL-DEFINED, SHAPE and NATURAL.
ValidationReport validate_gmap(const GModule& dom, const GModule& cod, const GMap& f);
GMap compose(const GMap& first, const GMap& second);
GMap identity_map(const GModule& m);
GMap zero_map(const GModule& dom, const GModule& cod);
bool same_map(const GMap& a, const GMap& b);

GModule constant_module(const CategoryPtr& base, const zlin::AbGroup& a);
// ZG (or (Z/n)G for n > 0) over L(G): stalk at e free on costar(e) in id
// order; (e, g) sends h to (h|g.d) g.
GModule adjoint_module(const CategoryPtr& l, long long coefficient = 0);
// Basis index of h within the stalk of the adjoint module at h.r.
std::size_t adjoint_basis_index(const OrderedGroupoid& g, MorphismId h);

struct SubmoduleResult {
  GModule module;
  GMap embedding;
};
// Objectwise kernel of a module map with the induced actions.
SubmoduleResult kernel_module(const GModule& dom, const GModule& cod, const GMap& f);

// epsilon: ZG -> DeltaZ and KG = ker(epsilon) with its embedding.
GMap augmentation(const GModule& adjoint, const GModule& delta_z);
SubmoduleResult augmentation_module(const CategoryPtr& l);

// Precomposition with a functor between bases.
GModule pullback(const GModule& m, const CategoryFunctor& f);
GMap pullback(const GMap& f, const CategoryFunctor& functor);
// Inclusions E(G) -> L(G) and L(G) -> L(G^I).
CategoryFunctor inclusion_E_to_L(const CategoryPtr& e, const CategoryPtr& l);
CategoryFunctor inclusion_L_to_LI(const CategoryPtr& l, const CategoryPtr& li);
GModule restrict_to_E(const GModule& m, const CategoryPtr& e);
GModule restrict_I(const GModule& m, const CategoryPtr& l);

struct Limit {
  zlin::Subquotient space;  // ambient = concatenated canonical stalk coordinates
  std::vector<std::size_t> offsets;
  std::vector<zlin::AbHom> projections;

  const zlin::AbGroup& group() const { return space.group(); }
  // Canonical limit coordinates of a compatible family, and back.
  zlin::Vector class_of_family(const std::vector<zlin::Vector>& family) const;
  std::vector<zlin::Vector> family_of(const zlin::Vector& canonical) const;
};
Limit lim_module(const GModule& m);

// H(B) over L(G) for B over E(G): stalk at e is the sum of B_{g.d} over
// g in costar(e), summands in id order.
GModule H_functor(const CategoryPtr& l, const GModule& b);
// Offset of the summand labelled g inside the ambient coordinates of
// H(B)_{g.r}.
std::size_t H_summand_offset(const GModule& b, const OrderedGroupoid& g, MorphismId label);

// A^I over L(G^I): limit over E(G) at I.
GModule lift_to_I(const GModule& m, const CategoryPtr& li);
// A^0 over L(G^I): zero at I.
GModule zero_extend(const GModule& m, const CategoryPtr& li);

struct HomModules {
  const GModule* dom;
  const GModule* cod;
  zlin::Subquotient space;  // ambient = row-major component entries
  std::vector<std::size_t> offsets;

  const zlin::AbGroup& group() const { return space.group(); }
  GMap map_of(const zlin::Vector& canonical) const;
  zlin::Vector class_of(const GMap& f) const;
  // Every element; UnsupportedError for infinite groups.
  std::vector<GMap> enumerate() const;
};
// The group of G-maps dom -> cod. The modules must outlive the result.
HomModules hom_modules(const GModule& dom, const GModule& cod);

struct AdjunctionCheck {
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  bool maps_valid = false;
  bool mutually_inverse = false;
  bool ok() const { return left_size == right_size && maps_valid && mutually_inverse; }
};
// Hom_L(H B, C) <-> Hom_E(B, C|E).
AdjunctionCheck adjunction_check_H(const CategoryPtr& l, const CategoryPtr& e, const GModule& b,
                                   const GModule& c);
// Hom_L(G)(B|L(G), C) <-> Hom_L(G^I)(B, C^I).
AdjunctionCheck adjunction_check_I(const CategoryPtr& l, const CategoryPtr& li, const GModule& b,
                                   const GModule& c);
// Hom_L(G^I)(A^0, B) <-> Hom_L(G)(A, B|L(G)).
AdjunctionCheck adjunction_check_0(const CategoryPtr& l, const CategoryPtr& li, const GModule& a,
                                   const GModule& b);

}  // namespace ogkit
