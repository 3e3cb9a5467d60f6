#pragma once

// Derivations along an ordered functor theta: G -> Q, the derived module
// D_theta with its universal derivation, abelianised kernels of extensions,
// the Crowell sequence 0 -> N^ab -> D_phi -> KQ -> 0 and the correspondence
// between derivations and sections of G x| M -> G.

#include "ogkit/gmod.hpp"
#include "ogkit/quotients.hpp"

#include <utility>
#include <vector>

namespace ogkit {

// Values of a theta-derivation, one per morphism g of G, in canonical
// coordinates of B_{(g.r) theta}.
using DerivationValues = std::vector<zlin::Vector>;

// The L(Q) arrow through which g <= h constrains a derivation:
// gf = (hf) <| ((h.r) theta, (g.r) theta).
ArrowId order_arrow(const Category& lq, const OrderedFunctor& theta, MorphismId g, MorphismId h);

// STALK, COCYCLE ((gh)f = gf <| h theta + hf) and ORDER.
ValidationReport validate_derivation(const OrderedFunctor& theta, const GModule& b, const DerivationValues& f);

struct DerivationGroup {
  const GModule* target;
  OrderedFunctor theta;
  zlin::Subquotient space;  // ambient = concatenated values
  std::vector<std::size_t> offsets;

  const zlin::AbGroup& group() const { return space.group(); }
  DerivationValues values_of(const zlin::Vector& canonical) const;
  zlin::Vector class_of(const DerivationValues& f) const;
  // Every derivation; UnsupportedError for infinite groups.
  std::vector<DerivationValues> enumerate() const;
};
// Der_theta(G, B) for B over L(Q). B must outlive the result.
DerivationGroup derivations(const OrderedFunctor& theta, const GModule& b);

struct DerivedModule {
  OrderedFunctor theta;
  GModule module;  // over L(Q)
  // Per object e of L(Q): generators (g, q) with (g.r) theta >= q.d, q.r = e,
  // ordered by q then g, and the relation columns over them.
  std::vector<std::vector<std::pair<MorphismId, MorphismId>>> generators;
  std::vector<zlin::IntMatrix> relations;
  DerivationValues delta;  // g -> <g, (g.r) theta>

  std::size_t generator_index(ObjectId o, MorphismId g, MorphismId q) const;
  // Canonical class of <g, q> in the stalk at q.r.
  zlin::Vector generator_class(MorphismId g, MorphismId q) const;
};
DerivedModule derived_module(const OrderedFunctor& theta, const CategoryPtr& lq);

// The unique module map f^ with delta f^ = f. PreconditionError if f is not
// a derivation; InternalError if a defining relation is not respected.
GMap factor_through(const DerivedModule& d, const GModule& a, const DerivationValues& f);

// g -> g - g.r as a derivation of G into KG (the kernel of ZG -> DeltaZ).
DerivationValues augmentation_derivation(const GModule& zg, const SubmoduleResult& kg);

// Homomorphism of stalk o of a presented module into `cod`, given the images
// (canonical coordinates of cod, one column per ambient generator). Throws
// InternalError if some relation column is not sent to zero.
zlin::AbHom induced_hom(const GModule& dom, ObjectId o, const zlin::IntMatrix& relations,
                        const zlin::AbGroup& cod, const zlin::IntMatrix& images);

// The identity of G over each object of L(Q), for an extension.
std::vector<MorphismId> object_lifts(const Extension& e, const Category& lq);

struct Abelianisation {
  GModule module;  // over L(Q)
  std::vector<std::vector<MorphismId>> generators;  // per object: the kernel group there
  std::vector<zlin::IntMatrix> relations;
  std::vector<std::optional<zlin::Vector>> alpha;  // per morphism of G, on the kernel
};
// N^ab with (e, k) acting by restriction to a lift of k.d followed by
// conjugation with a lift of k. Throws AxiomError if a lift of k.d is not
// below the lift of e, or if the action depends on the chosen lift.
Abelianisation abelianisation(const Extension& e, const CategoryPtr& lq);

// For a union of groups N: the extension N -> N_0 sending n to n.d.
Extension identities_extension(const GroupoidPtr& n);

struct CrowellSequence {
  Abelianisation nab;
  DerivedModule d;
  GModule zq;
  SubmoduleResult kq;
  GMap iota_bar;  // N^ab -> D_phi
  GMap phi_bar;   // D_phi -> KQ
  std::vector<zlin::AbHom> kappa;  // D_phi -> N^ab stalkwise
  std::vector<MorphismId> transversal;

  bool iota_natural = false;
  bool phi_natural = false;
  bool iota_injective = false;
  bool phi_surjective = false;
  bool exact_middle = false;
  bool kappa_splits = false;

  bool ok() const {
    return iota_natural && phi_natural && iota_injective && phi_surjective && exact_middle && kappa_splits;
  }
};
// A transversal Q -> G of phi that is the identity lift on objects; the
// smallest lift is taken elsewhere.
std::vector<MorphismId> default_transversal(const Extension& e);
// Every transversal fixing objects, in lexicographic order, up to `limit`.
std::vector<std::vector<MorphismId>> all_transversals(const Extension& e, std::size_t limit);
CrowellSequence crowell_sequence(const Extension& e, const CategoryPtr& lq,
                                 const std::vector<MorphismId>& transversal = {});

struct SectionCheck {
  std::size_t derivations = 0;
  std::size_t sections = 0;
  bool derived_sections_valid = false;
  bool bijective = false;

  bool ok() const { return derivations == sections && derived_sections_valid && bijective; }
};
// Der(G, M) against ordered functors s: G -> G x| M with s p = id, both
// enumerated. M over L(G) with finite stalks.
SectionCheck section_correspondence(const GroupoidPtr& g, const GModule& m);

}  // namespace ogkit
