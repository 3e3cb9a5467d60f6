#pragma once

// Extensions of a module A by Q in fibre coordinates: the morphisms over q
// are pairs (q, a) with a in A_{q.r}, and a factor set (f, r) twists
//
//   (p, a)(q, b) = (pq, a <| q + b + f(p, q))
//   (p, a) <= (q, b)  iff  p <= q and a = b <| (q.r, p.r) + r(q, p.d).
//
// Nothing is assumed about (f, r): a candidate is accepted exactly when the
// resulting tables pass the groupoid, ordered-groupoid and extension axioms.
// Enumerating all candidates and partitioning them by equivalence gives an
// oracle for the classification by H^2(Q^I, A^0).

#include "ogkit/cohom.hpp"
#include "ogkit/deriv.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ogkit {

// The coordinates of a factor set over (Q, A).
struct FactorSetShape {
  GroupoidPtr q;
  GModule a;
  // f slots: composable pairs of non-identities, in lexicographic order.
  std::vector<std::pair<MorphismId, MorphismId>> pairs;
  // r slots: (q, e) with e an identity strictly below q.d.
  std::vector<std::pair<MorphismId, MorphismId>> restrictions;
  std::vector<ObjectId> slot_object;  // stalk of each slot, f slots first

  std::size_t slots() const { return slot_object.size(); }
  // Number of candidates, saturating at SIZE_MAX.
  std::size_t candidates() const;
};
FactorSetShape factor_set_shape(const GroupoidPtr& q, const GModule& a);

struct FactorSet {
  std::vector<zlin::Vector> values;  // one per slot of the shape

  bool operator==(const FactorSet&) const = default;
};

FactorSet zero_factor_set(const FactorSetShape& s);
// f(p, q), zero when p or q is an identity.
zlin::Vector factor_value(const FactorSetShape& s, const FactorSet& fs, MorphismId p, MorphismId q);
// r(q, e), zero when e = q.d.
zlin::Vector restriction_value(const FactorSetShape& s, const FactorSet& fs, MorphismId q, MorphismId e);
// The candidate with the given index in mixed-radix order (first slot fastest).
FactorSet factor_set_at(const FactorSetShape& s, std::size_t index);
std::string factor_set_string(const FactorSetShape& s, const FactorSet& fs);

struct BuiltExtension {
  std::optional<ModuleExtension> extension;
  ValidationReport report;

  bool ok() const { return extension.has_value(); }
};
// Morphism (q, a) has id offset(q) + index of a in A_{q.r}.elements(), the
// layout used by semidirect.
BuiltExtension build_extension(const FactorSetShape& s, const FactorSet& fs);

// Equivalences of fibre-translation form (q, a) -> (q, a + c(q)).
using EquivalenceWitness = std::vector<zlin::Vector>;  // per morphism of Q
// Tries every c with c(identity) = 0 and returns the first one giving an
// ordered functor G1 -> G2. Both extensions must come from build_extension
// over the same shape.
std::optional<EquivalenceWitness> are_equivalent(const FactorSetShape& s, const ModuleExtension& e1,
                                                 const ModuleExtension& e2);
// Searches arbitrary maps G1 -> G2 over Q fixing the kernel for an ordered
// functor. Returns nullopt when more than `limit` maps would be needed.
std::optional<bool> general_equivalence_exists(const ModuleExtension& e1, const ModuleExtension& e2,
                                               std::size_t limit = 1u << 16);

struct Budget {
  std::size_t max_q = 6;
  std::size_t max_stalk = 4;
  std::size_t max_candidates = 1u << 20;
};
// Worker count: OGKIT_THREADS if set and positive, else the hardware count
// capped at 8.
unsigned worker_count();

struct ExtensionCensus {
  FactorSetShape shape;
  std::size_t candidates = 0;
  std::vector<FactorSet> valid;
  std::vector<std::size_t> valid_index;  // candidate index of each valid set
  std::vector<std::size_t> class_of;     // per valid set
  std::vector<std::size_t> representatives;  // index into valid, per class
  std::map<std::string, std::size_t> rejections;  // first violated axiom -> count
};
// BudgetError when |Q|, a stalk or the candidate count exceeds the budget.
ExtensionCensus enumerate_extensions(const GroupoidPtr& q, const GModule& a, const Budget& budget = {});

struct Classification {
  ExtensionCensus census;
  zlin::AbGroup h2;
  std::vector<zlin::Vector> class_cohomology;  // per class

  bool constant_on_classes = false;
  bool injective = false;
  bool surjective = false;
  bool valid_sets_form_subgroup = false;
  bool classes_equal_size = false;
  bool equivalence_relation = false;

  std::size_t classes() const { return census.representatives.size(); }
  bool ok() const {
    return constant_on_classes && injective && surjective && valid_sets_form_subgroup && classes_equal_size &&
           equivalence_relation;
  }
};
Classification classify(const GroupoidPtr& q, const GModule& a, const Budget& budget = {});

// The factor set of the pushout of e along psi: N^ab -> A, measured with the
// transversal tau.
FactorSet pushout_factor_set(const FactorSetShape& s, const Extension& e, const Abelianisation& nab,
                             const GMap& psi, const std::vector<MorphismId>& tau);
// The class in H^2(Q^I, A^0) of the pushout. InternalError if the pushout
// fails an axiom.
ExtensionClass transgression(const Extension& e, const GModule& a, const Abelianisation& nab, const GMap& psi);

struct FiveTerm {
  // Der(Q, A), Der_phi(G, A), Mod_Q(N^ab, A), H^2(Q^I, A^0), H^2(G^I, A^0).
  std::array<zlin::AbGroup, 5> groups;
  // Precomposition with phi, restriction to N, transgression, inflation.
  std::array<zlin::AbHom, 4> maps;
  std::array<bool, 3> composite_zero{};
  std::array<bool, 3> exact{};  // at Der_phi, Mod_Q and H^2(Q^I)
  bool injective = false;
  bool transgression_additive = false;

  bool ok() const;
};
// A over L(Q) with finite stalks.
FiveTerm five_term(const Extension& e, const GModule& a);

}  // namespace ogkit
