#pragma once

// Normal ordered subgroupoids and quotients G//N, kernels of ordered
// functors, extensions and the semidirect product Q x| A.

#include "ogkit/gmod.hpp"
#include "ogkit/ogpd.hpp"

#include <optional>
#include <vector>

namespace ogkit {

// Axioms SUBGROUPOID, N01 (wide), N02 (closed under restriction) and N03
// (closed under bounded conjugation h^-1 n k with k, h <= some g).
ValidationReport is_normal(const OrderedGroupoid& g, const std::vector<MorphismId>& members);

struct QuotientResult {
  GroupoidPtr quotient;
  OrderedFunctor projection;
};

// G//N. Classes are numbered by their smallest member. Throws AxiomError when
// the class relation, order or composition turn out not to be well defined
// (only possible when N is not normal).
QuotientResult quotient(const GroupoidPtr& g, const std::vector<MorphismId>& members);

// For N a union of groups: whether g ~ h <=> h = a g b (a, b in N) agrees with
// the general relation on every pair.
bool simplified_relation_agrees(const OrderedGroupoid& g, const std::vector<MorphismId>& members);

// { g : g phi is an identity }.
std::vector<MorphismId> kernel_of(const OrderedFunctor& phi);

struct Extension {
  GroupoidPtr G, Q;
  OrderedFunctor phi;

  std::vector<MorphismId> kernel() const { return kernel_of(phi); }
};

// FUNCTOR, ORDER, SURJECTIVE, IDENTITY-SEPARATING and UNION-OF-GROUPS (the
// kernel is a disjoint union of groups).
ValidationReport validate_extension(const Extension& e);

// An extension whose kernel is identified with a Q-module A over L(Q): the
// kernel element n at an object x of G corresponds to kernel_value[n] in
// A_{x phi}.
struct ModuleExtension {
  Extension ext;
  GModule A;
  std::vector<std::optional<zlin::Vector>> kernel_value;  // per morphism of G

  // The kernel element at object x of G with value a.
  MorphismId kernel_element(MorphismId x, const zlin::Vector& a) const;
  ObjectId q_object(MorphismId q_identity) const;
};

// validate_extension plus KERNEL-VALUE (bijective onto each stalk),
// ADDITIVE, CONJUGATION (g^-1 n g has value n <| (g phi)) and RESTRICTION
// ((e|n) has value n <| (x phi, e phi)).
ValidationReport validate_module_extension(const ModuleExtension& e);

// Q x| A with arrows (q, a), a in A_{q.r}, in order of q then a. Requires
// finite stalks. (p, a) <= (q, b) iff p <= q and a = b <| (q.r, p.r).
ModuleExtension semidirect(const GroupoidPtr& q, const GModule& a);
// The arrow (q, a) of a semidirect product, and the second coordinate of an
// arrow.
MorphismId semidirect_arrow(const ModuleExtension& sd, MorphismId q, const zlin::Vector& a);
zlin::Vector semidirect_value(const ModuleExtension& sd, MorphismId x);

}  // namespace ogkit
