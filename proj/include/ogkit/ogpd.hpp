#pragma once

// Finite ordered groupoids stored as explicit tables, their axioms, and the
// partial operations built from the order (restriction, corestriction,
// pseudoproduct).
//
// Conventions: morphisms are small integer ids. x.d = x x^{-1} is the domain
// identity and x.r = x^{-1} x the range identity; the product g*h is defined
// when g.r == h.d (composition is written left to right).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ogkit {

using MorphismId = int;
inline constexpr MorphismId kUndefined = -1;

struct Violation {
  std::string axiom;
  std::vector<MorphismId> witnesses;
  std::string detail;
};

class ValidationReport {
 public:
  void add(std::string axiom, std::vector<MorphismId> witnesses, std::string detail = {});
  void merge(const ValidationReport& other);

  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  bool mentions(const std::string& axiom) const;
  // Total count per axiom including violations dropped by the per-axiom cap.
  std::size_t count(const std::string& axiom) const;

  // Each axiom keeps at most this many witnessed violations.
  static constexpr std::size_t kMaxPerAxiom = 8;

 private:
  std::vector<Violation> violations_;
  std::vector<std::pair<std::string, std::size_t>> counts_;
};

class OrderedGroupoid {
 public:
  struct Tables {
    std::vector<std::string> names;
    std::vector<MorphismId> d, r, inv;
    std::vector<MorphismId> compose;  // n*n, kUndefined where not composable
    std::vector<char> leq;            // n*n
  };

  OrderedGroupoid() = default;
  explicit OrderedGroupoid(Tables tables);

  std::size_t size() const { return t_.names.size(); }
  const Tables& tables() const { return t_; }

  const std::string& name(MorphismId x) const { return t_.names[idx(x)]; }
  std::optional<MorphismId> find(const std::string& name) const;

  MorphismId d(MorphismId x) const { return t_.d[idx(x)]; }
  MorphismId r(MorphismId x) const { return t_.r[idx(x)]; }
  MorphismId inv(MorphismId x) const { return t_.inv[idx(x)]; }
  bool is_identity(MorphismId x) const { return t_.d[idx(x)] == x && t_.r[idx(x)] == x; }
  // Product g*h, kUndefined if g.r != h.d.
  MorphismId compose(MorphismId g, MorphismId h) const { return t_.compose[idx(g) * size() + idx(h)]; }
  // Throws PreconditionError when undefined.
  MorphismId mul(MorphismId g, MorphismId h) const;
  bool leq(MorphismId x, MorphismId y) const { return t_.leq[idx(x) * size() + idx(y)] != 0; }

  // Identities in increasing id order.
  const std::vector<MorphismId>& objects() const { return objects_; }
  std::vector<MorphismId> morphisms() const;

  std::vector<MorphismId> star(MorphismId e) const;
  std::vector<MorphismId> costar(MorphismId e) const;
  std::vector<MorphismId> local_group(MorphismId e) const;

  // (e|x): the unique z <= x with z.d == e. Requires e <= x.d.
  MorphismId restriction(MorphismId e, MorphismId x) const;
  // (x|e) = (e|x^{-1})^{-1}. Requires e <= x.r.
  MorphismId corestriction(MorphismId x, MorphismId e) const;
  // Greatest lower bound in the poset of identities, if it exists.
  std::optional<MorphismId> glb(MorphismId e, MorphismId f) const;
  // g*h = (g|l)(l|h) where l = glb(g.r, h.d); nullopt when l does not exist.
  std::optional<MorphismId> pseudoproduct(MorphismId g, MorphismId h) const;

  // Every pair of identities has a glb.
  bool is_inductive() const;
  // Every morphism is a loop (x.d == x.r).
  bool is_union_of_groups() const;

 private:
  std::size_t idx(MorphismId x) const;

  Tables t_;
  std::vector<MorphismId> objects_;
  // restriction_[x * n + e]: id, kUndefined (e not below x.d or no
  // candidate) or -2 (several candidates).
  std::vector<MorphismId> restriction_;
};

using GroupoidPtr = std::shared_ptr<const OrderedGroupoid>;

// Assembles groupoid tables from a generating description: identity
// compositions and inverses are filled in, and the order is closed
// reflexively and transitively.
class GroupoidBuilder {
 public:
  MorphismId add_object(const std::string& name);
  MorphismId add_morphism(const std::string& name, MorphismId d, MorphismId r);
  void set_compose(MorphismId g, MorphismId h, MorphismId gh);
  void set_leq(MorphismId x, MorphismId y);
  // Explicit inverse; otherwise inverses are found from the composition table.
  void set_inverse(MorphismId x, MorphismId y);

  std::size_t size() const { return names_.size(); }
  OrderedGroupoid build() const;
  GroupoidPtr build_shared() const { return std::make_shared<OrderedGroupoid>(build()); }

 private:
  std::vector<std::string> names_;
  std::vector<MorphismId> d_, r_;
  std::vector<std::pair<std::pair<MorphismId, MorphismId>, MorphismId>> compose_;
  std::vector<std::pair<MorphismId, MorphismId>> leq_;
  std::vector<std::pair<MorphismId, MorphismId>> inverse_;
};

// Reflexive-transitive closure of a relation matrix (n*n).
void close_order(std::vector<char>& leq, std::size_t n);

// Checks category, inverse and ordered-groupoid axioms. Axiom names used in
// reports: DOMAIN, COMPOSE, ASSOC, IDENTITY, INVERSE, ORDER-REFL,
// ORDER-ANTISYM, ORDER-TRANS, OG1, OG2, OG3, OG4, ORDER-IDENT.
ValidationReport validate(const OrderedGroupoid& g);

struct OrderedFunctor {
  GroupoidPtr dom;
  GroupoidPtr cod;
  std::vector<MorphismId> map;

  MorphismId operator()(MorphismId x) const { return map.at(static_cast<std::size_t>(x)); }
};

// FUNCTOR (d, r, composition, identities) and ORDER (g <= h => gF <= hF).
ValidationReport validate_functor(const OrderedFunctor& f);
bool is_identity_separating(const OrderedFunctor& f);
bool is_surjective(const OrderedFunctor& f);
// Bijective functor whose inverse is also order preserving.
bool is_isomorphism(const OrderedFunctor& f);
OrderedFunctor identity_functor(const GroupoidPtr& g);
OrderedFunctor compose(const OrderedFunctor& first, const OrderedFunctor& second);

// G^I: a new identity "I" (id = |G|) strictly above every identity of G and
// incomparable with every other morphism.
OrderedGroupoid adjoin_identity(const OrderedGroupoid& g);
// Inclusion G -> G^I (ids are preserved).
OrderedFunctor adjoin_identity_inclusion(const GroupoidPtr& g, const GroupoidPtr& gi);
// phi^I : G^I -> Q^I extending phi by I -> I.
OrderedFunctor adjoin_identity_functor(const OrderedFunctor& phi, const GroupoidPtr& gi,
                                       const GroupoidPtr& qi);

// Sub-ordered-groupoid on a member set (closed under composition and
// inverses, containing the identities of its members). Ids are renumbered in
// increasing order of the ambient ids; the inclusion is returned alongside.
struct SubgroupoidResult {
  GroupoidPtr groupoid;
  OrderedFunctor inclusion;
};
SubgroupoidResult subgroupoid(const GroupoidPtr& g, const std::vector<MorphismId>& members);

// The trivially ordered groupoid of identities of g (its G_0).
GroupoidPtr identities_of(const OrderedGroupoid& g);

// Searches for an isomorphism of ordered groupoids by backtracking.
std::optional<OrderedFunctor> find_isomorphism(const GroupoidPtr& a, const GroupoidPtr& b);

std::string describe(const OrderedGroupoid& g, const ValidationReport& report);

}  // namespace ogkit
