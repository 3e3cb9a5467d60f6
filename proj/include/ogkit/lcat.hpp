#pragma once

// Finite small categories with explicit composition tables, the categories
// L(G) and E(G) attached to an ordered groupoid, and normalized composable
// chains (the nerve used by the cochain complex).
//
// Composition is written left to right: mul(f, g) is "f then g" and is
// defined when cod(f) == dom(g).

#include "ogkit/ogpd.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ogkit {

using ArrowId = int;
using ObjectId = int;

class Category {
 public:
  struct Tables {
    std::vector<std::string> object_names;
    std::vector<std::string> arrow_names;
    std::vector<ObjectId> dom, cod;
    std::vector<ArrowId> identity;  // per object
    std::vector<ArrowId> compose;   // arrows*arrows, -1 where cod(f) != dom(g)
  };

  Category() = default;
  explicit Category(Tables t);

  std::size_t num_objects() const { return t_.object_names.size(); }
  std::size_t num_arrows() const { return t_.arrow_names.size(); }
  const Tables& tables() const { return t_; }

  const std::string& object_name(ObjectId o) const { return t_.object_names.at(static_cast<std::size_t>(o)); }
  const std::string& arrow_name(ArrowId f) const { return t_.arrow_names.at(static_cast<std::size_t>(f)); }
  ObjectId dom(ArrowId f) const { return t_.dom.at(static_cast<std::size_t>(f)); }
  ObjectId cod(ArrowId f) const { return t_.cod.at(static_cast<std::size_t>(f)); }
  ArrowId identity(ObjectId o) const { return t_.identity.at(static_cast<std::size_t>(o)); }
  bool is_identity(ArrowId f) const { return identity(dom(f)) == f; }
  // f then g; -1 when not composable.
  ArrowId compose(ArrowId f, ArrowId g) const;
  // Throws PreconditionError when not composable.
  ArrowId mul(ArrowId f, ArrowId g) const;

  std::vector<ArrowId> arrows_from(ObjectId o) const;
  std::vector<ArrowId> arrows_between(ObjectId a, ObjectId b) const;
  std::optional<ObjectId> find_object(const std::string& name) const;
  std::optional<ArrowId> find_arrow(const std::string& name) const;

  // Groupoid data when this category is L(G) or E(G): the identity of G
  // behind each object and the pair (e, g) resp. (x, y) behind each arrow.
  void attach_groupoid(GroupoidPtr g, std::vector<MorphismId> object_identity,
                       std::vector<std::pair<MorphismId, MorphismId>> arrow_pair);
  const GroupoidPtr& source() const { return source_; }
  MorphismId object_identity(ObjectId o) const { return object_identity_.at(static_cast<std::size_t>(o)); }
  const std::pair<MorphismId, MorphismId>& arrow_pair(ArrowId f) const {
    return arrow_pair_.at(static_cast<std::size_t>(f));
  }
  std::optional<ObjectId> object_of(MorphismId e) const;
  std::optional<ArrowId> arrow_of(MorphismId a, MorphismId b) const;

 private:
  Tables t_;
  GroupoidPtr source_;
  std::vector<MorphismId> object_identity_;
  std::vector<std::pair<MorphismId, MorphismId>> arrow_pair_;
  std::map<MorphismId, ObjectId> object_index_;
  std::map<std::pair<MorphismId, MorphismId>, ArrowId> pair_index_;
};

using CategoryPtr = std::shared_ptr<const Category>;

// Associativity and identity laws (ASSOC, IDENTITY, COMPOSE).
ValidationReport validate_category(const Category& c);

// Objects G_0; arrows (e, g) with g.d <= e, dom e and cod g.r;
// (e, g)(g.r, h) = (e, (g|h.d) h); identity (e, e). Arrows are ordered by
// g then e.
CategoryPtr build_L(const GroupoidPtr& g);
// The poset category of (G_0, <=): one arrow (x, y) from x to y when x >= y.
CategoryPtr build_E(const GroupoidPtr& g);

bool check_left_cancellative(const Category& c);

// A normalized composable chain: arrows[i] then arrows[i+1], none an
// identity. A 0-chain records just its object.
struct Chain {
  ObjectId start = 0;
  std::vector<ArrowId> arrows;

  ObjectId end(const Category& c) const { return arrows.empty() ? start : c.cod(arrows.back()); }
  bool operator==(const Chain&) const = default;
};

// All normalized n-chains in lexicographic order of arrow ids (n = 0: one per
// object).
std::vector<Chain> chains(const Category& c, std::size_t n);

// Functor between categories given on arrows (objects follow from dom/cod).
struct CategoryFunctor {
  CategoryPtr dom, cod;
  std::vector<ObjectId> object_map;
  std::vector<ArrowId> arrow_map;
};

ValidationReport validate_category_functor(const CategoryFunctor& f);

// L(phi): (e, g) -> (e phi, g phi).
CategoryFunctor build_L_functor(const OrderedFunctor& phi, const CategoryPtr& l_dom, const CategoryPtr& l_cod);

}  // namespace ogkit
