#include "ogkit/lcat.hpp"

#include "ogkit/error.hpp"

#include <functional>

namespace ogkit {

Category::Category(Tables t) : t_(std::move(t)) {
  const std::size_t m = t_.arrow_names.size();
  const std::size_t n = t_.object_names.size();
  if (t_.dom.size() != m || t_.cod.size() != m || t_.identity.size() != n || t_.compose.size() != m * m)
    throw PreconditionError("Category: table sizes are inconsistent");
  for (std::size_t f = 0; f < m; ++f)
    if (t_.dom[f] < 0 || static_cast<std::size_t>(t_.dom[f]) >= n || t_.cod[f] < 0 ||
        static_cast<std::size_t>(t_.cod[f]) >= n)
      throw PreconditionError("Category: arrow endpoint out of range");
  for (ArrowId i : t_.identity)
    if (i < 0 || static_cast<std::size_t>(i) >= m) throw PreconditionError("Category: identity out of range");
  for (ArrowId c : t_.compose)
    if (c < -1 || (c >= 0 && static_cast<std::size_t>(c) >= m))
      throw PreconditionError("Category: composite out of range");
}

ArrowId Category::compose(ArrowId f, ArrowId g) const {
  if (f < 0 || g < 0 || static_cast<std::size_t>(f) >= num_arrows() || static_cast<std::size_t>(g) >= num_arrows())
    throw PreconditionError("Category: arrow id out of range");
  return t_.compose[static_cast<std::size_t>(f) * num_arrows() + static_cast<std::size_t>(g)];
}

ArrowId Category::mul(ArrowId f, ArrowId g) const {
  ArrowId fg = compose(f, g);
  if (fg < 0) throw PreconditionError("arrows " + arrow_name(f) + " and " + arrow_name(g) + " are not composable");
  return fg;
}

std::vector<ArrowId> Category::arrows_from(ObjectId o) const {
  std::vector<ArrowId> out;
  for (std::size_t f = 0; f < num_arrows(); ++f)
    if (t_.dom[f] == o) out.push_back(static_cast<ArrowId>(f));
  return out;
}

std::vector<ArrowId> Category::arrows_between(ObjectId a, ObjectId b) const {
  std::vector<ArrowId> out;
  for (std::size_t f = 0; f < num_arrows(); ++f)
    if (t_.dom[f] == a && t_.cod[f] == b) out.push_back(static_cast<ArrowId>(f));
  return out;
}

std::optional<ObjectId> Category::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < num_objects(); ++i)
    if (t_.object_names[i] == name) return static_cast<ObjectId>(i);
  return std::nullopt;
}

std::optional<ArrowId> Category::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < num_arrows(); ++i)
    if (t_.arrow_names[i] == name) return static_cast<ArrowId>(i);
  return std::nullopt;
}

void Category::attach_groupoid(GroupoidPtr g, std::vector<MorphismId> object_identity,
                               std::vector<std::pair<MorphismId, MorphismId>> arrow_pair) {
  source_ = std::move(g);
  object_identity_ = std::move(object_identity);
  arrow_pair_ = std::move(arrow_pair);
  object_index_.clear();
  pair_index_.clear();
  for (std::size_t o = 0; o < object_identity_.size(); ++o)
    object_index_[object_identity_[o]] = static_cast<ObjectId>(o);
  for (std::size_t f = 0; f < arrow_pair_.size(); ++f) pair_index_[arrow_pair_[f]] = static_cast<ArrowId>(f);
}

std::optional<ObjectId> Category::object_of(MorphismId e) const {
  auto it = object_index_.find(e);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Category::arrow_of(MorphismId a, MorphismId b) const {
  auto it = pair_index_.find({a, b});
  if (it == pair_index_.end()) return std::nullopt;
  return it->second;
}

ValidationReport validate_category(const Category& c) {
  ValidationReport rep;
  const auto m = static_cast<ArrowId>(c.num_arrows());
  for (ObjectId o = 0; o < static_cast<ObjectId>(c.num_objects()); ++o) {
    ArrowId i = c.identity(o);
    if (c.dom(i) != o || c.cod(i) != o) rep.add("IDENTITY", {i}, "identity has wrong endpoints");
  }
  for (ArrowId f = 0; f < m; ++f) {
    if (c.compose(c.identity(c.dom(f)), f) != f || c.compose(f, c.identity(c.cod(f))) != f)
      rep.add("IDENTITY", {f});
    for (ArrowId g = 0; g < m; ++g) {
      ArrowId fg = c.compose(f, g);
      bool composable = c.cod(f) == c.dom(g);
      if (composable != (fg >= 0)) {
        rep.add("COMPOSE", {f, g});
        continue;
      }
      if (fg >= 0 && (c.dom(fg) != c.dom(f) || c.cod(fg) != c.cod(g))) rep.add("COMPOSE", {f, g, fg});
    }
  }
  if (!rep.ok()) return rep;
  for (ArrowId f = 0; f < m; ++f)
    for (ArrowId g = 0; g < m; ++g) {
      ArrowId fg = c.compose(f, g);
      if (fg < 0) continue;
      for (ArrowId h = 0; h < m; ++h) {
        ArrowId gh = c.compose(g, h);
        if (gh < 0) continue;
        if (c.compose(fg, h) != c.compose(f, gh)) rep.add("ASSOC", {f, g, h});
      }
    }
  return rep;
}

CategoryPtr build_L(const GroupoidPtr& gp) {
  const OrderedGroupoid& g = *gp;
  Category::Tables t;
  std::vector<MorphismId> obj = g.objects();
  std::map<MorphismId, ObjectId> obj_index;
  for (std::size_t o = 0; o < obj.size(); ++o) {
    obj_index[obj[o]] = static_cast<ObjectId>(o);
    t.object_names.push_back(g.name(obj[o]));
  }
  std::vector<std::pair<MorphismId, MorphismId>> pairs;
  std::map<std::pair<MorphismId, MorphismId>, ArrowId> index;
  for (MorphismId x : g.morphisms())
    for (MorphismId e : obj) {
      if (!g.leq(g.d(x), e)) continue;
      index[{e, x}] = static_cast<ArrowId>(pairs.size());
      pairs.emplace_back(e, x);
      t.arrow_names.push_back("(" + g.name(e) + "," + g.name(x) + ")");
      t.dom.push_back(obj_index.at(e));
      t.cod.push_back(obj_index.at(g.r(x)));
    }
  for (MorphismId e : obj) t.identity.push_back(index.at({e, e}));
  const std::size_t m = pairs.size();
  t.compose.assign(m * m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    auto [e, x] = pairs[i];
    for (std::size_t j = 0; j < m; ++j) {
      auto [f, y] = pairs[j];
      if (g.r(x) != f) continue;
      MorphismId prod = g.mul(g.corestriction(x, g.d(y)), y);
      t.compose[i * m + j] = index.at({e, prod});
    }
  }
  auto c = std::make_shared<Category>(std::move(t));
  c->attach_groupoid(gp, obj, pairs);
  return c;
}

CategoryPtr build_E(const GroupoidPtr& gp) {
  const OrderedGroupoid& g = *gp;
  Category::Tables t;
  std::vector<MorphismId> obj = g.objects();
  std::map<MorphismId, ObjectId> obj_index;
  for (std::size_t o = 0; o < obj.size(); ++o) {
    obj_index[obj[o]] = static_cast<ObjectId>(o);
    t.object_names.push_back(g.name(obj[o]));
  }
  std::vector<std::pair<MorphismId, MorphismId>> pairs;
  std::map<std::pair<MorphismId, MorphismId>, ArrowId> index;
  for (MorphismId y : obj)
    for (MorphismId x : obj) {
      if (!g.leq(y, x)) continue;
      index[{x, y}] = static_cast<ArrowId>(pairs.size());
      pairs.emplace_back(x, y);
      t.arrow_names.push_back("(" + g.name(x) + "," + g.name(y) + ")");
      t.dom.push_back(obj_index.at(x));
      t.cod.push_back(obj_index.at(y));
    }
  for (MorphismId e : obj) t.identity.push_back(index.at({e, e}));
  const std::size_t m = pairs.size();
  t.compose.assign(m * m, -1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (pairs[i].second == pairs[j].first) t.compose[i * m + j] = index.at({pairs[i].first, pairs[j].second});
  auto c = std::make_shared<Category>(std::move(t));
  c->attach_groupoid(gp, obj, pairs);
  return c;
}

bool check_left_cancellative(const Category& c) {
  const auto m = static_cast<ArrowId>(c.num_arrows());
  for (ArrowId f = 0; f < m; ++f)
    for (ArrowId g = 0; g < m; ++g) {
      ArrowId fg = c.compose(f, g);
      if (fg < 0) continue;
      for (ArrowId h = g + 1; h < m; ++h)
        if (c.compose(f, h) == fg) return false;
    }
  return true;
}

std::vector<Chain> chains(const Category& c, std::size_t n) {
  std::vector<Chain> out;
  const auto objects = static_cast<ObjectId>(c.num_objects());
  if (n == 0) {
    for (ObjectId o = 0; o < objects; ++o) out.push_back(Chain{o, {}});
    return out;
  }
  std::vector<std::vector<ArrowId>> from(c.num_objects());
  for (ArrowId f = 0; f < static_cast<ArrowId>(c.num_arrows()); ++f)
    if (!c.is_identity(f)) from[static_cast<std::size_t>(c.dom(f))].push_back(f);
  Chain cur;
  std::function<void(ObjectId)> extend = [&](ObjectId at) {
    if (cur.arrows.size() == n) {
      out.push_back(cur);
      return;
    }
    for (ArrowId f : from[static_cast<std::size_t>(at)]) {
      cur.arrows.push_back(f);
      extend(c.cod(f));
      cur.arrows.pop_back();
    }
  };
  std::vector<ArrowId> firsts;
  for (ArrowId f = 0; f < static_cast<ArrowId>(c.num_arrows()); ++f)
    if (!c.is_identity(f)) firsts.push_back(f);
  for (ArrowId f : firsts) {
    cur.start = c.dom(f);
    cur.arrows = {f};
    extend(c.cod(f));
  }
  return out;
}

ValidationReport validate_category_functor(const CategoryFunctor& f) {
  ValidationReport rep;
  const Category& a = *f.dom;
  const Category& b = *f.cod;
  if (f.object_map.size() != a.num_objects() || f.arrow_map.size() != a.num_arrows()) {
    rep.add("FUNCTOR", {}, "map has wrong length");
    return rep;
  }
  for (ArrowId x = 0; x < static_cast<ArrowId>(a.num_arrows()); ++x) {
    ArrowId fx = f.arrow_map[static_cast<std::size_t>(x)];
    if (fx < 0 || static_cast<std::size_t>(fx) >= b.num_arrows()) {
      rep.add("FUNCTOR", {x}, "arrow maps outside the codomain");
      return rep;
    }
    if (b.dom(fx) != f.object_map[static_cast<std::size_t>(a.dom(x))] ||
        b.cod(fx) != f.object_map[static_cast<std::size_t>(a.cod(x))])
      rep.add("FUNCTOR", {x}, "endpoints not preserved");
  }
  for (ObjectId o = 0; o < static_cast<ObjectId>(a.num_objects()); ++o)
    if (f.arrow_map[static_cast<std::size_t>(a.identity(o))] != b.identity(f.object_map[static_cast<std::size_t>(o)]))
      rep.add("FUNCTOR", {a.identity(o)}, "identity not preserved");
  for (ArrowId x = 0; x < static_cast<ArrowId>(a.num_arrows()); ++x)
    for (ArrowId y = 0; y < static_cast<ArrowId>(a.num_arrows()); ++y) {
      ArrowId xy = a.compose(x, y);
      if (xy < 0) continue;
      if (b.compose(f.arrow_map[static_cast<std::size_t>(x)], f.arrow_map[static_cast<std::size_t>(y)]) !=
          f.arrow_map[static_cast<std::size_t>(xy)])
        rep.add("FUNCTOR", {x, y}, "composition not preserved");
    }
  return rep;
}

CategoryFunctor build_L_functor(const OrderedFunctor& phi, const CategoryPtr& l_dom, const CategoryPtr& l_cod) {
  CategoryFunctor f{l_dom, l_cod, {}, {}};
  for (ObjectId o = 0; o < static_cast<ObjectId>(l_dom->num_objects()); ++o) {
    auto target = l_cod->object_of(phi(l_dom->object_identity(o)));
    if (!target) throw PreconditionError("L(phi): object has no image");
    f.object_map.push_back(*target);
  }
  for (ArrowId x = 0; x < static_cast<ArrowId>(l_dom->num_arrows()); ++x) {
    auto [e, g] = l_dom->arrow_pair(x);
    auto target = l_cod->arrow_of(phi(e), phi(g));
    if (!target) throw PreconditionError("L(phi): arrow has no image (is phi order preserving?)");
    f.arrow_map.push_back(*target);
  }
  return f;
}

}  // namespace ogkit
