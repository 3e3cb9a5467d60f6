#include "ogkit/io.hpp"

#include "ogkit/error.hpp"
#include "ogkit/lcat.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ogkit::io {

using nlohmann::json;
using zlin::AbGroup;
using zlin::IntMatrix;
using zlin::Integer;

namespace {

std::size_t ucast(int x) { return static_cast<std::size_t>(x); }

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where.empty() ? what : where + ": " + what);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field \"" + key + "\"");
  return *it;
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

Integer integer_at(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  fail(where, "expected an integer");
}

GroupoidDoc parse_groupoid(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected a groupoid object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "objects" && it.key() != "morphisms" && it.key() != "compose" && it.key() != "leq" &&
        it.key() != "subgroupoid")
      fail(where, "unknown field \"" + it.key() + "\"");
  auto at = [&](const std::string& rest) { return where.empty() ? rest : where + "." + rest; };
  GroupoidBuilder b;
  std::map<std::string, MorphismId> ids;
  auto lookup = [&](const json& v, const std::string& loc) {
    std::string name = string_at(v, loc);
    auto it = ids.find(name);
    if (it == ids.end()) fail(loc, "unknown id \"" + name + "\"");
    return it->second;
  };
  const json& objects = array_at(field(j, "objects", where), at("objects"));
  for (std::size_t i = 0; i < objects.size(); ++i) {
    std::string loc = at("objects[" + std::to_string(i) + "]");
    std::string name = string_at(objects[i], loc);
    if (ids.count(name)) fail(loc, "duplicate id \"" + name + "\"");
    ids[name] = b.add_object(name);
  }
  std::vector<std::pair<MorphismId, std::pair<const json*, std::string>>> inverses;
  if (j.contains("morphisms")) {
    const json& ms = array_at(j["morphisms"], at("morphisms"));
    for (std::size_t i = 0; i < ms.size(); ++i) {
      std::string loc = at("morphisms[" + std::to_string(i) + "]");
      std::string name = string_at(field(ms[i], "id", loc), loc + ".id");
      if (ids.count(name)) fail(loc + ".id", "duplicate id \"" + name + "\"");
      MorphismId d = lookup(field(ms[i], "d", loc), loc + ".d");
      MorphismId r = lookup(field(ms[i], "r", loc), loc + ".r");
      ids[name] = b.add_morphism(name, d, r);
      if (ms[i].contains("inv")) inverses.push_back({ids[name], {&ms[i]["inv"], loc + ".inv"}});
    }
  }
  for (const auto& [x, inv] : inverses) b.set_inverse(x, lookup(*inv.first, inv.second));
  if (j.contains("compose")) {
    const json& cs = array_at(j["compose"], at("compose"));
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::string loc = at("compose[" + std::to_string(i) + "]");
      if (!cs[i].is_array() || cs[i].size() != 3) fail(loc, "expected [g, h, gh]");
      b.set_compose(lookup(cs[i][0], loc), lookup(cs[i][1], loc), lookup(cs[i][2], loc));
    }
  }
  std::set<std::pair<MorphismId, MorphismId>> given;
  if (j.contains("leq")) {
    const json& ls = array_at(j["leq"], at("leq"));
    for (std::size_t i = 0; i < ls.size(); ++i) {
      std::string loc = at("leq[" + std::to_string(i) + "]");
      if (!ls[i].is_array() || ls[i].size() != 2) fail(loc, "expected [x, y]");
      MorphismId x = lookup(ls[i][0], loc), y = lookup(ls[i][1], loc);
      if (x != y) given.insert({x, y});
      b.set_leq(x, y);
    }
  }
  GroupoidDoc doc;
  try {
    doc.groupoid = b.build_shared();
  } catch (const PreconditionError& e) {
    fail(where, e.what());
  }
  doc.leq_given = given.size() + doc.groupoid->size();
  for (MorphismId x = 0; x < static_cast<MorphismId>(doc.groupoid->size()); ++x)
    for (MorphismId y = 0; y < static_cast<MorphismId>(doc.groupoid->size()); ++y)
      doc.leq_closed += doc.groupoid->leq(x, y);
  if (j.contains("subgroupoid")) {
    const json& s = array_at(j["subgroupoid"], at("subgroupoid"));
    std::set<MorphismId> members;
    for (std::size_t i = 0; i < s.size(); ++i) members.insert(lookup(s[i], at("subgroupoid[" + std::to_string(i) + "]")));
    doc.subgroupoid = std::vector<MorphismId>(members.begin(), members.end());
  }
  return doc;
}

std::vector<Integer> factors_at(const json& j, const std::string& where) {
  const json& a = array_at(j, where);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(integer_at(a[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

AbGroup group_at(const json& j, const std::string& where) {
  try {
    return AbGroup(factors_at(j, where));
  } catch (const PreconditionError& e) {
    fail(where, e.what());
  }
}

IntMatrix matrix_at(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  const json& a = array_at(j, where);
  if (a.size() != rows)
    fail(where, "expected " + std::to_string(rows) + " rows, found " + std::to_string(a.size()));
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::string loc = where + "[" + std::to_string(i) + "]";
    const json& row = array_at(a[i], loc);
    if (row.size() != cols)
      fail(loc, "expected " + std::to_string(cols) + " columns, found " + std::to_string(row.size()));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = integer_at(row[k], loc + "[" + std::to_string(k) + "]");
  }
  return m;
}

OrderedFunctor functor_at(const json& j, const GroupoidPtr& dom, const GroupoidPtr& cod, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object mapping ids to ids");
  OrderedFunctor f{dom, cod, std::vector<MorphismId>(dom->size(), kUndefined)};
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string loc = where + "." + it.key();
    auto x = dom->find(it.key());
    if (!x) fail(loc, "unknown id \"" + it.key() + "\"");
    std::string target = string_at(it.value(), loc);
    auto y = cod->find(target);
    if (!y) fail(loc, "unknown id \"" + target + "\"");
    f.map[ucast(*x)] = *y;
  }
  for (MorphismId x = 0; x < static_cast<MorphismId>(dom->size()); ++x)
    if (f.map[ucast(x)] == kUndefined) fail(where, "no image for \"" + dom->name(x) + "\"");
  return f;
}

json groupoid_json(const OrderedGroupoid& g, const std::vector<MorphismId>& subgroupoid) {
  json j;
  j["objects"] = json::array();
  for (MorphismId e : g.objects()) j["objects"].push_back(g.name(e));
  j["morphisms"] = json::array();
  j["compose"] = json::array();
  j["leq"] = json::array();
  for (MorphismId x = 0; x < static_cast<MorphismId>(g.size()); ++x) {
    if (!g.is_identity(x))
      j["morphisms"].push_back({{"id", g.name(x)}, {"d", g.name(g.d(x))}, {"r", g.name(g.r(x))}, {"inv", g.name(g.inv(x))}});
    for (MorphismId y = 0; y < static_cast<MorphismId>(g.size()); ++y) {
      MorphismId c = g.compose(x, y);
      if (c != kUndefined && !g.is_identity(x) && !g.is_identity(y))
        j["compose"].push_back({g.name(x), g.name(y), g.name(c)});
      if (x != y && g.leq(x, y)) j["leq"].push_back({g.name(x), g.name(y)});
    }
  }
  if (!subgroupoid.empty()) {
    j["subgroupoid"] = json::array();
    for (MorphismId x : subgroupoid) j["subgroupoid"].push_back(g.name(x));
  }
  return j;
}

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

}  // namespace

GroupoidDoc load_groupoid(const std::string& text) { return parse_groupoid(parse_text(text), ""); }

const char* base_name(ModuleBase b) {
  switch (b) {
    case ModuleBase::L:
      return "L";
    case ModuleBase::LI:
      return "LI";
    case ModuleBase::E:
      return "E";
  }
  return "?";
}

ModuleDoc load_module(const std::string& text, const GroupoidPtr& g) {
  json j = parse_text(text);
  if (!j.is_object()) fail("", "expected a module object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "base" && it.key() != "groups" && it.key() != "actions" && it.key() != "constant")
      fail("", "unknown field \"" + it.key() + "\"");
  ModuleDoc doc;
  std::string base = string_at(field(j, "base", ""), "base");
  CategoryPtr cat;
  if (base == "L") {
    doc.base = ModuleBase::L;
    cat = build_L(g);
  } else if (base == "LI") {
    doc.base = ModuleBase::LI;
    cat = build_L(std::make_shared<OrderedGroupoid>(adjoin_identity(*g)));
  } else if (base == "E") {
    doc.base = ModuleBase::E;
    cat = build_E(g);
  } else {
    fail("base", "expected \"L\", \"LI\" or \"E\"");
  }
  if (j.contains("constant")) {
    if (j.contains("groups") || j.contains("actions")) fail("constant", "cannot be combined with groups or actions");
    doc.module = constant_module(cat, group_at(j["constant"], "constant"));
    return doc;
  }
  const json& groups = field(j, "groups", "");
  if (!groups.is_object()) fail("groups", "expected an object keyed by object names");
  std::vector<AbGroup> gs(cat->num_objects());
  std::vector<char> seen(cat->num_objects(), 0);
  for (auto it = groups.begin(); it != groups.end(); ++it) {
    auto o = cat->find_object(it.key());
    if (!o) fail("groups." + it.key(), "unknown object");
    gs[ucast(*o)] = group_at(it.value(), "groups." + it.key());
    seen[ucast(*o)] = 1;
  }
  for (ObjectId o = 0; o < static_cast<ObjectId>(cat->num_objects()); ++o)
    if (!seen[ucast(o)]) fail("groups", "missing object \"" + cat->object_name(o) + "\"");
  std::vector<std::optional<IntMatrix>> actions(cat->num_arrows());
  if (j.contains("actions")) {
    const json& as = j["actions"];
    if (!as.is_object()) fail("actions", "expected an object keyed by \"e,g\"");
    for (auto it = as.begin(); it != as.end(); ++it) {
      std::string loc = "actions." + it.key();
      auto f = cat->find_arrow("(" + it.key() + ")");
      if (!f) fail(loc, "unknown arrow");
      actions[ucast(*f)] = matrix_at(it.value(), gs[ucast(cat->cod(*f))].generators(),
                                     gs[ucast(cat->dom(*f))].generators(), loc);
    }
  }
  std::vector<IntMatrix> ms;
  for (ArrowId f = 0; f < static_cast<ArrowId>(cat->num_arrows()); ++f) {
    const std::size_t rows = gs[ucast(cat->cod(f))].generators(), cols = gs[ucast(cat->dom(f))].generators();
    if (actions[ucast(f)]) {
      ms.push_back(*actions[ucast(f)]);
    } else if (cat->is_identity(f)) {
      ms.push_back(IntMatrix::identity(rows));
    } else if (rows == 0 || cols == 0) {
      ms.push_back(IntMatrix(rows, cols));
    } else {
      std::string name = cat->arrow_name(f);
      fail("actions", "missing arrow \"" + name.substr(1, name.size() - 2) + "\"");
    }
  }
  doc.module = make_module(cat, std::move(gs), std::move(ms));
  return doc;
}

ExtensionDoc load_extension(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) fail("", "expected an extension object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "N" && it.key() != "G" && it.key() != "Q" && it.key() != "iota" && it.key() != "phi")
      fail("", "unknown field \"" + it.key() + "\"");
  ExtensionDoc doc;
  doc.n = parse_groupoid(field(j, "N", ""), "N");
  doc.g = parse_groupoid(field(j, "G", ""), "G");
  doc.q = parse_groupoid(field(j, "Q", ""), "Q");
  doc.iota = functor_at(field(j, "iota", ""), doc.n.groupoid, doc.g.groupoid, "iota");
  doc.extension = Extension{doc.g.groupoid, doc.q.groupoid,
                            functor_at(field(j, "phi", ""), doc.g.groupoid, doc.q.groupoid, "phi")};
  return doc;
}

ValidationReport validate_extension_doc(const ExtensionDoc& e) {
  ValidationReport rep;
  for (const auto& [label, doc] : {std::pair<std::string, const GroupoidDoc*>{"N", &e.n}, {"G", &e.g}, {"Q", &e.q}}) {
    ValidationReport r = validate(*doc->groupoid);
    for (const auto& v : r.violations()) rep.add(label + ":" + v.axiom, v.witnesses, v.detail);
  }
  if (!rep.ok()) return rep;
  rep.merge(validate_extension(e.extension));
  if (!rep.ok()) return rep;
  ValidationReport f = validate_functor(e.iota);
  for (const auto& v : f.violations()) rep.add("IOTA-FUNCTOR", v.witnesses, v.axiom + ": " + v.detail);
  if (!rep.ok()) return rep;
  const OrderedGroupoid& n = *e.n.groupoid;
  const OrderedGroupoid& g = *e.g.groupoid;
  std::set<MorphismId> image;
  for (MorphismId x = 0; x < static_cast<MorphismId>(n.size()); ++x)
    if (!image.insert(e.iota(x)).second) rep.add("IOTA-INJECTIVE", {x}, n.name(x) + " collides with another id");
  auto kernel = e.extension.kernel();
  std::set<MorphismId> k(kernel.begin(), kernel.end());
  if (image != k) {
    std::vector<MorphismId> diff;
    std::set_symmetric_difference(image.begin(), image.end(), k.begin(), k.end(), std::back_inserter(diff));
    rep.add("IOTA-KERNEL", diff, "first mismatch at " + g.name(diff.front()));
  }
  return rep;
}

std::string groupoid_document(const OrderedGroupoid& g, const std::vector<MorphismId>& subgroupoid) {
  return groupoid_json(g, subgroupoid).dump(2) + "\n";
}

std::string module_document(const GModule& m, ModuleBase base) {
  const Category& c = *m.base;
  json j;
  j["base"] = base_name(base);
  j["groups"] = json::object();
  for (ObjectId o = 0; o < static_cast<ObjectId>(c.num_objects()); ++o) {
    json fs = json::array();
    for (const auto& f : m.group(o).factors()) fs.push_back(integer_json(f));
    j["groups"][c.object_name(o)] = fs;
  }
  j["actions"] = json::object();
  for (ArrowId f = 0; f < static_cast<ArrowId>(c.num_arrows()); ++f) {
    if (c.is_identity(f)) continue;
    const IntMatrix& a = m.action(f).matrix;
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(integer_json(a(i, k)));
      rows.push_back(row);
    }
    std::string name = c.arrow_name(f);
    j["actions"][name.substr(1, name.size() - 2)] = rows;
  }
  return j.dump(2) + "\n";
}

std::string extension_document(const OrderedGroupoid& n, const OrderedGroupoid& g, const OrderedGroupoid& q,
                               const std::vector<MorphismId>& iota, const std::vector<MorphismId>& phi) {
  json j;
  j["N"] = groupoid_json(n, {});
  j["G"] = groupoid_json(g, {});
  j["Q"] = groupoid_json(q, {});
  j["iota"] = json::object();
  for (MorphismId x = 0; x < static_cast<MorphismId>(n.size()); ++x) j["iota"][n.name(x)] = g.name(iota[ucast(x)]);
  j["phi"] = json::object();
  for (MorphismId x = 0; x < static_cast<MorphismId>(g.size()); ++x) j["phi"][g.name(x)] = q.name(phi[ucast(x)]);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ogkit::io
