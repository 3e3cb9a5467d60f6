#include "ogkit/report.hpp"

#include "ogkit/error.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace ogkit {

using nlohmann::json;
using zlin::AbGroup;
using zlin::IntMatrix;
using zlin::Integer;
using zlin::Vector;

namespace {

const char* kGroupoidAxioms[] = {"DOMAIN",        "COMPOSE",     "ASSOC", "IDENTITY", "INVERSE",
                                 "ORDER-REFL",    "ORDER-ANTISYM", "ORDER-TRANS", "OG1", "OG2",
                                 "OG3",           "OG4",         "ORDER-IDENT"};
const char* kNormalAxioms[] = {"SUBGROUPOID", "N01", "N02", "N03"};

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

json group_json(const AbGroup& g) {
  json j;
  j["invariants"] = vector_json(g.factors());
  j["text"] = g.to_string();
  if (auto n = g.order()) j["order"] = integer_json(*n);
  return j;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string matrix_text(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return "[" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "]";
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t k = 0; k < m.cols(); ++k) s += (k ? " " : "") + m(i, k).str();
  }
  return s + "]";
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string names(const OrderedGroupoid& g, const std::vector<MorphismId>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ", ";
    s += ids[i] >= 0 && ids[i] < static_cast<MorphismId>(g.size()) ? g.name(ids[i]) : std::to_string(ids[i]);
  }
  return s;
}

// One line per axiom in `axioms` followed by witnesses of failures.
void axiom_table(std::ostringstream& out, json& j, const ValidationReport& rep, const OrderedGroupoid* g,
                 const std::vector<std::string>& axioms) {
  j = json::array();
  for (const auto& a : axioms) {
    json entry;
    entry["axiom"] = a;
    entry["passed"] = !rep.mentions(a);
    entry["violations"] = rep.count(a);
    json ws = json::array();
    out << "  " << std::left << std::setw(16) << a << verdict(!rep.mentions(a));
    if (rep.mentions(a)) out << "  (" << rep.count(a) << ")";
    out << "\n";
    for (const auto& v : rep.violations()) {
      if (v.axiom != a) continue;
      std::string who = g ? names(*g, v.witnesses) : "";
      out << "    " << (who.empty() ? "" : who + ": ") << v.detail << "\n";
      ws.push_back({{"witnesses", who}, {"detail", v.detail}});
    }
    entry["witnesses"] = ws;
    j.push_back(entry);
  }
  for (const auto& v : rep.violations()) {
    if (std::find(axioms.begin(), axioms.end(), v.axiom) != axioms.end()) continue;
    std::string who = g ? names(*g, v.witnesses) : "";
    out << "  " << std::left << std::setw(16) << v.axiom << "FAIL\n    " << (who.empty() ? "" : who + ": ")
        << v.detail << "\n";
    j.push_back({{"axiom", v.axiom}, {"passed", false}, {"violations", 1},
                 {"witnesses", json::array({{{"witnesses", who}, {"detail", v.detail}}})}});
  }
}

std::vector<std::string> axiom_names(const ValidationReport& rep) {
  std::vector<std::string> out;
  for (const auto& v : rep.violations())
    if (std::find(out.begin(), out.end(), v.axiom) == out.end()) out.push_back(v.axiom);
  return out;
}

Report finish(std::ostringstream& text, json& j, bool passed) {
  j["passed"] = passed;
  text << "verdict: " << verdict(passed) << "\n";
  return Report{text.str(), j.dump(2) + "\n", passed};
}

void groupoid_summary(std::ostringstream& out, json& j, const io::GroupoidDoc& doc) {
  const OrderedGroupoid& g = *doc.groupoid;
  out << "groupoid: " << g.objects().size() << " objects, " << g.size() << " morphisms\n";
  out << "order: " << doc.leq_given << " pairs given (reflexive included), " << doc.leq_closed
      << " after closure\n";
  j["objects"] = g.objects().size();
  j["morphisms"] = g.size();
  j["leq_given"] = doc.leq_given;
  j["leq_closed"] = doc.leq_closed;
}

// Validates G and writes the failures; true when G passes.
bool groupoid_gate(std::ostringstream& out, json& j, const io::GroupoidDoc& doc) {
  ValidationReport rep = validate(*doc.groupoid);
  if (rep.ok()) return true;
  out << "groupoid axioms:\n";
  axiom_table(out, j["groupoid_axioms"], rep, doc.groupoid.get(), axiom_names(rep));
  return false;
}

bool module_gate(std::ostringstream& out, json& j, const GModule& m) {
  ValidationReport rep = validate_module(m);
  if (rep.ok()) return true;
  out << "module axioms:\n";
  axiom_table(out, j["module_axioms"], rep, nullptr, axiom_names(rep));
  return false;
}

void stalks(std::ostringstream& out, json& j, const GModule& m) {
  const Category& c = *m.base;
  out << "stalks:";
  j = json::object();
  for (ObjectId o = 0; o < static_cast<ObjectId>(c.num_objects()); ++o) {
    out << (o ? ", " : " ") << c.object_name(o) << ": " << m.group(o).to_string();
    j[c.object_name(o)] = group_json(m.group(o));
  }
  out << "\n";
}

}  // namespace

Report validate_report(const io::GroupoidDoc& doc) {
  std::ostringstream out;
  json j;
  j["command"] = "validate";
  groupoid_summary(out, j, doc);
  ValidationReport rep = validate(*doc.groupoid);
  out << "axioms:\n";
  axiom_table(out, j["axioms"], rep, doc.groupoid.get(),
              std::vector<std::string>(std::begin(kGroupoidAxioms), std::end(kGroupoidAxioms)));
  bool passed = rep.ok();
  if (doc.subgroupoid) {
    ValidationReport n = is_normal(*doc.groupoid, *doc.subgroupoid);
    out << "normal subgroupoid {" << names(*doc.groupoid, *doc.subgroupoid) << "}:\n";
    axiom_table(out, j["normality"], n, doc.groupoid.get(),
                std::vector<std::string>(std::begin(kNormalAxioms), std::end(kNormalAxioms)));
    passed = passed && n.ok();
  }
  return finish(out, j, passed);
}

Report cohomology_report(const io::GroupoidDoc& g, const io::ModuleDoc& a, std::size_t degree, bool adjoin_identity) {
  if (adjoin_identity && a.base != io::ModuleBase::L)
    throw PreconditionError("--adjoin-identity needs a module over L(G)");
  std::ostringstream out;
  json j;
  j["command"] = "cohomology";
  j["degree"] = degree;
  j["adjoin_identity"] = adjoin_identity;
  if (!groupoid_gate(out, j, g) || !module_gate(out, j, a.module)) return finish(out, j, false);
  GModule m = adjoin_identity ? adjoin_identity_module(a.module).a0 : a.module;
  const char* over = adjoin_identity ? "L(G^I)" : a.base == io::ModuleBase::L ? "L(G)" : a.base == io::ModuleBase::LI ? "L(G^I)" : "E(G)";
  out << "cohomology over " << over << " with coefficients " << (adjoin_identity ? "A^0" : "A") << "\n";
  j["category"] = over;
  stalks(out, j["stalks"], m);
  CochainComplex c = cochain_complex(m, degree);
  j["cohomology"] = json::array();
  for (std::size_t n = 0; n <= degree; ++n) {
    Cohomology h = cohomology(c, n);
    out << "H^" << n << " = " << h.group().to_string() << "\n";
    json e = group_json(h.group());
    e["degree"] = n;
    e["cochains"] = c.dim(n);
    j["cohomology"].push_back(e);
  }
  Limit lim = lim_module(m);
  bool agrees = lim.group() == cohomology(c, 0).group();
  out << "lim = " << lim.group().to_string() << ", H^0 = lim: " << verdict(agrees) << "\n";
  j["limit"] = group_json(lim.group());
  j["h0_is_limit"] = agrees;
  return finish(out, j, agrees);
}

Report classify_report(const io::GroupoidDoc& q, const io::ModuleDoc& a, const Budget& budget) {
  if (a.base != io::ModuleBase::L) throw PreconditionError("classify needs a module over L(Q)");
  std::ostringstream out;
  json j;
  j["command"] = "classify";
  if (!groupoid_gate(out, j, q) || !module_gate(out, j, a.module)) return finish(out, j, false);
  Classification c = classify(q.groupoid, a.module, budget);
  const ExtensionCensus& census = c.census;
  out << "extensions of A by Q in fibre coordinates\n";
  stalks(out, j["stalks"], a.module);
  out << "factor-set slots: " << census.shape.slots() << ", candidates: " << census.candidates
      << ", valid: " << census.valid.size() << "\n";
  j["slots"] = census.shape.slots();
  j["candidates"] = census.candidates;
  j["valid"] = census.valid.size();
  j["rejections"] = json::object();
  if (!census.rejections.empty()) {
    out << "rejected:";
    for (const auto& [axiom, n] : census.rejections) {
      out << " " << axiom << " " << n;
      j["rejections"][axiom] = n;
    }
    out << "\n";
  }
  out << "H^2(Q^I, A^0) = " << c.h2.to_string() << "\n";
  j["h2"] = group_json(c.h2);
  std::vector<std::size_t> sizes(c.classes(), 0);
  for (std::size_t k : census.class_of) ++sizes[k];
  out << "class  size  cohomology class  representative\n";
  j["classes"] = json::array();
  for (std::size_t k = 0; k < c.classes(); ++k) {
    const FactorSet& rep = census.valid[census.representatives[k]];
    std::string fs = factor_set_string(census.shape, rep);
    out << std::left << std::setw(7) << k << std::setw(6) << sizes[k] << std::setw(18)
        << vector_text(c.class_cohomology[k]) << fs << "\n";
    j["classes"].push_back({{"id", k},
                            {"size", sizes[k]},
                            {"cohomology_class", vector_json(c.class_cohomology[k])},
                            {"representative", fs}});
  }
  out << "#classes = " << c.classes() << ", |H^2| = " << (c.h2.order() ? c.h2.order()->str() : "inf") << "\n";
  j["class_count"] = c.classes();
  const std::pair<const char*, bool> checks[] = {{"constant on classes", c.constant_on_classes},
                                                 {"injective", c.injective},
                                                 {"surjective", c.surjective},
                                                 {"valid factor sets form a subgroup", c.valid_sets_form_subgroup},
                                                 {"classes of equal size", c.classes_equal_size},
                                                 {"equivalence relation", c.equivalence_relation}};
  j["checks"] = json::object();
  for (const auto& [name, ok] : checks) {
    out << "  " << std::left << std::setw(36) << name << verdict(ok) << "\n";
    j["checks"][name] = ok;
  }
  out << "bijection classes -> H^2: " << verdict(c.ok()) << "\n";
  j["bijection"] = c.ok();
  return finish(out, j, c.ok());
}

Report five_term_report(const io::ExtensionDoc& e, const io::ModuleDoc& a) {
  if (a.base != io::ModuleBase::L) throw PreconditionError("five-term needs a module over L(Q)");
  std::ostringstream out;
  json j;
  j["command"] = "five-term";
  ValidationReport rep = io::validate_extension_doc(e);
  if (!rep.ok()) {
    out << "extension invariants:\n";
    axiom_table(out, j["extension_axioms"], rep, nullptr, axiom_names(rep));
    return finish(out, j, false);
  }
  if (!module_gate(out, j, a.module)) return finish(out, j, false);
  FiveTerm f = five_term(e.extension, a.module);
  const char* group_names[] = {"Der(Q,A)", "Der_phi(G,A)", "Mod_Q(N^ab,A)", "H^2(Q^I,A^0)", "H^2(G^I,A^0)"};
  const char* map_names[] = {"precompose with phi", "restrict to N", "transgression", "inflation"};
  out << "0 -> Der(Q,A) -> Der_phi(G,A) -> Mod_Q(N^ab,A) -> H^2(Q^I,A^0) -> H^2(G^I,A^0)\n";
  j["groups"] = json::array();
  for (std::size_t i = 0; i < 5; ++i) {
    out << "  " << std::left << std::setw(16) << group_names[i] << f.groups[i].to_string() << "\n";
    json g = group_json(f.groups[i]);
    g["name"] = group_names[i];
    j["groups"].push_back(g);
  }
  j["maps"] = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    out << "  " << std::left << std::setw(22) << map_names[i] << matrix_text(f.maps[i].matrix) << "\n";
    j["maps"].push_back({{"name", map_names[i]}, {"matrix", matrix_json(f.maps[i].matrix)}});
  }
  out << "  injective at Der(Q,A)              " << verdict(f.injective) << "\n";
  j["injective"] = f.injective;
  j["spots"] = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    out << "  composite zero / exact at " << std::left << std::setw(14) << group_names[i + 1]
        << verdict(f.composite_zero[i]) << " / " << verdict(f.exact[i]) << "\n";
    j["spots"].push_back({{"at", group_names[i + 1]}, {"composite_zero", f.composite_zero[i]}, {"exact", f.exact[i]}});
  }
  out << "  transgression additive             " << verdict(f.transgression_additive) << "\n";
  j["transgression_additive"] = f.transgression_additive;
  return finish(out, j, f.ok());
}

Report structure_report(const io::GroupoidDoc& doc, const io::ModuleDoc* a) {
  std::ostringstream out;
  json j;
  j["command"] = "report";
  groupoid_summary(out, j, doc);
  if (!groupoid_gate(out, j, doc)) return finish(out, j, false);
  const OrderedGroupoid& g = *doc.groupoid;
  out << "inductive: " << (g.is_inductive() ? "yes" : "no") << ", union of groups: "
      << (g.is_union_of_groups() ? "yes" : "no") << "\n";
  j["inductive"] = g.is_inductive();
  j["union_of_groups"] = g.is_union_of_groups();
  out << "object  local group  costar  rank KG\n";
  j["object_data"] = json::array();
  for (MorphismId e : g.objects()) {
    std::size_t costar = g.costar(e).size();
    out << std::left << std::setw(8) << g.name(e) << std::setw(13) << g.local_group(e).size() << std::setw(8)
        << costar << costar - 1 << "\n";
    j["object_data"].push_back({{"object", g.name(e)},
                                {"local_group", g.local_group(e).size()},
                                {"costar", costar},
                                {"kg_rank", costar - 1}});
  }
  CategoryPtr l = build_L(doc.groupoid);
  bool lc = check_left_cancellative(*l);
  out << "L(G): " << l->num_objects() << " objects, " << l->num_arrows() << " arrows, left cancellative: "
      << verdict(lc) << "\n";
  j["L"] = {{"objects", l->num_objects()}, {"arrows", l->num_arrows()}, {"left_cancellative", lc}};
  bool passed = lc;
  if (a) {
    bool ok = module_gate(out, j, a->module);
    if (ok) {
      out << "module over " << io::base_name(a->base) << ": valid\n";
      stalks(out, j["stalks"], a->module);
    }
    j["module_valid"] = ok;
    passed = passed && ok;
  }
  return finish(out, j, passed);
}

}  // namespace ogkit
