#pragma once

// JSON documents.
//
// Groupoid:  {"objects": ["e", ...],
//             "morphisms": [{"id": "a", "d": "e", "r": "e", "inv": "a"}, ...],
//             "compose": [["a", "a", "e"], ...],
//             "leq": [["x", "y"], ...],          generating pairs x <= y
//             "subgroupoid": ["e", "a", ...]}    optional
// Identities are the objects; their products and the reflexive-transitive
// closure of "leq" are filled in on load.
//
// Module:    {"base": "L" | "LI" | "E",
//             "groups": {"e": [2], "I": []},     invariant factors, 0 for Z
//             "actions": {"e,a": [[1]], ...}}    canonical matrices, rows first
//            or {"base": ..., "constant": [2]} for the constant module.
// An action is keyed by the arrow (e, g) of L(G) or (e, f) of E(G) and may be
// omitted on identity arrows.
//
// Extension: {"N": groupoid, "G": groupoid, "Q": groupoid,
//             "iota": {"n": "g", ...}, "phi": {"g": "q", ...}}
//
// Every loader throws ParseError naming the offending location.

#include "ogkit/gmod.hpp"
#include "ogkit/ogpd.hpp"
#include "ogkit/quotients.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ogkit::io {

struct GroupoidDoc {
  GroupoidPtr groupoid;
  std::size_t leq_given = 0;   // distinct order pairs as written, plus reflexive pairs
  std::size_t leq_closed = 0;  // pairs after closure
  std::optional<std::vector<MorphismId>> subgroupoid;
};
GroupoidDoc load_groupoid(const std::string& text);

enum class ModuleBase { L, LI, E };
const char* base_name(ModuleBase b);

struct ModuleDoc {
  ModuleBase base = ModuleBase::L;
  GModule module;
};
// The base category is built from g (G^I for "LI").
ModuleDoc load_module(const std::string& text, const GroupoidPtr& g);

struct ExtensionDoc {
  GroupoidDoc n, g, q;
  OrderedFunctor iota;  // N -> G
  Extension extension;  // G -> Q
};
ExtensionDoc load_extension(const std::string& text);

// Groupoid axioms of N, G and Q, the extension axioms for phi, and
// IOTA-FUNCTOR, IOTA-INJECTIVE, IOTA-KERNEL (the image of iota is the kernel
// of phi). Later stages are skipped once a stage fails.
ValidationReport validate_extension_doc(const ExtensionDoc& e);

std::string groupoid_document(const OrderedGroupoid& g, const std::vector<MorphismId>& subgroupoid = {});
std::string module_document(const GModule& m, ModuleBase base);
std::string extension_document(const OrderedGroupoid& n, const OrderedGroupoid& g, const OrderedGroupoid& q,
                               const std::vector<MorphismId>& iota, const std::vector<MorphismId>& phi);

std::string read_file(const std::string& path);

}  // namespace ogkit::io
