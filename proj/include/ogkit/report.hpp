#pragma once

// Deterministic text and JSON reports for the command-line operations.

#include "ogkit/ext.hpp"
#include "ogkit/io.hpp"

#include <string>

namespace ogkit {

struct Report {
  std::string text;
  std::string json;
  bool passed = false;
};

// Axioms of G (and N01-N03 when the document names a subgroupoid).
Report validate_report(const io::GroupoidDoc& g);
// H^k for k <= degree over the module's base, or of A^0 over L(G^I).
Report cohomology_report(const io::GroupoidDoc& g, const io::ModuleDoc& a, std::size_t degree, bool adjoin_identity);
// Census of extensions of A by Q against H^2(Q^I, A^0).
Report classify_report(const io::GroupoidDoc& q, const io::ModuleDoc& a, const Budget& budget);
Report five_term_report(const io::ExtensionDoc& e, const io::ModuleDoc& a);
// Sizes, local groups, costars, L(G) and, with a module, its validation.
Report structure_report(const io::GroupoidDoc& g, const io::ModuleDoc* a);

}  // namespace ogkit
