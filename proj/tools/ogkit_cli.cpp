// ogkit command-line front end over the C interface.
//
// Exit codes: 0 all checks pass, 1 mathematical violation, 2 malformed
// input or usage, 3 enumeration budget exceeded, 4 internal error.

#include "ogkit/ogkit.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

int exit_code(ogk_status s) {
  switch (s) {
    case OGK_OK:
      return 0;
    case OGK_VIOLATION:
      return 1;
    case OGK_PARSE_ERROR:
    case OGK_INVALID_ARGUMENT:
      return 2;
    case OGK_BUDGET_EXCEEDED:
      return 3;
    case OGK_INTERNAL_ERROR:
      return 4;
  }
  return 4;
}

struct Failure {
  ogk_status status;
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{OGK_PARSE_ERROR, path + ": cannot open file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check(ogk_status s, const std::string& what) {
  if (s != OGK_OK) throw Failure{s, what + ": " + ogk_last_error()};
}

using GroupoidHandle = std::unique_ptr<ogk_groupoid, decltype(&ogk_groupoid_free)>;
using ModuleHandle = std::unique_ptr<ogk_module, decltype(&ogk_module_free)>;
using ExtensionHandle = std::unique_ptr<ogk_extension, decltype(&ogk_extension_free)>;
using ReportHandle = std::unique_ptr<ogk_report, decltype(&ogk_report_free)>;

GroupoidHandle load_groupoid(const std::string& path) {
  ogk_groupoid* g = nullptr;
  std::string text = slurp(path);
  check(ogk_groupoid_from_json(text.c_str(), &g), path);
  return GroupoidHandle(g, ogk_groupoid_free);
}

ModuleHandle load_module(const ogk_groupoid* g, const std::string& path) {
  ogk_module* m = nullptr;
  std::string text = slurp(path);
  check(ogk_module_from_json(g, text.c_str(), &m), path);
  return ModuleHandle(m, ogk_module_free);
}

ExtensionHandle load_extension(const std::string& path) {
  ogk_extension* e = nullptr;
  std::string text = slurp(path);
  check(ogk_extension_from_json(text.c_str(), &e), path);
  return ExtensionHandle(e, ogk_extension_free);
}

int emit(ogk_status s, ogk_report* raw, bool json_only) {
  ReportHandle r(raw, ogk_report_free);
  if (!r) throw Failure{s, ogk_last_error()};
  if (json_only) {
    std::fputs(ogk_report_json(r.get()), stdout);
  } else {
    std::fputs(ogk_report_text(r.get()), stdout);
    std::fputs("\n", stdout);
    std::fputs(ogk_report_json(r.get()), stdout);
  }
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ordered groupoids: axioms, cohomology, extensions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ogk_version()));
  bool json_only = false;
  app.add_flag("--json", json_only, "Print only the JSON report");
  app.fallthrough();

  std::string groupoid_path, module_path, extension_path;
  unsigned degree = 2;
  bool adjoin = false;
  unsigned long long budget = 0;

  auto* validate = app.add_subcommand("validate", "Check the ordered-groupoid axioms (and N01-N03)");
  validate->add_option("groupoid", groupoid_path, "Groupoid document")->required();

  auto* cohomology = app.add_subcommand("cohomology", "H^k of a module for k <= degree");
  cohomology->add_option("groupoid", groupoid_path, "Groupoid document")->required();
  cohomology->add_option("module", module_path, "Module document")->required();
  cohomology->add_option("--degree", degree, "Highest degree")->capture_default_str();
  cohomology->add_flag("--adjoin-identity", adjoin, "Compute H^k(G^I, A^0)");

  auto* classify = app.add_subcommand("classify", "Census of extensions of A by Q against H^2(Q^I, A^0)");
  classify->add_option("groupoid", groupoid_path, "Groupoid document for Q")->required();
  classify->add_option("module", module_path, "Module document over L(Q)")->required();
  classify->add_option("--budget", budget, "Maximum number of factor-set candidates");

  auto* five = app.add_subcommand("five-term", "Exactness of the five-term sequence");
  five->add_option("extension", extension_path, "Extension document")->required();
  five->add_option("module", module_path, "Module document over L(Q)")->required();

  auto* report = app.add_subcommand("report", "Structure summary of a groupoid and optional module");
  report->add_option("groupoid", groupoid_path, "Groupoid document")->required();
  report->add_option("module", module_path, "Module document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ogk_report* r = nullptr;
    if (*validate) {
      auto g = load_groupoid(groupoid_path);
      ogk_status s = ogk_validate(g.get(), &r);
      return emit(s, r, json_only);
    }
    if (*cohomology) {
      auto g = load_groupoid(groupoid_path);
      auto m = load_module(g.get(), module_path);
      ogk_status s = ogk_cohomology(g.get(), m.get(), degree, adjoin, &r);
      return emit(s, r, json_only);
    }
    if (*classify) {
      auto g = load_groupoid(groupoid_path);
      auto m = load_module(g.get(), module_path);
      ogk_status s = ogk_classify(g.get(), m.get(), budget, &r);
      return emit(s, r, json_only);
    }
    if (*five) {
      auto e = load_extension(extension_path);
      auto m = load_module(ogk_extension_quotient(e.get()), module_path);
      ogk_status s = ogk_five_term(e.get(), m.get(), &r);
      return emit(s, r, json_only);
    }
    if (*report) {
      auto g = load_groupoid(groupoid_path);
      ModuleHandle m(nullptr, ogk_module_free);
      if (!module_path.empty()) m = load_module(g.get(), module_path);
      ogk_status s = ogk_structure_report(g.get(), m.get(), &r);
      return emit(s, r, json_only);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return exit_code(f.status);
  }
  return 2;
}
