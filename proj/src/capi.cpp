#include "ogkit/ogkit.h"

#include "ogkit/error.hpp"
#include "ogkit/report.hpp"

#include <new>
#include <string>

using namespace ogkit;

struct ogk_groupoid {
  io::GroupoidDoc doc;
};

struct ogk_module {
  io::ModuleDoc doc;
  GroupoidPtr over;
};

struct ogk_extension {
  io::ExtensionDoc doc;
  ogk_groupoid quotient;
};

struct ogk_report {
  Report report;
};

namespace {

thread_local std::string last_error;

ogk_status fail(ogk_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <typename Body>
ogk_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ParseError& e) {
    return fail(OGK_PARSE_ERROR, e.what());
  } catch (const BudgetError& e) {
    return fail(OGK_BUDGET_EXCEEDED, e.what());
  } catch (const AxiomError& e) {
    return fail(OGK_VIOLATION, e.what());
  } catch (const PreconditionError& e) {
    return fail(OGK_INVALID_ARGUMENT, e.what());
  } catch (const UnsupportedError& e) {
    return fail(OGK_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(OGK_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(OGK_INTERNAL_ERROR, e.what());
  }
}

ogk_status deliver(Report r, ogk_report** out) {
  bool passed = r.passed;
  *out = new ogk_report{std::move(r)};
  return passed ? OGK_OK : fail(OGK_VIOLATION, "checks failed; see the report");
}

}  // namespace

extern "C" {

const char* ogk_version(void) { return "1.0.0"; }

const char* ogk_last_error(void) { return last_error.c_str(); }

const char* ogk_status_name(ogk_status status) {
  switch (status) {
    case OGK_OK:
      return "ok";
    case OGK_VIOLATION:
      return "violation";
    case OGK_PARSE_ERROR:
      return "parse error";
    case OGK_BUDGET_EXCEEDED:
      return "budget exceeded";
    case OGK_INVALID_ARGUMENT:
      return "invalid argument";
    case OGK_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown";
}

ogk_status ogk_groupoid_from_json(const char* json, ogk_groupoid** out) {
  if (!json || !out) return fail(OGK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ogk_groupoid{io::load_groupoid(json)};
    return OGK_OK;
  });
}

void ogk_groupoid_free(ogk_groupoid* g) { delete g; }

size_t ogk_groupoid_size(const ogk_groupoid* g) { return g ? g->doc.groupoid->size() : 0; }

ogk_status ogk_module_from_json(const ogk_groupoid* g, const char* json, ogk_module** out) {
  if (!g || !json || !out) return fail(OGK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    ValidationReport rep = validate(*g->doc.groupoid);
    if (!rep.ok())
      return fail(OGK_VIOLATION, "the groupoid fails " + rep.violations().front().axiom +
                                     "; modules need a valid groupoid");
    *out = new ogk_module{io::load_module(json, g->doc.groupoid), g->doc.groupoid};
    return OGK_OK;
  });
}

void ogk_module_free(ogk_module* m) { delete m; }

ogk_status ogk_extension_from_json(const char* json, ogk_extension** out) {
  if (!json || !out) return fail(OGK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    io::ExtensionDoc doc = io::load_extension(json);
    ogk_groupoid q{doc.q};
    *out = new ogk_extension{std::move(doc), std::move(q)};
    return OGK_OK;
  });
}

void ogk_extension_free(ogk_extension* e) { delete e; }

const ogk_groupoid* ogk_extension_quotient(const ogk_extension* e) { return e ? &e->quotient : nullptr; }

ogk_status ogk_validate(const ogk_groupoid* g, ogk_report** out) {
  if (!g || !out) return fail(OGK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return deliver(validate_report(g->doc), out); });
}

ogk_status ogk_cohomology(const ogk_groupoid* g, const ogk_module* m, unsigned degree, int adjoin_identity,
                          ogk_report** out) {
  if (!g || !m || !out) return fail(OGK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (m->over != g->doc.groupoid) return fail(OGK_INVALID_ARGUMENT, "the module was loaded over another groupoid");
  return guarded([&] { return deliver(cohomology_report(g->doc, m->doc, degree, adjoin_identity != 0), out); });
}

ogk_status ogk_classify(const ogk_groupoid* q, const ogk_module* m, unsigned long long max_candidates,
                        ogk_report** out) {
  if (!q || !m || !out) return fail(OGK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (m->over != q->doc.groupoid) return fail(OGK_INVALID_ARGUMENT, "the module was loaded over another groupoid");
  return guarded([&] {
    Budget b;
    if (max_candidates) b.max_candidates = static_cast<std::size_t>(max_candidates);
    return deliver(classify_report(q->doc, m->doc, b), out);
  });
}

ogk_status ogk_five_term(const ogk_extension* e, const ogk_module* m, ogk_report** out) {
  if (!e || !m || !out) return fail(OGK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (m->over != e->doc.q.groupoid) return fail(OGK_INVALID_ARGUMENT, "the module is not over Q of the extension");
  return guarded([&] { return deliver(five_term_report(e->doc, m->doc), out); });
}

ogk_status ogk_structure_report(const ogk_groupoid* g, const ogk_module* m, ogk_report** out) {
  if (!g || !out) return fail(OGK_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (m && m->over != g->doc.groupoid) return fail(OGK_INVALID_ARGUMENT, "the module was loaded over another groupoid");
  return guarded([&] { return deliver(structure_report(g->doc, m ? &m->doc : nullptr), out); });
}

const char* ogk_report_text(const ogk_report* r) { return r ? r->report.text.c_str() : ""; }

const char* ogk_report_json(const ogk_report* r) { return r ? r->report.json.c_str() : ""; }

int ogk_report_passed(const ogk_report* r) { return r && r->report.passed ? 1 : 0; }

void ogk_report_free(ogk_report* r) { delete r; }

}  // extern "C"
