#ifndef OGKIT_OGKIT_H
#define OGKIT_OGKIT_H

/* C interface to ogkit. Every object is an opaque handle released with its
 * *_free function (NULL is accepted). Functions returning ogk_status leave a
 * message for ogk_last_error() on failure; the message is per thread and
 * valid until the next call on that thread. Report-producing functions set
 * *out even when they return OGK_VIOLATION. */

#include <stddef.h>

#if defined(_WIN32)
#define OGK_API __declspec(dllexport)
#else
#define OGK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ogk_status {
  OGK_OK = 0,
  OGK_VIOLATION = 1,        /* a mathematical check failed */
  OGK_PARSE_ERROR = 2,      /* malformed or unreadable input */
  OGK_BUDGET_EXCEEDED = 3,  /* enumeration refused */
  OGK_INVALID_ARGUMENT = 4, /* NULL handle or unsupported combination */
  OGK_INTERNAL_ERROR = 5
} ogk_status;

typedef struct ogk_groupoid ogk_groupoid;
typedef struct ogk_module ogk_module;
typedef struct ogk_extension ogk_extension;
typedef struct ogk_report ogk_report;

OGK_API const char* ogk_version(void);
OGK_API const char* ogk_last_error(void);
OGK_API const char* ogk_status_name(ogk_status status);

OGK_API ogk_status ogk_groupoid_from_json(const char* json, ogk_groupoid** out);
OGK_API void ogk_groupoid_free(ogk_groupoid* g);
OGK_API size_t ogk_groupoid_size(const ogk_groupoid* g);

/* The groupoid must pass validation (OGK_VIOLATION otherwise). */
OGK_API ogk_status ogk_module_from_json(const ogk_groupoid* g, const char* json, ogk_module** out);
OGK_API void ogk_module_free(ogk_module* m);

OGK_API ogk_status ogk_extension_from_json(const char* json, ogk_extension** out);
OGK_API void ogk_extension_free(ogk_extension* e);
/* Q of the extension, owned by the extension. */
OGK_API const ogk_groupoid* ogk_extension_quotient(const ogk_extension* e);

OGK_API ogk_status ogk_validate(const ogk_groupoid* g, ogk_report** out);
OGK_API ogk_status ogk_cohomology(const ogk_groupoid* g, const ogk_module* m, unsigned degree, int adjoin_identity,
                                  ogk_report** out);
/* max_candidates = 0 keeps the default budget. */
OGK_API ogk_status ogk_classify(const ogk_groupoid* q, const ogk_module* m, unsigned long long max_candidates,
                                ogk_report** out);
/* m must be a module over L(Q) for Q = ogk_extension_quotient(e). */
OGK_API ogk_status ogk_five_term(const ogk_extension* e, const ogk_module* m, ogk_report** out);
/* m may be NULL. */
OGK_API ogk_status ogk_structure_report(const ogk_groupoid* g, const ogk_module* m, ogk_report** out);

OGK_API const char* ogk_report_text(const ogk_report* r);
OGK_API const char* ogk_report_json(const ogk_report* r);
OGK_API int ogk_report_passed(const ogk_report* r);
OGK_API void ogk_report_free(ogk_report* r);

#ifdef __cplusplus
}
#endif

#endif /* OGKIT_OGKIT_H */
