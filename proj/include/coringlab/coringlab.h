#ifndef CORINGLAB_H
#define CORINGLAB_H

/* C interface to the coring library. Objects are opaque handles released
 * with the matching *_destroy; every call returns a status and, on failure,
 * leaves a message readable through clab_last_error() on the same thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef CORINGLAB_BUILDING_LIBRARY
#    define CLAB_API __declspec(dllexport)
#  else
#    define CLAB_API __declspec(dllimport)
#  endif
#else
#  define CLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum clab_status {
  CLAB_OK = 0,
  CLAB_BAD_SHAPE,
  CLAB_NOT_PRIME,
  CLAB_NOT_ASSOCIATIVE,
  CLAB_NO_UNIT,
  CLAB_NOT_A_UNIT,
  CLAB_NOT_A_SUBRING,
  CLAB_TOO_LARGE,
  CLAB_NOT_A_GROUP,
  CLAB_NOT_AN_AUTOMORPHISM,
  CLAB_NOT_AN_ACTION,
  CLAB_NOT_A_REPRESENTATION,
  CLAB_ACTIONS_DO_NOT_COMMUTE,
  CLAB_NOT_BILINEAR,
  CLAB_NOT_COASSOCIATIVE,
  CLAB_COUNIT_FAILS,
  CLAB_NOT_A_GROUPLIKE,
  CLAB_NOT_A_COCYCLE,
  CLAB_NOT_GALOIS,
  CLAB_NOT_HOPF,
  CLAB_NOT_COMODULE_ALGEBRA,
  CLAB_PARSE_ERROR,
  CLAB_VALIDATION_ERROR,
  CLAB_UNKNOWN_TASK,
  CLAB_INVALID_ARGUMENT,
  CLAB_INTERNAL
} clab_status;

typedef struct clab_algebra clab_algebra;
typedef struct clab_coring clab_coring;
typedef struct clab_report clab_report;

CLAB_API const char* clab_status_name(clab_status status);
/* Message of the last failed call on this thread; "" if none. */
CLAB_API const char* clab_last_error(void);

/* sc has dim^3 entries, sc[(i*dim + j)*dim + k] = coefficient of e_k in e_i e_j. */
CLAB_API clab_status clab_algebra_create(uint32_t p, size_t dim, const uint32_t* sc, const uint32_t* unit,
                                         clab_algebra** out);
CLAB_API clab_status clab_algebra_finite_field(uint32_t p, size_t n, clab_algebra** out);
CLAB_API size_t clab_algebra_dim(const clab_algebra* a);
CLAB_API void clab_algebra_destroy(clab_algebra* a);

/* Sweedler coring A (x)_B A, B the subring generated by `count` elements of A
 * (each of length dim A, stored back to back). */
CLAB_API clab_status clab_coring_sweedler(const clab_algebra* a, const uint32_t* generators, size_t count,
                                          clab_coring** out);
CLAB_API size_t clab_coring_dim(const clab_coring* c);
/* Computes Gl(C); budget 0 keeps the default enumeration limit. */
CLAB_API clab_status clab_coring_grouplikes(clab_coring* c, uint64_t budget, size_t* count);
/* Copies grouplike `index` (dim C entries) into out; call after clab_coring_grouplikes. */
CLAB_API clab_status clab_coring_grouplike_get(const clab_coring* c, size_t index, uint32_t* out);
CLAB_API clab_status clab_coring_is_galois(const clab_coring* c, const uint32_t* g, int* galois);
CLAB_API void clab_coring_destroy(clab_coring* c);

/* Runs an instance file. tasks may be NULL when ntasks is 0; budget 0 keeps the file's budgets. */
CLAB_API clab_status clab_run_file(const char* path, const char* const* tasks, size_t ntasks, uint64_t budget,
                                   clab_report** out);
/* Pointers stay valid until the report is destroyed. */
CLAB_API const char* clab_report_json(const clab_report* r);
CLAB_API const char* clab_report_summary(const clab_report* r);
CLAB_API int clab_report_all_pass(const clab_report* r);
CLAB_API void clab_report_destroy(clab_report* r);

/* Writes a pointer to a static string describing the task. */
CLAB_API clab_status clab_explain(const char* task, const char** text);

#ifdef __cplusplus
}
#endif

#endif
