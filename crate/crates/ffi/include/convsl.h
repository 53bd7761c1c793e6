#ifndef CONVSL_H
#define CONVSL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  CONVSL_PARAM_MODE_SWAP = 0,
  CONVSL_PARAM_MODE_FROM_PQ = 1,
  CONVSL_PARAM_MODE_FROM_PR = 2,
} ConvslParamMode;

typedef enum {
  CONVSL_STATUS_OK = 0,
  CONVSL_STATUS_NULL_POINTER = 1,
  CONVSL_STATUS_INVALID_UTF8 = 2,
  CONVSL_STATUS_INVALID_INPUT = 3,
  CONVSL_STATUS_DIMENSION_MISMATCH = 4,
  CONVSL_STATUS_DOMAIN = 5,
  CONVSL_STATUS_PARSE = 6,
  CONVSL_STATUS_VALIDATION = 7,
  CONVSL_STATUS_IO = 8,
  CONVSL_STATUS_PANIC = 9,
} ConvslStatus;

// Opaque handle to a validated instance.
typedef struct ConvslInstance ConvslInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses an instance file body, translating the carrier to contain 0 when
// requested, and validates it.
//
// # Safety
// `json` must be a valid NUL-terminated string; `out` must be valid for writes.
ConvslStatus convsl_instance_from_json(const char *json, ConvslInstance **out);

// # Safety
// `path` must be a valid NUL-terminated string; `out` must be valid for writes.
ConvslStatus convsl_instance_load(const char *path, ConvslInstance **out);

// Releases a handle; null is ignored.
//
// # Safety
// `inst` must be null or a handle from this library, freed at most once.
void convsl_instance_free(ConvslInstance *inst);

// Ambient dimension, or 0 for a null handle.
//
// # Safety
// `inst` must be null or a live handle.
size_t convsl_instance_dim(const ConvslInstance *inst);

// Membership in the generated subspace. `point_json` is an array of
// rational strings; writes `{"member", "p_max", "witness"}`.
//
// # Safety
// Pointers must be valid as described in the module docs.
ConvslStatus convsl_membership(const ConvslInstance *inst, const char *point_json, char **out);

// Extended join; writes `{"result", "witness"}`.
//
// # Safety
// Pointers must be valid as described in the module docs.
ConvslStatus convsl_join(const ConvslInstance *inst,
                         const char *x_json,
                         const char *y_json,
                         char **out);

// Support function values; writes `{"values": [...]}`.
//
// # Safety
// Pointers must be valid as described in the module docs.
ConvslStatus convsl_support(const char *polytope_json, const char *directions_json, char **out);

// `a` and `b` are rational strings: `(p, q)` for swap and from-pq, `(p, r)`
// for from-pr.
//
// # Safety
// Pointers must be valid as described in the module docs.
ConvslStatus convsl_solve_params(ConvslParamMode mode, const char *a, const char *b, char **out);

// Runs the law suite and writes its summary. `laws` may be null for all
// groups. `*passed` is set to 1 iff every law passed.
//
// # Safety
// Pointers must be valid as described in the module docs; `passed` must be
// valid for writes.
ConvslStatus convsl_check(const ConvslInstance *inst,
                          uint64_t seed,
                          size_t cases,
                          const char *laws,
                          int32_t *passed,
                          char **out);

// Releases a string returned through an `out` parameter; null is ignored.
//
// # Safety
// `s` must be null or a string from this library, freed at most once.
void convsl_string_free(char *s);

// Message for the last failed call on this thread, or null. Valid until the
// next call into the library on the same thread.
const char *convsl_last_error(void);

const char *convsl_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONVSL_H */
