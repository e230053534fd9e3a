#ifndef COVDIM_COVDIM_H
#define COVDIM_COVDIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. 0 is success; the rest mirror the library's error kinds. */
typedef enum {
  COVDIM_OK = 0,
  COVDIM_CAP_EXCEEDED = 1,
  COVDIM_NOT_ABELIAN,
  COVDIM_NOT_A_HOMOMORPHISM,
  COVDIM_NOT_NORMAL,
  COVDIM_INVALID_ARGUMENT,
  COVDIM_NOT_MULTIHOMOGENEOUS,
  COVDIM_ZERO_COMPONENT,
  COVDIM_BETA_NOT_SEPARATING,
  COVDIM_BLOCK_MISMATCH,
  COVDIM_NOT_FOUND,
  COVDIM_MU_NOT_IN_COLUMN_SPACE,
  COVDIM_NOT_INVARIANT,
  COVDIM_CHART_DEGENERATE,
  COVDIM_NO_FREE_POINT,
  COVDIM_PRECONDITION_VIOLATED,
  COVDIM_NOT_FAITHFUL_FACTOR,
  COVDIM_INCONSISTENT_DERIVATION,
  COVDIM_ORACLE_DISAGREEMENT,
  COVDIM_SYNTAX_ERROR,
  COVDIM_SEMANTIC_ERROR,
  COVDIM_IO_ERROR,
  COVDIM_FORMAT_ERROR,
  COVDIM_INTERNAL_ERROR = 100
} covdim_status;

typedef struct covdim_group covdim_group;

/* Parses and builds a group from the spec language. */
int covdim_group_parse(const char* spec, covdim_group** out);
void covdim_group_free(covdim_group* group);
int covdim_group_order(const covdim_group* group, uint64_t* out);
/* Canonical spec text; owned by the handle. */
const char* covdim_group_text(const covdim_group* group);

/* Report builders. On success *out is a NUL-terminated JSON document to be
   released with covdim_string_free. */
int covdim_analyze_json(const covdim_group* group, char** out);
int covdim_faithful_json(const covdim_group* group, char** out);
int covdim_table_json(const covdim_group* group, char** out);
/* op: check, degrees, phimax, dim or faithful. file_json is the contents of a
   covariant file. beta may be NULL (beta_len 0) to pick one from the seed. */
int covdim_covariant_json(const char* op, const char* file_json, const uint64_t* beta, size_t beta_len,
                          uint64_t seed, char** out);
int covdim_catalog_json(char** out);

void covdim_string_free(char* s);

/* JSON error object {"error": {"code", "message", "position"}} for the last
   failed call on this thread, or "" if none. */
const char* covdim_last_error(void);

void covdim_set_order_cap(size_t cap);

#ifdef __cplusplus
}
#endif

#endif
