/*
 * C interface to the tempdual engine.
 *
 * Documents are opaque handles owning their JSON and table renderings;
 * strings returned by tempdual_document_json / tempdual_document_table stay
 * valid until the document is freed. Every call that can fail returns a
 * tempdual_status and records a message retrievable with
 * tempdual_last_error() on the calling thread.
 */
#ifndef TEMPDUAL_TEMPDUAL_H
#define TEMPDUAL_TEMPDUAL_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(TEMPDUAL_BUILDING_LIBRARY)
#    define TEMPDUAL_API __declspec(dllexport)
#  else
#    define TEMPDUAL_API __declspec(dllimport)
#  endif
#else
#  define TEMPDUAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tempdual_status {
  TEMPDUAL_OK = 0,
  /* A mathematical precondition failed (n < 1, cutoff too small, ...). */
  TEMPDUAL_ERROR_DOMAIN = 1,
  /* Malformed call: null pointer, unknown kind, unparsable JSON. */
  TEMPDUAL_ERROR_ARGUMENT = 2,
  TEMPDUAL_ERROR_INTERNAL = 3
} tempdual_status;

typedef enum tempdual_kind {
  TEMPDUAL_KIND_PARTITIONS = 0,
  TEMPDUAL_KIND_REAL_COMPONENTS = 1,
  TEMPDUAL_KIND_COMPLEX_COMPONENTS = 2,
  TEMPDUAL_KIND_K_REAL = 3,
  TEMPDUAL_KIND_K_COMPLEX = 4,
  TEMPDUAL_KIND_BC = 5,
  TEMPDUAL_KIND_KMAP = 6
} tempdual_kind;

typedef enum tempdual_field {
  TEMPDUAL_FIELD_REAL = 0,
  TEMPDUAL_FIELD_COMPLEX = 1
} tempdual_field;

typedef struct tempdual_document tempdual_document;

TEMPDUAL_API const char* tempdual_version(void);

/* Message for the last failed call on this thread; "" if none. */
TEMPDUAL_API const char* tempdual_last_error(void);

/* Maps "partitions", "real_components", ..., "kmap" to a kind. */
TEMPDUAL_API tempdual_status tempdual_kind_from_name(const char* name, tempdual_kind* out);
TEMPDUAL_API const char* tempdual_kind_name(tempdual_kind kind);

TEMPDUAL_API tempdual_status tempdual_document_build(tempdual_kind kind, int n, int cutoff,
                                                     tempdual_document** out);
TEMPDUAL_API void tempdual_document_free(tempdual_document* doc);

TEMPDUAL_API const char* tempdual_document_json(const tempdual_document* doc);
TEMPDUAL_API const char* tempdual_document_table(const tempdual_document* doc);

/* Rank of K_degree for k_real / k_complex documents. */
TEMPDUAL_API tempdual_status tempdual_document_k_rank(const tempdual_document* doc, int degree,
                                                      uint64_t* out);

/* Number of nonzero assignments of a kmap document. */
TEMPDUAL_API tempdual_status tempdual_document_kmap_support(const tempdual_document* doc, uint64_t* out);

/* Ranks of K_0 and K_1 of GL(n, field) truncated at cutoff. */
TEMPDUAL_API tempdual_status tempdual_k_ranks(tempdual_field field, int n, int cutoff, uint64_t* deg0,
                                              uint64_t* deg1);

/* Parses a JSON document and re-emits it in canonical form. The result must
 * be released with tempdual_string_free. */
TEMPDUAL_API tempdual_status tempdual_json_reserialize(const char* text, char** out);
TEMPDUAL_API void tempdual_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* TEMPDUAL_TEMPDUAL_H */
