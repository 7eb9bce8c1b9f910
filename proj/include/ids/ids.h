#ifndef IDS_IDS_H
#define IDS_IDS_H

/*
 * C interface to the integer distance set toolkit.
 *
 * Every call returns an ids_status. On failure a description of the error is
 * available from ids_last_error() on the calling thread until the next call.
 * Strings returned through char** parameters are owned by the caller and
 * released with ids_string_free; point sets with ids_pointset_free.
 *
 * Exact numbers cross the boundary as decimal strings ("-12", "7/3"), never
 * as floating point. Structured results are JSON documents.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(IDS_BUILDING_LIBRARY)
#define IDS_API __attribute__((visibility("default")))
#else
#define IDS_API
#endif

typedef enum ids_status {
  IDS_OK = 0,
  IDS_E_DOMAIN = 1,   /* inputs fail a mathematical requirement */
  IDS_E_PARSE = 2,    /* malformed input text or unreadable file */
  IDS_E_INVALID = 3,  /* call outside its precondition, null arguments */
  IDS_E_INTERNAL = 4  /* unexpected failure inside the library */
} ids_status;

typedef struct ids_pointset ids_pointset;

IDS_API const char* ids_last_error(void);
IDS_API const char* ids_version(void);
IDS_API void ids_string_free(char* s);

/* Point sets in the JSON file format {"m", "denom", "points", "name"?, "source"?}. */
IDS_API ids_status ids_pointset_from_json(const char* json, ids_pointset** out);
IDS_API ids_status ids_pointset_read_file(const char* path, ids_pointset** out);
IDS_API ids_status ids_pointset_to_json(const ids_pointset* s, char** out);
IDS_API ids_status ids_pointset_write_file(const ids_pointset* s, const char* path);
IDS_API size_t ids_pointset_size(const ids_pointset* s);
IDS_API void ids_pointset_free(ids_pointset* s);

/* Certificate JSON: {"accepted", "distances"} or {"accepted", "pair", "dist2"}. */
IDS_API ids_status ids_verify(const ids_pointset* s, int* accepted, char** certificate);

/* Reconstructs the normalized lattice form from {"n", "d"}. */
IDS_API ids_status ids_normalize(const char* matrix_json, ids_pointset** out);
IDS_API ids_status ids_distance_matrix(const ids_pointset* s, char** matrix_json);

IDS_API ids_status ids_construct_apex(const char* h, ids_pointset** out);
/* triples_json: [["a","b","c"], ...]; the radius is reported in radius_out. */
IDS_API ids_status ids_construct_concyclic(const char* triples_json, ids_pointset** out,
                                           char** radius_out);
/* Primitive triples with c <= cmax as [["a","b","c"], ...] sorted by (c, a). */
IDS_API ids_status ids_primitive_triples(const char* cmax, char** triples_json);
/* transform_json: {"kind": "translate", "dx", "dt"} | {"kind": "reflect"} |
 * {"kind": "scale", "factor"}. */
IDS_API ids_status ids_transform(const ids_pointset* s, const char* transform_json,
                                 ids_pointset** out);
/* dir may be NULL for the default fixture directory. */
IDS_API ids_status ids_load_fixture(const char* name, const char* dir, ids_pointset** out);

/* The set must consist of points on the x-axis and one apex off it. */
IDS_API ids_status ids_bounds_audit(const ids_pointset* s, char** report);
IDS_API ids_status ids_bounds_radius(const char* d1, const char* d2, const char* d3,
                                     char** report);
/* Canonical radius n / (2 sqrt D): Legendre split and lattice capacity. */
IDS_API ids_status ids_bounds_capacity(const char* n, const char* D, char** report);
IDS_API ids_status ids_bounds_represent(const char* D, const char* M, char** report);
IDS_API ids_status ids_bounds_flip(const ids_pointset* s, const char* k, const char* m1,
                                   const char* m2, char** report, ids_pointset** flipped);
IDS_API ids_status ids_bounds_large_radius(const ids_pointset* s, const char* N, char** report);

/*
 * Varieties requests are JSON objects with an "op" field:
 *   buchberger | fiber | singular | jacobian | ck | homogenize | rpolys |
 *   select | fit | monodromy
 * See the README for the fields each op accepts.
 */
IDS_API ids_status ids_varieties(const char* request_json, char** report);

typedef void (*ids_progress_fn)(size_t done, size_t total, size_t best, void* user);

/* config_json: {"a", "m": n | [n, ...], "box", "radius", "target"?,
 * "require_noncollinear"?, "require_erdos"?, "max_results"?}. */
IDS_API ids_status ids_search(const char* config_json, unsigned workers, ids_progress_fn progress,
                              void* user, char** result);
/* Candidate pool search: maximum cliques of the given points together with
 * the anchors (0,0) and (a,0). */
IDS_API ids_status ids_search_pool(const ids_pointset* pool, const char* a, const char* flags_json,
                                   unsigned workers, char** result);

IDS_API ids_status ids_classify(const ids_pointset* s, char** report);
IDS_API ids_status ids_plot_svg(const ids_pointset* s, int with_witness, char** svg);

#ifdef __cplusplus
}
#endif

#endif
