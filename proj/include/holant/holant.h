#ifndef HOLANT_HOLANT_H
#define HOLANT_HOLANT_H

#include <stdint.h>

#if defined(_WIN32)
#define HOLANT_API __declspec(dllexport)
#else
#define HOLANT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status; on failure holant_last_error() describes it.
 * Result strings are JSON owned by the caller and released with
 * holant_string_free. Handles are immutable after parsing and may be shared
 * across threads; the last-error buffer is per thread. */

typedef enum holant_status {
  HOLANT_OK = 0,
  HOLANT_E_INVALID_ARGUMENT = 1,
  HOLANT_E_SCHEMA = 2,
  HOLANT_E_INVARIANT = 3,
  HOLANT_E_NUMERIC = 4,
  HOLANT_E_IO = 5,
  HOLANT_E_INTERNAL = 6
} holant_status;

typedef enum holant_backend { HOLANT_EXACT = 0, HOLANT_FLOAT = 1 } holant_backend;

typedef enum holant_indist_variant {
  HOLANT_INDIST_GENERAL = 0,
  HOLANT_INDIST_CSP = 1,
  HOLANT_INDIST_CSP_EVEN = 2,
  HOLANT_INDIST_CYCLES = 3,
  HOLANT_INDIST_PATHS = 4,
  HOLANT_INDIST_TRACE = 5
} holant_indist_variant;

typedef struct holant_grid holant_grid;
typedef struct holant_pair holant_pair;
typedef struct holant_set holant_set;

typedef struct holant_indist_options {
  int max_vertices;
  int max_total_degree;
  int bipartite; /* nonzero: sides come from the pair's "bipartite" field */
  holant_indist_variant variant;
  double tol;
  int max_witnesses;
  int workers;
  holant_backend backend;
} holant_indist_options;

typedef struct holant_search_options {
  int restarts;
  int iters;
  uint64_t seed;
  double tol;
  int workers;
} holant_search_options;

HOLANT_API const char* holant_version(void);
HOLANT_API const char* holant_last_error(void);
HOLANT_API const char* holant_status_name(holant_status status);
HOLANT_API void holant_string_free(char* s);
HOLANT_API uint64_t holant_digest(const char* bytes, uint64_t length);

HOLANT_API void holant_indist_options_default(holant_indist_options* options);
HOLANT_API void holant_search_options_default(holant_search_options* options);

/* Grids and gadgets */
HOLANT_API holant_status holant_grid_parse(const char* json, holant_grid** out);
HOLANT_API void holant_grid_free(holant_grid* grid);
/* {"value"}; the grid must have no dangling edges */
HOLANT_API holant_status holant_grid_eval(const holant_grid* grid, holant_backend backend, char** result);
/* {"m", "d", "matrix"}; m < 0 keeps the file's split, otherwise m + d must match */
HOLANT_API holant_status holant_grid_matrix(const holant_grid* grid, int m, int d, holant_backend backend,
                                            char** result);

/* Similar pairs */
HOLANT_API holant_status holant_pair_parse(const char* json, holant_pair** out);
HOLANT_API void holant_pair_free(holant_pair* pair);
HOLANT_API holant_status holant_indist(const holant_pair* pair, const holant_indist_options* options, char** result,
                                       int* distinguished);
/* h_json is a matrix (array of rows) or {"H": rows} */
HOLANT_API holant_status holant_ortho_verify(const holant_pair* pair, const char* h_json, double tol,
                                             holant_backend backend, char** result, int* accepted);
HOLANT_API holant_status holant_ortho_search(const holant_pair* pair, const holant_search_options* options,
                                             char** result, int* found);

/* Signature sets */
HOLANT_API holant_status holant_set_parse(const char* json, holant_set** out);
HOLANT_API void holant_set_free(holant_set* set);
HOLANT_API holant_status holant_odeco_check(const holant_set* set, double tol, char** result, int* ok);
HOLANT_API holant_status holant_odeco_decompose(const holant_set* set, double tol, uint64_t seed, char** result,
                                                int* ok);
HOLANT_API holant_status holant_span(const holant_set* set, int m, int d, int max_vertices, int max_total_degree,
                                     holant_backend backend, char** result);

/* Homomorphism profiles of {"x": rows, "y"?: rows}; differ is set when y is
 * given and some count disagrees */
HOLANT_API holant_status holant_hom(const char* json, int max_size, int max_cycle, holant_backend backend,
                                    char** result, int* differ);

#ifdef __cplusplus
}
#endif

#endif
