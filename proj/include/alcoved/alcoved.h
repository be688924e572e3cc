#ifndef ALCOVED_ALCOVED_H
#define ALCOVED_ALCOVED_H

#include <stddef.h>
#include <stdint.h>

#if defined(ALCOVED_BUILDING_LIBRARY)
#define ALC_API __attribute__((visibility("default")))
#else
#define ALC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. They double as the exit codes of the command-line tool. */
typedef enum {
  ALC_OK = 0,
  ALC_INVALID = 1,  /* bad input: unknown type, malformed spec, out-of-range argument */
  ALC_DEFECT = 2,   /* a mathematical identity failed; output is still produced */
  ALC_BUDGET = 3,   /* enumeration or group-size budget exhausted */
  ALC_INTERNAL = 4
} alc_status;

typedef struct alc_system alc_system;
typedef struct alc_polytope alc_polytope;

typedef struct {
  uint64_t budget; /* search nodes for lattice enumeration; 0 selects the default */
  unsigned jobs;   /* worker threads; 0 or 1 runs single-threaded */
} alc_options;

ALC_API void alc_options_default(alc_options* options);

/* Message for the most recent failure on the calling thread. */
ALC_API const char* alc_last_error(void);
ALC_API const char* alc_version(void);

/* Every char** result is a NUL-terminated JSON document owned by the caller. */
ALC_API void alc_string_free(char* s);

/* Root systems. type is one of "A".."G". */
ALC_API alc_status alc_system_create(const char* type, int rank, alc_system** out);
ALC_API void alc_system_free(alc_system* sys);
ALC_API alc_status alc_system_info(const alc_system* sys, char** json);
ALC_API alc_status alc_weyl_order(const alc_system* sys, uint64_t* order);

/* model is "matrix" or "permutation" (types A and C). limit 0 means all. */
ALC_API alc_status alc_enumerate(const alc_system* sys, uint64_t limit, const char* model, char** json);
/* Per-element descents, cdes, delta and cmaj. limit 0 means all. */
ALC_API alc_status alc_stats(const alc_system* sys, uint64_t limit, char** json);
ALC_API alc_status alc_qweyl(const alc_system* sys, char** json);
ALC_API alc_status alc_double_coset(const alc_system* sys, char** json);
ALC_API alc_status alc_cross_table(const alc_system* sys, char** json);
/* k = 0 checks all generalized hypersimplices, otherwise reports Delta_k. */
ALC_API alc_status alc_hypersimplex(const alc_system* sys, int64_t k, const alc_options* options, char** json);
ALC_API alc_status alc_thick_check(const alc_system* sys, const int64_t* b, size_t b_len, int64_t k, int64_t K,
                                   const alc_options* options, char** json);
/* point_json: array of rationals in coweight coordinates, e.g. ["1/3", "1/3"]. */
ALC_API alc_status alc_alcove_of(const alc_system* sys, const char* point_json, char** json);
ALC_API alc_status alc_selfcheck(const alc_system* sys, uint64_t seed, const alc_options* options, char** json);

/* Alcoved polytopes, from a JSON spec:
   {"type": "C", "rank": 2, "constraints": [{"root": [1, 0], "min": 0, "max": 1}, ...]} */
ALC_API alc_status alc_polytope_from_json(const char* spec_json, alc_polytope** out);
ALC_API alc_status alc_polytope_from_file(const char* path, alc_polytope** out);
ALC_API void alc_polytope_free(alc_polytope* p);
ALC_API alc_status alc_polytope_bounds(const alc_polytope* p, char** json);
ALC_API alc_status alc_volume(const alc_polytope* p, const alc_options* options, char** json);
ALC_API alc_status alc_lattice_point_count(const alc_polytope* p, const alc_options* options, uint64_t* count);
ALC_API alc_status alc_volume_identity(const alc_polytope* p, const alc_options* options, char** json);
ALC_API alc_status alc_groebner(const alc_polytope* p, const alc_options* options, char** json);
ALC_API alc_status alc_triangulate(const alc_polytope* p, const alc_options* options, char** json);

#ifdef __cplusplus
}
#endif

#endif
