/* C interface to the rfrp library.
 *
 * Every call returns an rfrp_status. Results are JSON documents returned as
 * heap strings that the caller releases with rfrp_string_free. On failure the
 * message of the most recent error on the calling thread is available from
 * rfrp_last_error.
 */
#ifndef RFRP_RFRP_H
#define RFRP_RFRP_H

#include <stddef.h>

#if defined(_WIN32)
#define RFRP_API __declspec(dllexport)
#else
#define RFRP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rfrp_status {
  RFRP_OK = 0,
  RFRP_ERR_INTERNAL = 1,
  RFRP_ERR_INPUT = 2,
  RFRP_ERR_RESOURCE = 3,
  RFRP_ERR_MISMATCH = 4
} rfrp_status;

typedef enum rfrp_method {
  RFRP_METHOD_AUTO = 0,
  RFRP_METHOD_COSET_TABLE = 1,
  RFRP_METHOD_TOWER = 2
} rfrp_method;

typedef struct rfrp_bounds {
  unsigned long long index;      /* largest coset table, 0 for the default */
  unsigned long long generators; /* largest subgroup presentation, 0 for the default */
} rfrp_bounds;

typedef struct rfrp_group rfrp_group;
typedef struct rfrp_filtration rfrp_filtration;
typedef struct rfrp_classx rfrp_classx;

RFRP_API const char* rfrp_version(void);
RFRP_API const char* rfrp_last_error(void);
RFRP_API void rfrp_string_free(char* s);

/* Groups: a built-in fixture name ("f2", "heisenberg", "g3", ...) or
 * {"generators": [...], "relators": [...]}. */
RFRP_API rfrp_status rfrp_group_from_fixture(const char* name, rfrp_group** out);
RFRP_API rfrp_status rfrp_group_from_json(const char* json, rfrp_group** out);
RFRP_API void rfrp_group_free(rfrp_group* g);
RFRP_API rfrp_status rfrp_group_to_json(const rfrp_group* g, char** out);
RFRP_API rfrp_status rfrp_group_abelianization(const rfrp_group* g, char** out);

/* Standard filtration K_1 > K_2 > ... at the prime p. */
RFRP_API rfrp_status rfrp_filtration_new(const rfrp_group* g, int p, int depth, const rfrp_bounds* bounds,
                                         rfrp_filtration** out);
RFRP_API void rfrp_filtration_free(rfrp_filtration* f);
RFRP_API rfrp_status rfrp_filtration_report(const rfrp_filtration* f, char** out);

/* Separation certificate or INCONCLUSIVE report for a word. */
RFRP_API rfrp_status rfrp_separate(const rfrp_group* g, const char* word, int p, int max_depth, rfrp_method method,
                                   const rfrp_bounds* bounds, char** out);
/* *valid is 1 when the certificate checks out; out receives a short JSON verdict. */
RFRP_API rfrp_status rfrp_replay(const char* certificate_json, int* valid, char** out);

/* hints_json may be NULL: {"circle_bundle": {"genus": 2, "euler": 1}, "nilpotent": true,
 * "torsion": {"element": "x", "order": 2}}. */
RFRP_API rfrp_status rfrp_battery(const rfrp_group* g, const char* hints_json, char** out);
RFRP_API rfrp_status rfrp_battery_verify(const rfrp_group* g, const char* report_json, int* valid);
RFRP_API rfrp_status rfrp_verdict(const char* label, char** out);

/* sub_json: {"group": <presentation>, "images": ["x", ...]}. */
RFRP_API rfrp_status rfrp_induced_topology(const rfrp_group* g, const char* sub_json, int p, int depth, char** out);
/* Ambient Z x F_rank with t first; x_index names the free generator x. */
RFRP_API rfrp_status rfrp_edge_closure(int free_rank, int x_index, const char* word, int p, int max_depth, char** out);

/* Jump loci. character_json: {"order": 3, "exponents": [1, 0]}. */
RFRP_API rfrp_status rfrp_dim_h1(const rfrp_group* g, const char* character_json, size_t* dim);
/* Orders with more than `budget` characters are sampled; seed 0 selects the default seed. */
RFRP_API rfrp_status rfrp_jump_scan(const rfrp_group* g, const int* orders, size_t n_orders, size_t budget,
                                    unsigned long long seed, int jobs, char** out);
/* quotient: a name ("z3" for the first free H1 coordinate mod 3, "tf2" for TF H1 mod 2)
 * or {"moduli": [...], "images": [[...], ...]}. With check != 0 the
 * Reidemeister-Schreier oracle also runs and RFRP_ERR_MISMATCH is returned on
 * disagreement (out is still filled). */
RFRP_API rfrp_status rfrp_cover_b1(const rfrp_group* g, const char* quotient, int check, int jobs, char** out);

/* Class X graph manifolds, from graph JSON, arrangement JSON, or a fixture name
 * such as "generic3". */
RFRP_API rfrp_status rfrp_classx_from_json(const char* json, rfrp_classx** out);
RFRP_API rfrp_status rfrp_classx_from_arrangement(const char* arrangement_json, rfrp_classx** out);
RFRP_API rfrp_status rfrp_classx_from_fixture(const char* name, rfrp_classx** out);
RFRP_API void rfrp_classx_free(rfrp_classx* x);
/* what: "graph", "validate", "h1", "pi1", "inclusions", "girth", "dot". */
RFRP_API rfrp_status rfrp_classx_report(const rfrp_classx* x, const char* what, char** out);
RFRP_API rfrp_status rfrp_classx_girth_cover(const rfrp_classx* x, int p, char** out);
RFRP_API rfrp_status rfrp_classx_pi1(const rfrp_classx* x, rfrp_group** out);

RFRP_API rfrp_status rfrp_arrangement_incidence(const char* arrangement_json, char** out);
RFRP_API rfrp_status rfrp_smooth_curve(int degree, char** out);

/* The fixture gallery. */
RFRP_API rfrp_status rfrp_fixtures(char** out);

#ifdef __cplusplus
}
#endif

#endif
