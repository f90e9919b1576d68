/* grskit C API: exact GF(p^m) arithmetic, generalized Reed-Solomon subcode
 * construction, classification and theorem audits behind opaque handles.
 *
 * Conventions:
 *   - field elements cross the boundary as packed indices: sum_i c_i p^i for
 *     the coefficient vector (c_0, ..., c_{m-1});
 *   - every fallible call returns a grskit_status; GRSKIT_OK is 0 and
 *     grskit_last_error() describes the most recent failure on this thread;
 *   - strings returned through char** are heap-allocated; release them with
 *     grskit_string_free.
 */
#ifndef GRSKIT_H
#define GRSKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GRSKIT_API __declspec(dllexport)
#else
#define GRSKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct grskit_field grskit_field;
typedef struct grskit_code grskit_code;

typedef enum grskit_status {
    GRSKIT_OK = 0,
    GRSKIT_ERR_NON_PRIME_CHARACTERISTIC,
    GRSKIT_ERR_REDUCIBLE_MODULUS,
    GRSKIT_ERR_DIVISION_BY_ZERO,
    GRSKIT_ERR_FIELD_MISMATCH,
    GRSKIT_ERR_NOT_A_SQUARE,
    GRSKIT_ERR_DUPLICATE_POINTS,
    GRSKIT_ERR_SHAPE_MISMATCH,
    GRSKIT_ERR_ZERO_MATRIX,
    GRSKIT_ERR_TOO_LARGE,
    GRSKIT_ERR_BAD_DIMENSION,
    GRSKIT_ERR_ZERO_TWIST,
    GRSKIT_ERR_OUT_OF_RANGE,
    GRSKIT_ERR_BAD_INDEX,
    GRSKIT_ERR_NOT_A_DIVISOR,
    GRSKIT_ERR_ODD_LENGTH,
    GRSKIT_ERR_EVEN_LENGTH,
    GRSKIT_ERR_EVEN_CHARACTERISTIC,
    GRSKIT_ERR_CHARACTERISTIC_DIVIDES_LENGTH,
    GRSKIT_ERR_HYPOTHESIS_FAILED,
    GRSKIT_ERR_SPEC_VALIDATION,
    GRSKIT_ERR_INTERNAL
} grskit_status;

GRSKIT_API const char* grskit_version(void);
GRSKIT_API const char* grskit_status_name(grskit_status status);

/* Message of the most recent error on the calling thread, or "" if none. */
GRSKIT_API const char* grskit_last_error(void);

GRSKIT_API void grskit_string_free(char* s);

/* ---- fields ------------------------------------------------------------ */

/* modulus may be NULL for the canonical modulus; otherwise it lists the
 * m+1 coefficients, low to high, of a monic irreducible of degree m. */
GRSKIT_API grskit_status grskit_field_create(uint64_t p, uint32_t m,
                                             const uint32_t* modulus, size_t modulus_len,
                                             grskit_field** out);
GRSKIT_API grskit_status grskit_field_from_json(const char* spec_json, grskit_field** out);
GRSKIT_API void grskit_field_destroy(grskit_field* f);

GRSKIT_API uint64_t grskit_field_order(const grskit_field* f);
GRSKIT_API uint64_t grskit_field_characteristic(const grskit_field* f);
GRSKIT_API uint32_t grskit_field_degree(const grskit_field* f);
/* Index of the canonical primitive element the tables are built from. */
GRSKIT_API uint32_t grskit_field_generator(const grskit_field* f);
GRSKIT_API grskit_status grskit_field_to_json(const grskit_field* f, char** out_json);

GRSKIT_API grskit_status grskit_add(const grskit_field* f, uint32_t a, uint32_t b, uint32_t* out);
GRSKIT_API grskit_status grskit_sub(const grskit_field* f, uint32_t a, uint32_t b, uint32_t* out);
GRSKIT_API grskit_status grskit_mul(const grskit_field* f, uint32_t a, uint32_t b, uint32_t* out);
GRSKIT_API grskit_status grskit_neg(const grskit_field* f, uint32_t a, uint32_t* out);
GRSKIT_API grskit_status grskit_inv(const grskit_field* f, uint32_t a, uint32_t* out);
GRSKIT_API grskit_status grskit_pow(const grskit_field* f, uint32_t a, int64_t e, uint32_t* out);
GRSKIT_API grskit_status grskit_is_square(const grskit_field* f, uint32_t a, int* out);
GRSKIT_API grskit_status grskit_sqrt(const grskit_field* f, uint32_t a, uint32_t* out);

/* ---- codes -------------------------------------------------------------- */

/* descriptor_json: {"family": "grs|egrs|sub_grs|sub_egrs|plus_tgrs|tgrs",
 *                   "k": ..., "r": ..., "eta": ...,
 *                   "points": [[c0,...],...], "factors": [[c0,...],...]} */
GRSKIT_API grskit_status grskit_code_build(const grskit_field* f, const char* descriptor_json,
                                           grskit_code** out);
GRSKIT_API void grskit_code_destroy(grskit_code* c);

GRSKIT_API size_t grskit_code_length(const grskit_code* c);
GRSKIT_API size_t grskit_code_dimension(const grskit_code* c);
GRSKIT_API grskit_status grskit_code_to_json(const grskit_code* c, char** out_json);
GRSKIT_API grskit_status grskit_code_dual(const grskit_code* c, grskit_code** out);
GRSKIT_API grskit_status grskit_code_min_distance(const grskit_code* c, uint64_t max_work,
                                                  uint32_t* out);
/* {"d": ..., "d_dual": ..., "category": "MDS|AMDS|NMDS|OTHER"} */
GRSKIT_API grskit_status grskit_code_classify(const grskit_code* c, uint64_t max_work,
                                              char** out_json);
GRSKIT_API grskit_status grskit_code_is_self_dual(const grskit_code* c, int* out);

/* ---- jobs ---------------------------------------------------------------- */

/* Runs a full job (classify, audit, search, dual, tables) described by a
 * JSON spec; each finished output line is passed to the callback without a
 * trailing newline. out_disagreements may be NULL. */
typedef void (*grskit_line_cb)(void* user, const char* line);
GRSKIT_API grskit_status grskit_job_run(const char* jobspec_json, grskit_line_cb cb, void* user,
                                        uint64_t* out_disagreements);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRSKIT_H */
