/* boxhelly: exact analytics for families of axis-parallel boxes.
 *
 * C interface over the C++ core. Families are opaque handles; every
 * operation returns a status code and reports go out as JSON text that the
 * caller releases with bh_string_free. Family files and report schemas are
 * documented in the project README.
 */

#ifndef BOXHELLY_H
#define BOXHELLY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bh_family bh_family;

typedef enum bh_status {
    BH_OK = 0,
    BH_ERR_INVALID = 1,    /* bad parameter or value */
    BH_ERR_PARSE = 2,      /* malformed family file or rational literal */
    BH_ERR_LIMIT = 3,      /* enumeration/oracle size limit exceeded */
    BH_ERR_DIMENSION = 4,  /* operands of different dimensions */
    BH_ERR_EMPTY = 5,      /* operation requires a nonempty family */
    BH_ERR_HYPOTHESIS = 6, /* a theorem's hypothesis fails for these inputs */
    BH_ERR_OVERFLOW = 7,   /* exact arithmetic left the 64-bit range */
    BH_ERR_NOMEM = 8,
    BH_ERR_INTERNAL = 9
} bh_status;

const char* bh_status_name(bh_status status);

/* Message for the most recent failure on this thread; never NULL. */
const char* bh_last_error(void);

const char* bh_version(void);

void bh_string_free(char* text);
void bh_family_free(bh_family* family);

/* Family file JSON <-> handle. Output text is canonical: generating and
 * serializing with equal inputs is byte-identical across runs. */
bh_status bh_family_parse_json(const char* text, bh_family** out);
bh_status bh_family_to_json(const bh_family* family, char** out_json);

/* -1 on NULL input. */
long long bh_family_dim(const bh_family* family);
long long bh_family_size(const bh_family* family);

/* Generators. Rational parameters are strings ("10", "5/2", "0.25"). */
bh_status bh_gen_turan(long long n, long long d, bh_family** out);
bh_status bh_gen_staircase(long long n, long long k, bh_family** out);
bh_status bh_gen_random(long long n, long long d, unsigned long long seed,
                        const char* extent, const char* side_min, const char* side_max,
                        int closed, bh_family** out);

/* Reports (JSON text). */
bh_status bh_analyze_json(const bh_family* family, int with_edges, char** out_json);
bh_status bh_extract_json(const bh_family* family, char** out_json);

/* k < 0 defaults to the measured depth; eps NULL skips the subfamily-size
 * verdict. *any_fail is set to 1 when some verdict is FAIL. */
bh_status bh_verify_json(const bh_family* family, long long k, const char* eps,
                         char** out_json, int* any_fail);

bh_status bh_search_json(long long n, long long k, long long d, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* BOXHELLY_H */
