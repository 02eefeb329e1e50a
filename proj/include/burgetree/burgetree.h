#ifndef BURGETREE_H
#define BURGETREE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BT_API __declspec(dllexport)
#else
#define BT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bt_status {
    BT_OK = 0,
    BT_ERR_INVALID_ARGUMENT = 1, /* malformed input: null pointer, bad rational, unknown name */
    BT_ERR_DOMAIN = 2,           /* well-formed but outside the mathematical domain */
    BT_ERR_IO = 3,
    BT_ERR_INTERNAL = 4
} bt_status;

typedef enum bt_family {
    BT_FAMILY_F = 0, /* F_{a,b} */
    BT_FAMILY_f = 1, /* f_{a,b}, the q -> 1/q companion */
    BT_FAMILY_H = 2, /* bar-shifted H_{a,b} */
    BT_FAMILY_I = 3  /* even-modulus I_{a,b} */
} bt_family;

typedef enum bt_format { BT_FORMAT_JSON = 0, BT_FORMAT_CSV = 1, BT_FORMAT_PLAIN = 2 } bt_format;

typedef struct bt_poly bt_poly;         /* exact Laurent polynomial */
typedef struct bt_series bt_series;     /* power series truncated at a known order */
typedef struct bt_campaign bt_campaign; /* reports of one verification run */

/* Message of the last failed call on this thread; "" after a successful call. */
BT_API const char* bt_last_error(void);
BT_API const char* bt_version(void);
/* Frees strings returned through char** out parameters. */
BT_API void bt_string_free(char* s);

BT_API void bt_poly_free(bt_poly* p);
/* Nonzero terms as "exponent:coefficient" pairs in increasing exponent order; "0" for the zero polynomial. */
BT_API bt_status bt_poly_to_string(const bt_poly* p, char** out);
/* Decimal coefficient of q^exponent. */
BT_API bt_status bt_poly_coeff(const bt_poly* p, int64_t exponent, char** out);
/* Exponent range; fails with BT_ERR_DOMAIN on the zero polynomial. */
BT_API bt_status bt_poly_degree_range(const bt_poly* p, int64_t* min_exponent, int64_t* max_exponent);
BT_API bt_status bt_poly_equal(const bt_poly* x, const bt_poly* y, int* out);

BT_API void bt_series_free(bt_series* s);
BT_API bt_status bt_series_order(const bt_series* s, int64_t* out);
BT_API bt_status bt_series_to_string(const bt_series* s, char** out);

/* Gaussian binomial [n, m]. */
BT_API bt_status bt_qbinomial(int64_t n, int64_t m, bt_poly** out);
/* Kernel B(L, M, a, b). */
BT_API bt_status bt_b_kernel(int64_t L, int64_t M, int64_t a, int64_t b, bt_poly** out);
/* alpha and beta are rationals written "p" or "p/q". */
BT_API bt_status bt_g_poly(int64_t N, int64_t M, const char* alpha, const char* beta, int64_t K, bt_poly** out);
BT_API bt_status bt_d_poly(int64_t K, int64_t i, int64_t N, int64_t M, const char* alpha, const char* beta, bt_poly** out);

/* Lattice sums. (a, b) must be coprime with 1 <= b < a. */
BT_API bt_status bt_eval(bt_family family, int64_t a, int64_t b, int64_t L, int64_t M, bt_poly** out);
/* M -> infinity, multiplied by (q)_{2L}. */
BT_API bt_status bt_eval_limit_M(bt_family family, int64_t a, int64_t b, int64_t L, bt_poly** out);
/* L -> infinity, multiplied by (q)_{2M}. */
BT_API bt_status bt_eval_limit_L(bt_family family, int64_t a, int64_t b, int64_t M, bt_poly** out);
/* Both bounds infinite, to order T. */
BT_API bt_status bt_eval_series(bt_family family, int64_t a, int64_t b, int64_t T, bt_series** out);
/* Alternating sum side of the family identity. */
BT_API bt_status bt_bosonic(bt_family family, int64_t a, int64_t b, int64_t L, int64_t M, bt_poly** out);
/* Value obtained by walking the transform tree down from the seed; not defined for BT_FAMILY_f. */
BT_API bt_status bt_tree_walk(bt_family family, int64_t a, int64_t b, int64_t L, int64_t M, bt_poly** out);

typedef struct bt_campaign_options {
    int64_t a_max;  /* negative: per-case default */
    int64_t lm_max;
    int64_t n_max;
    int64_t order;
    unsigned jobs;  /* 0: hardware concurrency */
} bt_campaign_options;

BT_API void bt_campaign_options_init(bt_campaign_options* o);
/* Newline-separated suite names. */
BT_API bt_status bt_suite_names(char** out);
/* Registered cases, optionally of one suite (suite may be NULL). BT_FORMAT_JSON gives an
   array of {id, suite, kind, params, domain, statement}; BT_FORMAT_PLAIN one block per case. */
BT_API bt_status bt_list_identities(const char* suite, bt_format format, char** out);
/* Runs the cases of the given suites; case_ids (may be empty) restricts to those ids. */
BT_API bt_status bt_campaign_run(const char* const* suites, size_t n_suites, const char* const* case_ids, size_t n_cases,
                                 const bt_campaign_options* options, bt_campaign** out);
BT_API void bt_campaign_free(bt_campaign* c);
BT_API size_t bt_campaign_size(const bt_campaign* c);
BT_API size_t bt_campaign_passed(const bt_campaign* c);
BT_API bt_status bt_campaign_render(const bt_campaign* c, bt_format format, int canonical, char** out);
/* "PASS x/y" or "FAIL x/y". */
BT_API bt_status bt_campaign_summary(const bt_campaign* c, char** out);

#ifdef __cplusplus
}
#endif

#endif
