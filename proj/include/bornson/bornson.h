/*
 * bornson: exact finite Born series for transfer operators with an acyclic
 * transition graph.
 *
 * C interface. All handles are opaque and owned by the caller; free them
 * with the matching *_free function. Every fallible call returns a
 * bs_status; on failure a human-readable message is available from
 * bs_last_error() until the next call on the same thread.
 *
 * Indices are 0-based. A transition {from = i, to = j} is the matrix element
 * T_{ji}. Complex arrays are bs_complex, layout-compatible with
 * double[2] and std::complex<double>. Dense matrices are row-major.
 */
#ifndef BORNSON_H
#define BORNSON_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BORNSON_BUILDING)
#    define BORNSON_API __declspec(dllexport)
#  else
#    define BORNSON_API __declspec(dllimport)
#  endif
#else
#  define BORNSON_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bs_status {
    BS_OK = 0,
    BS_ERR_ARGUMENT = 1,
    BS_ERR_DIMENSION = 2,
    BS_ERR_RESONANCE = 3,
    BS_ERR_NOT_NILPOTENT = 4,  /* transition graph has a cycle */
    BS_ERR_SINGULAR = 5,       /* I - T is singular */
    BS_ERR_TOPOLOGY = 6,       /* not a diamond */
    BS_ERR_UNBOUNDED = 7,      /* unbounded path enumeration on a cyclic graph */
    BS_ERR_LIMIT = 8,          /* path enumeration limit exceeded */
    BS_ERR_PARSE = 9,
    BS_ERR_INTERNAL = 99
} bs_status;

typedef enum bs_norm_kind {
    BS_NORM_INF = 0,   /* max absolute row sum */
    BS_NORM_ONE = 1,   /* max absolute column sum */
    BS_NORM_FRO = 2
} bs_norm_kind;

typedef enum bs_format {
    BS_FORMAT_STRUCTURED = 0,  /* JSON */
    BS_FORMAT_TABLE = 1
} bs_format;

typedef struct bs_complex {
    double re;
    double im;
} bs_complex;

typedef struct bs_transition {
    size_t from;
    size_t to;
    bs_complex amplitude;
} bs_transition;

typedef struct bs_truncation_report {
    size_t order;
    bs_norm_kind norm_kind;
    double defect_norm;
    double operator_norm;
    double phi_norm;
    int has_exact_remainder;   /* 0 when I - T is singular */
    double exact_remainder_norm;
    int has_bound;             /* 0 when ||T|| >= 1 */
    double bound;
    int quasi_nilpotent;
} bs_truncation_report;

typedef struct bs_operator bs_operator;
typedef struct bs_system bs_system;
typedef struct bs_spec bs_spec;

BORNSON_API const char* bs_version(void);
BORNSON_API const char* bs_last_error(void);
BORNSON_API const char* bs_status_name(bs_status status);
BORNSON_API void bs_string_free(char* s);

/* ---- operators ---- */

BORNSON_API bs_status bs_operator_create(size_t dim, const bs_transition* transitions,
                                         size_t count, bs_operator** out);
/* T = (E - H0)^{-1} V; potential given as transitions. */
BORNSON_API bs_status bs_operator_from_scattering(size_t dim, const double* h0,
                                                  const bs_transition* potential,
                                                  size_t count, bs_complex energy,
                                                  bs_operator** out);
BORNSON_API void bs_operator_free(bs_operator* op);
BORNSON_API size_t bs_operator_dim(const bs_operator* op);
BORNSON_API size_t bs_operator_nnz(const bs_operator* op);
BORNSON_API bs_status bs_operator_get(const bs_operator* op, size_t from, size_t to,
                                      bs_complex* out);
BORNSON_API bs_status bs_operator_norm(const bs_operator* op, bs_norm_kind kind, double* out);
BORNSON_API bs_status bs_operator_power(const bs_operator* op, size_t k, bs_operator** out);
BORNSON_API bs_status bs_operator_product(const bs_operator* a, const bs_operator* b,
                                          bs_operator** out);
BORNSON_API bs_status bs_matvec(const bs_operator* op, const bs_complex* v, size_t dim,
                                bs_complex* out);

/* ---- transition graph ---- */

/* cycle may be NULL; otherwise receives up to cycle_cap vertices of a witness
 * cycle when the graph is cyclic. *cycle_len is the full cycle length. */
BORNSON_API bs_status bs_analyze_graph(const bs_operator* op, int* is_acyclic, size_t* depth,
                                       size_t* cycle, size_t cycle_cap, size_t* cycle_len);
BORNSON_API bs_status bs_path_sum_entry(const bs_operator* op, size_t from, size_t to,
                                        size_t k, bs_complex* out);

/* ---- exact collapse ---- */

BORNSON_API bs_status bs_system_create(const bs_operator* op, bs_system** out);
BORNSON_API void bs_system_free(bs_system* sys);
BORNSON_API size_t bs_system_dim(const bs_system* sys);
BORNSON_API size_t bs_system_depth(const bs_system* sys);

/* terms may be NULL; otherwise it receives (depth + 1) * dim amplitudes,
 * term k at offset k * dim. */
BORNSON_API bs_status bs_solve_exact(const bs_system* sys, const bs_complex* phi, size_t dim,
                                     bs_complex* terms, bs_complex* total);
BORNSON_API bs_status bs_born_approximation(const bs_operator* op, const bs_complex* phi,
                                            size_t dim, size_t order, bs_complex* out);
BORNSON_API bs_status bs_direct_solve(const bs_operator* op, const bs_complex* phi, size_t dim,
                                      bs_complex* out);
BORNSON_API bs_status bs_det_check(const bs_system* sys, bs_complex* out);
/* out: dim * dim, row-major. */
BORNSON_API bs_status bs_finite_neumann_inverse(const bs_system* sys, bs_complex* out);
BORNSON_API bs_status bs_full_resolvent(const bs_system* sys, const bs_complex* g0, size_t dim,
                                        bs_complex* out);
BORNSON_API bs_status bs_t_matrix(const bs_system* sys, const bs_operator* potential,
                                  bs_complex* out);

/* ---- truncation error ---- */

BORNSON_API bs_status bs_remainder_bound(const bs_operator* op, const bs_complex* phi,
                                         size_t dim, size_t order, bs_norm_kind kind,
                                         bs_truncation_report* out);

/* ---- system specs and reports ---- */

BORNSON_API bs_status bs_spec_load(const char* path, bs_spec** out);
BORNSON_API bs_status bs_spec_parse(const char* text, bs_spec** out);
/* name: "cascade" (levels >= 2), "diamond", "double-diamond". */
BORNSON_API bs_status bs_spec_scenario(const char* name, size_t levels, bs_spec** out);
BORNSON_API void bs_spec_free(bs_spec* spec);
BORNSON_API bs_status bs_spec_serialize(const bs_spec* spec, char** out);
BORNSON_API bs_status bs_spec_operator(const bs_spec* spec, bs_operator** out);

/* Report strings are allocated by the library; release with bs_string_free.
 * is_acyclic (may be NULL) distinguishes the structural outcome. */
BORNSON_API bs_status bs_report_analyze(const bs_spec* spec, bs_norm_kind norm,
                                        bs_format format, char** out, int* is_acyclic);
/* phi: 1-based basis index ("3") or path of a vector file. order < 0 means
 * the exact expansion. warnings (may be NULL) receives newline-separated
 * diagnostics, or NULL when there are none. */
BORNSON_API bs_status bs_report_solve(const bs_spec* spec, const char* phi, long order,
                                      bs_norm_kind norm, bs_format format, char** out,
                                      char** warnings);
BORNSON_API bs_status bs_report_classify(const bs_spec* spec, bs_format format, char** out);
BORNSON_API bs_status bs_report_bench(size_t dim, double density, uint64_t seed,
                                      bs_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BORNSON_H */
