/*
 * C interface of the rieszlab library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an rl_status; on failure the message of the
 * calling thread is available from rl_last_error() until its next call.
 * Strings returned through char** are owned by the caller (rl_string_free).
 */
#ifndef RIESZLAB_H
#define RIESZLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(RIESZLAB_BUILDING_LIBRARY)
#define RL_API __attribute__((visibility("default")))
#else
#define RL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rl_status {
  RL_OK = 0,
  RL_INVALID_ARGUMENT = 1,
  RL_DOMAIN = 2,
  RL_CONVERGENCE = 3,
  RL_PARSE = 4,
  RL_HYPOTHESIS = 5,
  RL_INTERNAL = 6
} rl_status;

typedef enum rl_format { RL_FORMAT_JSON = 0, RL_FORMAT_CSV = 1, RL_FORMAT_HUMAN = 2 } rl_format;

typedef enum rl_norm_kind {
  RL_NORM_HARDY = 0,
  RL_NORM_TRIPLE = 1,
  RL_NORM_BERGMAN = 2,
  RL_NORM_BERGMAN_TRIPLE = 3
} rl_norm_kind;

/* Harmonic map f = g + conj(h) with polynomial g, h. */
typedef struct rl_map rl_map;
/* A verification report, or the report bundle of a suite run. */
typedef struct rl_report rl_report;

/* Grid of a pointwise scan; zero fields take the library defaults. */
typedef struct rl_grid {
  int n_r;
  int n_t;
  int n_1d;
  int refine_nodes;
  double tolerance;
} rl_grid;

/* Options of rl_run_suite; zero fields take the library defaults. */
typedef struct rl_suite_options {
  uint64_t seed;
  rl_grid grid;
  int theorem_samples;
  int degree;
  double tolerance;
} rl_suite_options;

RL_API const char* rl_version(void);
RL_API const char* rl_last_error(void);
RL_API void rl_string_free(char* text);

/* Coefficients are interleaved (re, im) pairs, lowest degree first;
 * g_len and h_len count coefficients, not doubles. */
RL_API rl_status rl_map_create(const double* g, size_t g_len, const double* h, size_t h_len, rl_map** out);
/* JSON object {"g": [[re, im], ...], "h": [[re, im], ...]}. */
RL_API rl_status rl_map_from_json(const char* text, rl_map** out);
/* with_series adds the bilateral boundary coefficients as [k, re, im]. */
RL_API rl_status rl_map_to_json(const rl_map* map, int with_series, char** out);
/* constraint: "NONE", "RE_ZERO", "RE_NONNEG" or "RE_NONPOS" (NULL means NONE). */
RL_API rl_status rl_map_random(int degree, uint64_t seed, const char* constraint, rl_map** out);
RL_API rl_status rl_map_eval(const rl_map* map, double re, double im, double* out_re, double* out_im);
/* Harmonic conjugate -i(g - conj h) after moving h(0) into g. */
RL_API rl_status rl_map_conjugate(const rl_map* map, rl_map** out);
RL_API void rl_map_free(rl_map* map);

/* Node counts of 0 select the automatic quadrature sizes. */
RL_API rl_status rl_norm(const rl_map* map, rl_norm_kind kind, double p, int n_angle, int n_radial,
                         double* out);
/* kind is a constant name such as "HILBERT_NORM"; ISOP takes the integer n. */
RL_API rl_status rl_sharp_constant(const char* kind, double p, double* out);
/* Every constant defined at p as a JSON object; ISOP is included when p is
 * an admissible integer. */
RL_API rl_status rl_constants_json(double p, char** out);

/* grid may be NULL. */
RL_API rl_status rl_verify_lemma(const char* id, double p, const rl_grid* grid, rl_report** out);
/* params receives (r, t) for two-variable tags or the single abscissa;
 * *n_params is set to 2 or 1. */
RL_API rl_status rl_locate_equality(const char* id, double p, double params[2], size_t* n_params,
                                    double* slack);
RL_API rl_status rl_check_submean(const char* minorant, double p, int centers, int radii, int angles,
                                  uint64_t seed, double tol, rl_report** out);
RL_API rl_status rl_check_pluri_lines(const char* minorant, double p, int lines, int angles, uint64_t seed,
                                      double tol, rl_report** out);
/* relaxed: NULL, or "RE_NONNEG" for the weaker KALAJ hypothesis. */
RL_API rl_status rl_verify_theorem(const char* id, double p, int samples, int degree, uint64_t seed, double tol,
                                   const char* relaxed, rl_report** out);
RL_API rl_status rl_verify_theorem_on(const char* id, double p, const rl_map* map, double tol,
                                      const char* relaxed, rl_report** out);
RL_API rl_status rl_probe_sharpness(const char* id, double p, const double* gamma_fractions, size_t count,
                                    double tol, rl_report** out);
/* options may be NULL. */
RL_API rl_status rl_run_suite(const rl_suite_options* options, rl_report** out);

RL_API rl_status rl_report_format(const rl_report* report, rl_format format, char** out);
/* 1 when no violation was recorded, 0 otherwise (also for NULL). */
RL_API int rl_report_passed(const rl_report* report);
RL_API size_t rl_report_violation_count(const rl_report* report);
/* Records the run seed on a report that has none (deterministic scans). */
RL_API rl_status rl_report_set_seed(rl_report* report, uint64_t seed);
RL_API void rl_report_free(rl_report* report);

#ifdef __cplusplus
}
#endif

#endif /* RIESZLAB_H */
