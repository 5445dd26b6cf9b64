#ifndef SEMILINEAR_SEMILINEAR_H
#define SEMILINEAR_SEMILINEAR_H

/* C interface of the semilinear verification library.
 *
 * All handles are opaque and owned by the caller; release them with the
 * matching *_destroy function. Every function returning sl_status records a
 * message for the calling thread, readable with sl_last_error(). */

#include <stddef.h>

#if defined(_WIN32)
#define SL_API __declspec(dllexport)
#else
#define SL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sl_status {
  SL_OK = 0,
  SL_INVALID_ARGUMENT = 1,
  SL_NUMERIC_ERROR = 2,
  SL_VERIFICATION_FAILED = 3,
  SL_SOLVER_ERROR = 4,
  SL_IO_ERROR = 5,
  SL_INTERNAL_ERROR = 6
} sl_status;

typedef enum sl_verdict {
  SL_VERDICT_PROVED = 0,
  SL_VERDICT_PROVED_ON_SUBINTERVAL = 1,
  SL_VERDICT_FAILED = 2
} sl_verdict;

typedef struct sl_params sl_params;
typedef struct sl_certificate sl_certificate;
typedef struct sl_expansion sl_expansion;

/* Closed interval [lo, hi]. */
typedef struct sl_interval {
  double lo;
  double hi;
} sl_interval;

typedef struct sl_constants {
  sl_interval pi;
  sl_interval lambda1;
  sl_interval lambda2;
  sl_interval gamma; /* for the sigma passed to sl_constants */
  sl_interval C4;
  sl_interval C6;
  sl_interval C2;
} sl_constants;

/* Verified facts about one approximate solution at one lambda. */
typedef struct sl_check_report {
  int positive;           /* positivity on the square verified */
  sl_interval center;     /* omega(1/2, 1/2) */
  sl_interval delta_hat;  /* L2 defect */
  sl_interval delta;      /* H^-1 defect */
  sl_interval kappa1;
  sl_interval kappa2;
  sl_interval K;
} sl_check_report;

/* Receives progress messages; level 0 is informational. */
typedef void (*sl_log_fn)(int level, const char* message, void* user);

SL_API const char* sl_version(void);
SL_API const char* sl_status_string(sl_status status);
/* Message of the last failed call on this thread; "" after success. */
SL_API const char* sl_last_error(void);
/* Process-wide; pass NULL to disable. */
SL_API void sl_set_log_callback(sl_log_fn fn, void* user);

/* Parameters, initialized to the defaults of the full computation. */
SL_API sl_status sl_params_create(sl_params** out);
SL_API void sl_params_destroy(sl_params* params);
/* Keys: sigma, lambda_bar, grid_step, N, alpha0, newton_tol, max_iters,
 * basis_max, m_max, base_count, min_step, ritz_margin, workers, resume,
 * out_dir, fault. */
SL_API sl_status sl_params_set(sl_params* params, const char* key, const char* value);
SL_API sl_status sl_params_load_file(sl_params* params, const char* path);

/* Runs the whole verification. A FAILED verdict still yields SL_OK and a
 * certificate; errors are reserved for invalid input and internal faults. */
SL_API sl_status sl_run(const sl_params* params, sl_certificate** out);
SL_API void sl_certificate_destroy(sl_certificate* cert);
SL_API sl_status sl_certificate_verdict(const sl_certificate* cert, sl_verdict* out);
/* Newly allocated strings; release with sl_string_free. */
SL_API sl_status sl_certificate_json(const sl_certificate* cert, char** out);
SL_API sl_status sl_certificate_summary(const sl_certificate* cert, char** out);
/* formats: comma-separated subset of "json,csv,text". */
SL_API sl_status sl_certificate_emit(const sl_certificate* cert, const char* out_dir, const char* formats);
SL_API void sl_string_free(char* s);

SL_API sl_status sl_constants_get(double sigma, sl_constants* out);

/* Continuation from lambda_bar of params down to lambda. */
SL_API sl_status sl_solve(const sl_params* params, double lambda, sl_expansion** out);
SL_API sl_status sl_expansion_read_csv(const char* path, sl_expansion** out);
SL_API sl_status sl_expansion_write_csv(const sl_expansion* e, const char* path);
SL_API void sl_expansion_destroy(sl_expansion* e);
SL_API int sl_expansion_max_index(const sl_expansion* e);
/* Coefficient of sin(i pi x) sin(j pi y); 0 for even or out-of-range indices. */
SL_API double sl_expansion_coeff(const sl_expansion* e, int i, int j);

/* Positivity, defect and eigenvalue enclosures of e at lambda (decimal
 * string, e.g. "18.5") with the sigma and eigen settings of params. */
SL_API sl_status sl_expansion_check(const sl_params* params, const sl_expansion* e, const char* lambda,
                                    sl_check_report* out);

#ifdef __cplusplus
}
#endif

#endif
