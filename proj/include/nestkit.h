/*
 * nestkit C API: fractal-nest construction, closed-form dimension and
 * content formulas, box-counting estimation and figure rendering.
 *
 * Every function returns NK_OK on success or an error code; a thread-local
 * message with the failure detail is available through nk_last_error().
 * Buffers handed out through char** are owned by the caller and must be
 * released with nk_buffer_free().
 */
#ifndef NESTKIT_H
#define NESTKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  NK_OK = 0,
  NK_EINVAL = 1,  /* validation failure */
  NK_ERUNTIME = 2 /* resource or internal failure */
};

typedef enum {
  NK_BASE_SINGLETON = 0,
  NK_BASE_EALPHA = 1,
  NK_BASE_DBETA = 2,
  NK_BASE_CANTOR = 3,
  NK_BASE_CIRCLE = 4,
  NK_BASE_CUBEFACE = 5
} nk_base_kind;

typedef enum { NK_CENTRE = 0, NK_OUTER = 1 } nk_nest_kind;
typedef enum { NK_COUNTER_PRIMITIVE = 0, NK_COUNTER_GRID = 1 } nk_counter;
typedef enum { NK_FORMAT_SVG = 0, NK_FORMAT_EPS = 1 } nk_format;

typedef enum {
  NK_REGIME_TAIL = 0,
  NK_REGIME_CORE = 1,
  NK_REGIME_CRITICAL = 2,
  NK_REGIME_OUTER = 3
} nk_regime;

/* Base subset of the unit interval/circle; only the fields of the selected
 * kind are read. */
typedef struct {
  nk_base_kind kind;
  double alpha;  /* NK_BASE_EALPHA */
  double beta;   /* NK_BASE_DBETA */
  int copies;    /* NK_BASE_CANTOR: N >= 2 */
  double ratio;  /* NK_BASE_CANTOR: r in (0, 1/N) */
  int face_dim;  /* NK_BASE_CUBEFACE */
} nk_base;

typedef struct {
  nk_nest_kind kind;
  double alpha;
  nk_base base;
} nk_nest;

typedef struct nk_scene nk_scene; /* opaque primitive list */

const char* nk_last_error(void);
void nk_buffer_free(char* buffer);

/* --- base sets and closed forms --- */

int nk_base_dimension(const nk_base* base, double* out_delta);
int nk_gamma_coeff(double x, double* out);
int nk_e_alpha_content(double alpha, double* out);
int nk_cantor_contents(int copies, double ratio, double* out_upper,
                       double* out_lower);
int nk_cube_sausage_volume(int m, int n, double eps, double* out);

/* --- nest geometry --- */

int nk_split_indices(double alpha, double eps, long long* out_tail,
                     long long* out_core);
int nk_scene_generate(const nk_nest* nest, double eps, nk_scene** out_scene);
void nk_scene_free(nk_scene* scene);
long long nk_scene_size(const nk_scene* scene);
int nk_primitive_count(const nk_scene* scene, long long* out);
int nk_grid_count(const nk_scene* scene, double eps, long long* out);

/* --- dimension formulas --- */

int nk_nest_dimension(nk_nest_kind kind, double alpha, double delta,
                      double* out_value, int* out_nondegenerate,
                      nk_regime* out_regime);
int nk_bifractal_dimension(double alpha, double beta, double* out);
int nk_cantor_nest_dimension(nk_nest_kind kind, double alpha, int copies,
                             double ratio, double* out);
int nk_hypersphere_nest_dimension(int n, double alpha, nk_nest_kind kind,
                                  double* out);

typedef struct {
  double target_dim;
  double alpha;
  double delta;
  double beta;
  double ratio;
  int copies;
} nk_params;

int nk_solve_parameters(double target_dim, double alpha, int copies,
                        nk_params* out);
int nk_centered_alpha(double target_dim, double* out);
int nk_normalized_content_ratio(double sausage_volume, int n, double delta,
                                double eps, double* out);

/* --- estimation --- */

int nk_epsilon_schedule(double eps_hi, double eps_lo, int samples,
                        double* out /* length samples */);
int nk_sausage_measure_1d(const double* points, long long n_points,
                          const double* interval_bounds /* lo,hi pairs */,
                          long long n_intervals, double eps, double* out);
int nk_regression_dimension(const double* eps, const long long* counts,
                            int rows, double* out_slope, double* out_intercept,
                            double* out_residuals /* length rows, optional */);

/* --- pipelines backing the CLI --- */

/* eps <= 0 selects the default figure resolution; size_px <= 0 selects 600 */
int nk_render(const nk_nest* nest, double eps, int size_px, nk_format format,
              char** out_bytes, size_t* out_len);

/* theory <= 0 derives the reference dimension from the nest itself */
int nk_estimate(const nk_nest* nest, double eps_hi, double eps_lo,
                int samples, nk_counter counter, double theory,
                char** out_csv, char** out_summary);

int nk_sweep_fixed(double target_dim, double alpha_lo, double alpha_hi,
                   int grid_points, int copies, double eps_hi, double eps_lo,
                   int samples, int force, char** out_csv,
                   char** out_warnings);
int nk_sweep_varying(double dim_lo, double dim_hi, int grid_points, int copies,
                     double eps_hi, double eps_lo, int samples, char** out_csv,
                     char** out_warnings);

/* --- verification --- */

typedef void (*nk_report_fn)(const char* line, void* user);

/* Runs the verification suite, one pass/fail line per criterion.
 * Returns the number of failed criteria, or a negative error code. */
int nk_verify(nk_report_fn emit, void* user);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NESTKIT_H */
