/* zetalab C API: the supported shared-library surface.
 *
 * All functions that can fail return zl_status; on failure the context
 * keeps a human-readable message retrievable with zl_last_error. Handles
 * are opaque and owned by the caller through the matching _destroy call.
 */
#ifndef ZETALAB_H
#define ZETALAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32
#define ZETALAB_API __declspec(dllexport)
#else
#define ZETALAB_API __attribute__((visibility("default")))
#endif

#define ZETALAB_ABI_VERSION 1u

typedef enum zl_status {
  ZL_OK = 0,
  ZL_ERR_INVALID_ARGUMENT = 1,
  ZL_ERR_RUNTIME = 2,
  ZL_ERR_IO = 3,
  ZL_ERR_BAD_HANDLE = 4
} zl_status;

typedef struct zl_context zl_context;
typedef struct zl_zero_table zl_zero_table;
typedef struct zl_arith_tables zl_arith_tables;

ZETALAB_API uint32_t zl_abi_version(void);

ZETALAB_API zl_context* zl_context_create(void);
ZETALAB_API void zl_context_destroy(zl_context* ctx);
ZETALAB_API const char* zl_last_error(const zl_context* ctx);

/* ---- zero engine ------------------------------------------------------- */

ZETALAB_API zl_status zl_hardy_z(zl_context* ctx, double t, double* out);
ZETALAB_API zl_status zl_hardy_z_derivative(zl_context* ctx, double t,
                                            double* out);
ZETALAB_API zl_status zl_rs_theta(zl_context* ctx, double t, double* out);

ZETALAB_API zl_status zl_find_zeros(zl_context* ctx, double t_min,
                                    double t_max, zl_zero_table** out);
ZETALAB_API zl_status zl_zero_table_import(zl_context* ctx, const char* path,
                                           zl_zero_table** out);
ZETALAB_API zl_status zl_zero_table_export(zl_context* ctx,
                                           const zl_zero_table* table,
                                           const char* path);
ZETALAB_API void zl_zero_table_destroy(zl_zero_table* table);
ZETALAB_API zl_status zl_zero_table_size(zl_context* ctx,
                                         const zl_zero_table* table,
                                         size_t* out);
ZETALAB_API zl_status zl_zero_table_entry(zl_context* ctx,
                                          const zl_zero_table* table,
                                          size_t index, double* ordinate,
                                          int* multiplicity);
ZETALAB_API zl_status zl_zero_table_range(zl_context* ctx,
                                          const zl_zero_table* table,
                                          double* t_min, double* t_max);
ZETALAB_API zl_status zl_zero_table_uncertified(zl_context* ctx,
                                                const zl_zero_table* table,
                                                size_t* count);
ZETALAB_API zl_status zl_count_zeros(zl_context* ctx,
                                     const zl_zero_table* table, double big_t,
                                     long long* big_n, double* smooth_main,
                                     double* s_of_t);

/* ---- arithmetic -------------------------------------------------------- */

ZETALAB_API zl_status zl_arith_tables_create(zl_context* ctx, uint32_t limit,
                                             zl_arith_tables** out);
ZETALAB_API void zl_arith_tables_destroy(zl_arith_tables* tables);
ZETALAB_API zl_status zl_mollifier_value(zl_context* ctx,
                                         const zl_arith_tables* tables,
                                         double s_re, double s_im,
                                         double big_t, double theta,
                                         const double* p_coeffs, size_t n_p,
                                         double* out_re, double* out_im);

/* ---- spacing statistics ------------------------------------------------ */

ZETALAB_API zl_status zl_gap_statistics(zl_context* ctx,
                                        const zl_zero_table* table,
                                        double big_t, int use_log_gamma,
                                        double* min_normalized_gap,
                                        double* min_distinct_gap);
/* Fills up to capacity normalized consecutive gaps; n_total reports how
 * many exist. */
ZETALAB_API zl_status zl_normalized_gaps(zl_context* ctx,
                                         const zl_zero_table* table,
                                         double big_t, int use_log_gamma,
                                         double* buffer, size_t capacity,
                                         size_t* n_total);
ZETALAB_API zl_status zl_distribution_d(zl_context* ctx,
                                        const zl_zero_table* table,
                                        double big_t, double lambda,
                                        int distinct, double* out);
ZETALAB_API zl_status zl_form_factor_grid(zl_context* ctx,
                                          const zl_zero_table* table,
                                          double big_t, const double* alphas,
                                          size_t n_alphas, double* values);
ZETALAB_API zl_status zl_convolution_check(zl_context* ctx,
                                           const zl_zero_table* table,
                                           double big_t, double lambda,
                                           double grid_step, double* lhs,
                                           double* rhs,
                                           double* relative_residual);
ZETALAB_API zl_status zl_n_of_t(zl_context* ctx, const zl_zero_table* table,
                                double big_t, double t, double lambda,
                                long long* count);
ZETALAB_API zl_status zl_moment_sum(zl_context* ctx,
                                    const zl_zero_table* table, double big_t,
                                    int k, double* value, double* normalized);
ZETALAB_API zl_status zl_moment_integral(zl_context* ctx,
                                         const zl_zero_table* table,
                                         double big_t, int k, double* value,
                                         double* normalized);
ZETALAB_API zl_status zl_prop1_balance(zl_context* ctx,
                                       const zl_zero_table* table,
                                       double big_t, double lambda,
                                       double* multiplicity_term,
                                       double* close_pair_term, double* rhs);

/* ---- admissible functions ---------------------------------------------- */

ZETALAB_API zl_status zl_selberg_r(zl_context* ctx, double x, double* out);
ZETALAB_API zl_status zl_selberg_r_hat(zl_context* ctx, double t, double* out);
ZETALAB_API zl_status zl_c_selberg_closed_form(zl_context* ctx, double lambda,
                                               double* out);
ZETALAB_API zl_status zl_c_functional_selberg(zl_context* ctx, double lambda,
                                              double* out);
ZETALAB_API zl_status zl_solve_threshold(zl_context* ctx, double target,
                                         double bracket_lo, double bracket_hi,
                                         double* lambda_root,
                                         double* c_at_root);
ZETALAB_API zl_status zl_validate_admissible_selberg(zl_context* ctx,
                                                     double lambda,
                                                     double grid_step,
                                                     double range, int* pass,
                                                     char* detail,
                                                     size_t detail_capacity);

/* ---- explicit formula --------------------------------------------------- */

ZETALAB_API double zl_lemma1_default_a(void);
ZETALAB_API zl_status zl_lemma1_eval(zl_context* ctx,
                                     const zl_zero_table* table,
                                     const zl_arith_tables* tables, double tau,
                                     double x, double calib_a,
                                     double* zero_side, double* prime_side,
                                     double* residual, double* budget,
                                     double* tail_halfwidth);

/* ---- mean-value asymptotics -------------------------------------------- */

ZETALAB_API zl_status zl_sigma_coefficient(zl_context* ctx, double theta,
                                           double kappa, double eta,
                                           const double* p_coeffs, size_t n_p,
                                           double* c_sigma, double* imag_part,
                                           double* method_agreement);
ZETALAB_API zl_status zl_scan_kappa(zl_context* ctx, double theta, double eta,
                                    const double* p_coeffs, size_t n_p,
                                    const double* kappa_grid, size_t n_grid,
                                    double* c_values, int* found_negative,
                                    double* kappa_min);
ZETALAB_API zl_status zl_optimize_parameters(
    zl_context* ctx, int p_degree, double theta_lo, double theta_hi,
    double eta_lo, double eta_hi, double* theta, double* eta, double* p_coeffs,
    size_t p_capacity, size_t* n_p, double* kappa_min, double* c_sigma);

/* ---- empirical lab ------------------------------------------------------ */

ZETALAB_API zl_status zl_sigma_empirical(zl_context* ctx,
                                         const zl_zero_table* table,
                                         const zl_arith_tables* tables,
                                         double theta, double kappa,
                                         double eta, const double* p_coeffs,
                                         size_t n_p, double big_t,
                                         double* raw_sum, double* normalized,
                                         long long* zero_count);
ZETALAB_API zl_status zl_count_negative_products(zl_context* ctx,
                                                 const zl_zero_table* table,
                                                 double kappa, double big_t,
                                                 long long* count,
                                                 long long* verified,
                                                 long long* total);
/* coeffs_re/coeffs_im hold a(1..x); coeffs_im may be NULL for real input. */
ZETALAB_API zl_status zl_landau_gonek(zl_context* ctx,
                                      const zl_zero_table* table,
                                      const zl_arith_tables* tables,
                                      const double* coeffs_re,
                                      const double* coeffs_im, size_t x,
                                      double big_t, double* lhs, double* rhs,
                                      double* relative_error);

#ifdef __cplusplus
}
#endif

#endif /* ZETALAB_H */
