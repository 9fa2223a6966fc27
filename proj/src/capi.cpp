#include "zetalab.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetalab/admissible.hpp"
#include "zetalab/arithmetic.hpp"
#include "zetalab/cgg.hpp"
#include "zetalab/empirical.hpp"
#include "zetalab/explicit_formula.hpp"
#include "zetalab/spacing.hpp"
#include "zetalab/zeta.hpp"

struct zl_context {
  std::string last_error;
};

struct zl_zero_table {
  zetalab::ZeroTable table;
};

struct zl_arith_tables {
  zetalab::ArithmeticTables tables;
};

namespace {

zl_status fail(zl_context* ctx, zl_status code, const char* what) {
  if (ctx != nullptr) ctx->last_error = what;
  return code;
}

template <typename Fn>
zl_status guarded(zl_context* ctx, Fn&& fn) {
  if (ctx == nullptr) return ZL_ERR_BAD_HANDLE;
  try {
    fn();
    ctx->last_error.clear();
    return ZL_OK;
  } catch (const std::invalid_argument& e) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(ctx, ZL_ERR_IO, e.what());
  } catch (const std::exception& e) {
    const std::string what = e.what();
    if (what.find("cannot open") != std::string::npos ||
        what.find("cannot write") != std::string::npos) {
      return fail(ctx, ZL_ERR_IO, e.what());
    }
    return fail(ctx, ZL_ERR_RUNTIME, e.what());
  }
}

zetalab::Polynomial make_poly(const double* coeffs, size_t n) {
  zetalab::Polynomial p;
  if (coeffs != nullptr) p.coeffs.assign(coeffs, coeffs + n);
  return p;
}

bool bad(const void* p) { return p == nullptr; }

}  // namespace

extern "C" {

uint32_t zl_abi_version(void) { return ZETALAB_ABI_VERSION; }

zl_context* zl_context_create(void) { return new (std::nothrow) zl_context; }

void zl_context_destroy(zl_context* ctx) { delete ctx; }

const char* zl_last_error(const zl_context* ctx) {
  return ctx == nullptr ? "" : ctx->last_error.c_str();
}

/* ---- zero engine ------------------------------------------------------- */

zl_status zl_hardy_z(zl_context* ctx, double t, double* out) {
  if (bad(out)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] { *out = zetalab::hardy_z(t); });
}

zl_status zl_hardy_z_derivative(zl_context* ctx, double t, double* out) {
  if (bad(out)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] { *out = zetalab::hardy_z_derivative(t); });
}

zl_status zl_rs_theta(zl_context* ctx, double t, double* out) {
  if (bad(out)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] { *out = zetalab::rs_theta(t); });
}

zl_status zl_find_zeros(zl_context* ctx, double t_min, double t_max,
                        zl_zero_table** out) {
  if (bad(out)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] {
    *out = new zl_zero_table{zetalab::find_zeros(t_min, t_max)};
  });
}

zl_status zl_zero_table_import(zl_context* ctx, const char* path,
                               zl_zero_table** out) {
  if (bad(out) || bad(path)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded(ctx, [&] {
    *out = new zl_zero_table{zetalab::import_zero_table(path)};
  });
}

zl_status zl_zero_table_export(zl_context* ctx, const zl_zero_table* table,
                               const char* path) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(path)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null path");
  return guarded(ctx, [&] { zetalab::export_zero_table(table->table, path); });
}

void zl_zero_table_destroy(zl_zero_table* table) { delete table; }

zl_status zl_zero_table_size(zl_context* ctx, const zl_zero_table* table,
                             size_t* out) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(out)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] { *out = table->table.size(); });
}

zl_status zl_zero_table_entry(zl_context* ctx, const zl_zero_table* table,
                              size_t index, double* ordinate,
                              int* multiplicity) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(ordinate) || bad(multiplicity)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    if (index >= table->table.size()) {
      throw std::invalid_argument("zero table index out of range");
    }
    *ordinate = table->table.zeros()[index].ordinate;
    *multiplicity = table->table.zeros()[index].multiplicity;
  });
}

zl_status zl_zero_table_range(zl_context* ctx, const zl_zero_table* table,
                              double* t_min, double* t_max) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(t_min) || bad(t_max)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    *t_min = table->table.t_min();
    *t_max = table->table.t_max();
  });
}

zl_status zl_zero_table_uncertified(zl_context* ctx,
                                    const zl_zero_table* table,
                                    size_t* count) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(count)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx,
                 [&] { *count = table->table.uncertified_windows().size(); });
}

zl_status zl_count_zeros(zl_context* ctx, const zl_zero_table* table,
                         double big_t, long long* big_n, double* smooth_main,
                         double* s_of_t) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(big_n) || bad(smooth_main) || bad(s_of_t)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::CountingFunctionValue v =
        zetalab::count_zeros(big_t, table->table);
    *big_n = v.big_n;
    *smooth_main = v.smooth_main;
    *s_of_t = v.s_of_t;
  });
}

/* ---- arithmetic -------------------------------------------------------- */

zl_status zl_arith_tables_create(zl_context* ctx, uint32_t limit,
                                 zl_arith_tables** out) {
  if (bad(out)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] {
    *out = new zl_arith_tables{zetalab::ArithmeticTables(limit)};
  });
}

void zl_arith_tables_destroy(zl_arith_tables* tables) { delete tables; }

zl_status zl_mollifier_value(zl_context* ctx, const zl_arith_tables* tables,
                             double s_re, double s_im, double big_t,
                             double theta, const double* p_coeffs, size_t n_p,
                             double* out_re, double* out_im) {
  if (bad(tables)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null tables");
  if (bad(out_re) || bad(out_im)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::Mollifier m(big_t, theta, make_poly(p_coeffs, n_p));
    const zetalab::Complex v = zetalab::mollifier_value(
        zetalab::Complex(s_re, s_im), m, tables->tables);
    *out_re = v.real();
    *out_im = v.imag();
  });
}

/* ---- spacing statistics ------------------------------------------------ */

zl_status zl_gap_statistics(zl_context* ctx, const zl_zero_table* table,
                            double big_t, int use_log_gamma,
                            double* min_normalized_gap,
                            double* min_distinct_gap) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(min_normalized_gap) || bad(min_distinct_gap)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::GapStatistics g =
        zetalab::gap_statistics(table->table, big_t, use_log_gamma != 0);
    *min_normalized_gap = g.min_normalized_gap;
    *min_distinct_gap = g.min_distinct_gap;
  });
}

zl_status zl_normalized_gaps(zl_context* ctx, const zl_zero_table* table,
                             double big_t, int use_log_gamma, double* buffer,
                             size_t capacity, size_t* n_total) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(n_total)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] {
    const zetalab::GapStatistics g =
        zetalab::gap_statistics(table->table, big_t, use_log_gamma != 0);
    *n_total = g.normalized_gaps.size();
    if (buffer != nullptr) {
      const size_t n = std::min(capacity, g.normalized_gaps.size());
      std::memcpy(buffer, g.normalized_gaps.data(), n * sizeof(double));
    }
  });
}

zl_status zl_distribution_d(zl_context* ctx, const zl_zero_table* table,
                            double big_t, double lambda, int distinct,
                            double* out) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(out)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] {
    *out = zetalab::distribution_d(lambda, big_t, table->table, distinct != 0);
  });
}

zl_status zl_form_factor_grid(zl_context* ctx, const zl_zero_table* table,
                              double big_t, const double* alphas,
                              size_t n_alphas, double* values) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(alphas) || bad(values)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded(ctx, [&] {
    const std::vector<double> grid(alphas, alphas + n_alphas);
    const zetalab::FormFactorGrid g =
        zetalab::form_factor_grid(grid, big_t, table->table);
    std::memcpy(values, g.values.data(), n_alphas * sizeof(double));
  });
}

zl_status zl_convolution_check(zl_context* ctx, const zl_zero_table* table,
                               double big_t, double lambda, double grid_step,
                               double* lhs, double* rhs,
                               double* relative_residual) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(lhs) || bad(rhs) || bad(relative_residual)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::ConvolutionCheck c = zetalab::convolution_check(
        zetalab::selberg_scaled(lambda), big_t, table->table, grid_step);
    *lhs = c.lhs;
    *rhs = c.rhs;
    *relative_residual = c.relative_residual;
  });
}

zl_status zl_n_of_t(zl_context* ctx, const zl_zero_table* table, double big_t,
                    double t, double lambda, long long* count) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(count)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] {
    *count = zetalab::n_of_t(t, lambda, big_t, table->table).count;
  });
}

zl_status zl_moment_sum(zl_context* ctx, const zl_zero_table* table,
                        double big_t, int k, double* value,
                        double* normalized) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(value) || bad(normalized)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::MomentResult m = zetalab::moment_sum(k, big_t, table->table);
    *value = m.value;
    *normalized = m.normalized;
  });
}

zl_status zl_moment_integral(zl_context* ctx, const zl_zero_table* table,
                             double big_t, int k, double* value,
                             double* normalized) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(value) || bad(normalized)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::MomentResult m =
        zetalab::moment_integral(k, big_t, table->table);
    *value = m.value;
    *normalized = m.normalized;
  });
}

zl_status zl_prop1_balance(zl_context* ctx, const zl_zero_table* table,
                           double big_t, double lambda,
                           double* multiplicity_term, double* close_pair_term,
                           double* rhs) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(multiplicity_term) || bad(close_pair_term) || bad(rhs)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::Prop1Balance b = zetalab::proposition1_balance(
        lambda, zetalab::selberg_scaled(lambda), big_t, table->table);
    *multiplicity_term = b.multiplicity_term;
    *close_pair_term = b.close_pair_term;
    *rhs = b.rhs;
  });
}

/* ---- admissible functions ---------------------------------------------- */

zl_status zl_selberg_r(zl_context* ctx, double x, double* out) {
  if (bad(out)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] { *out = zetalab::selberg_r(x); });
}

zl_status zl_selberg_r_hat(zl_context* ctx, double t, double* out) {
  if (bad(out)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] { *out = zetalab::selberg_r_hat(t); });
}

zl_status zl_c_selberg_closed_form(zl_context* ctx, double lambda,
                                   double* out) {
  if (bad(out)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] { *out = zetalab::c_selberg_closed_form(lambda); });
}

zl_status zl_c_functional_selberg(zl_context* ctx, double lambda,
                                  double* out) {
  if (bad(out)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] {
    *out = zetalab::c_functional(lambda, zetalab::selberg_scaled(lambda));
  });
}

zl_status zl_solve_threshold(zl_context* ctx, double target, double bracket_lo,
                             double bracket_hi, double* lambda_root,
                             double* c_at_root) {
  if (bad(lambda_root) || bad(c_at_root)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::ThresholdResult r =
        zetalab::solve_threshold({target, 1.3208}, bracket_lo, bracket_hi);
    *lambda_root = r.lambda_root;
    *c_at_root = r.c_at_root;
  });
}

zl_status zl_validate_admissible_selberg(zl_context* ctx, double lambda,
                                         double grid_step, double range,
                                         int* pass, char* detail,
                                         size_t detail_capacity) {
  if (bad(pass)) return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  return guarded(ctx, [&] {
    const zetalab::AdmissibilityReport rep = zetalab::validate_admissible(
        zetalab::selberg_scaled(lambda), grid_step, range);
    *pass = rep.pass ? 1 : 0;
    if (detail != nullptr && detail_capacity > 0) {
      std::snprintf(detail, detail_capacity, "%s", rep.detail.c_str());
    }
  });
}

/* ---- explicit formula --------------------------------------------------- */

double zl_lemma1_default_a(void) { return zetalab::kLemma1CalibratedA; }

zl_status zl_lemma1_eval(zl_context* ctx, const zl_zero_table* table,
                         const zl_arith_tables* tables, double tau, double x,
                         double calib_a, double* zero_side, double* prime_side,
                         double* residual, double* budget,
                         double* tail_halfwidth) {
  if (bad(table) || bad(tables)) {
    return fail(ctx, ZL_ERR_BAD_HANDLE, "null handle");
  }
  if (bad(zero_side) || bad(prime_side) || bad(residual) || bad(budget) ||
      bad(tail_halfwidth)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::FejerZeroSum z =
        zetalab::fejer_zero_sum(tau, x, table->table);
    *zero_side = z.value;
    *tail_halfwidth = z.tail_halfwidth;
    *prime_side = zetalab::lemma1_rhs(tau, x, tables->tables);
    *residual = *zero_side - *prime_side;
    *budget = zetalab::lemma1_budget(tau, x, calib_a);
  });
}

/* ---- mean-value asymptotics -------------------------------------------- */

zl_status zl_sigma_coefficient(zl_context* ctx, double theta, double kappa,
                               double eta, const double* p_coeffs, size_t n_p,
                               double* c_sigma, double* imag_part,
                               double* method_agreement) {
  if (bad(c_sigma) || bad(imag_part) || bad(method_agreement)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::SigmaCoefficient c = zetalab::sigma_coefficient(
        {theta, kappa, eta, make_poly(p_coeffs, n_p)});
    *c_sigma = c.c_sigma;
    *imag_part = c.imag_part;
    *method_agreement = c.method_agreement;
  });
}

zl_status zl_scan_kappa(zl_context* ctx, double theta, double eta,
                        const double* p_coeffs, size_t n_p,
                        const double* kappa_grid, size_t n_grid,
                        double* c_values, int* found_negative,
                        double* kappa_min) {
  if (bad(kappa_grid) || bad(c_values) || bad(found_negative) ||
      bad(kappa_min)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded(ctx, [&] {
    const std::vector<double> grid(kappa_grid, kappa_grid + n_grid);
    const zetalab::KappaScanResult r =
        zetalab::scan_kappa(theta, eta, make_poly(p_coeffs, n_p), grid);
    for (size_t i = 0; i < r.rows.size(); ++i) {
      c_values[i] = r.rows[i].c_sigma;
    }
    *found_negative = r.found_negative ? 1 : 0;
    *kappa_min = r.kappa_min;
  });
}

zl_status zl_optimize_parameters(zl_context* ctx, int p_degree,
                                 double theta_lo, double theta_hi,
                                 double eta_lo, double eta_hi, double* theta,
                                 double* eta, double* p_coeffs,
                                 size_t p_capacity, size_t* n_p,
                                 double* kappa_min, double* c_sigma) {
  if (bad(theta) || bad(eta) || bad(p_coeffs) || bad(n_p) || bad(kappa_min) ||
      bad(c_sigma)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::OptimizeResult r = zetalab::optimize_parameters(
        p_degree, {theta_lo, theta_hi}, {eta_lo, eta_hi});
    *theta = r.best.theta;
    *eta = r.best.eta;
    *n_p = r.best.shape_p.coeffs.size();
    if (p_capacity < r.best.shape_p.coeffs.size()) {
      throw std::invalid_argument("optimize: coefficient buffer too small");
    }
    std::memcpy(p_coeffs, r.best.shape_p.coeffs.data(),
                r.best.shape_p.coeffs.size() * sizeof(double));
    *kappa_min = r.kappa_min;
    *c_sigma = r.c_sigma;
  });
}

/* ---- empirical lab ------------------------------------------------------ */

zl_status zl_sigma_empirical(zl_context* ctx, const zl_zero_table* table,
                             const zl_arith_tables* tables, double theta,
                             double kappa, double eta, const double* p_coeffs,
                             size_t n_p, double big_t, double* raw_sum,
                             double* normalized, long long* zero_count) {
  if (bad(table) || bad(tables)) {
    return fail(ctx, ZL_ERR_BAD_HANDLE, "null handle");
  }
  if (bad(raw_sum) || bad(normalized) || bad(zero_count)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::EmpiricalSigmaResult r = zetalab::sigma_empirical(
        {theta, kappa, eta, make_poly(p_coeffs, n_p)}, big_t, table->table,
        tables->tables);
    *raw_sum = r.raw_sum;
    *normalized = r.normalized;
    *zero_count = r.zero_count_used;
  });
}

zl_status zl_count_negative_products(zl_context* ctx,
                                     const zl_zero_table* table, double kappa,
                                     double big_t, long long* count,
                                     long long* verified, long long* total) {
  if (bad(table)) return fail(ctx, ZL_ERR_BAD_HANDLE, "null table");
  if (bad(count) || bad(verified) || bad(total)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null output");
  }
  return guarded(ctx, [&] {
    const zetalab::NegativeProductCount c =
        zetalab::count_negative_products(kappa, big_t, table->table);
    *count = c.count;
    *verified = c.verified;
    *total = c.total;
  });
}

zl_status zl_landau_gonek(zl_context* ctx, const zl_zero_table* table,
                          const zl_arith_tables* tables,
                          const double* coeffs_re, const double* coeffs_im,
                          size_t x, double big_t, double* lhs, double* rhs,
                          double* relative_error) {
  if (bad(table) || bad(tables)) {
    return fail(ctx, ZL_ERR_BAD_HANDLE, "null handle");
  }
  if (bad(coeffs_re) || bad(lhs) || bad(rhs) || bad(relative_error)) {
    return fail(ctx, ZL_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded(ctx, [&] {
    std::vector<zetalab::Complex> coeffs(x);
    for (size_t i = 0; i < x; ++i) {
      coeffs[i] = zetalab::Complex(coeffs_re[i],
                                   coeffs_im == nullptr ? 0.0 : coeffs_im[i]);
    }
    const zetalab::LandauGonekCheck c = zetalab::landau_gonek_check(
        coeffs, big_t, table->table, tables->tables);
    *lhs = c.lhs;
    *rhs = c.rhs;
    *relative_error = c.relative_error;
  });
}

}  // extern "C"
