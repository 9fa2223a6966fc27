#ifndef ZETALAB_ADMISSIBLE_HPP
#define ZETALAB_ADMISSIBLE_HPP

#include <functional>
#include <string>

namespace zetalab {

/// An admissible test pair (r, r_hat) for the pair-correlation argument:
/// r even and continuous with r(0) = 1, r(u) <= 0 beyond support_lambda,
/// r_hat >= 0. Kept as plain callables so families other than the Selberg
/// minorant can be plugged in.
struct TestFunction {
  std::function<double(double)> value;      // r(u)
  std::function<double(double)> transform;  // r_hat(alpha)
  double support_lambda;
  double transform_support;  // half-width of supp(r_hat)
};

/// Selberg minorant R(x) = (sin pi x / pi x)^2 / (1 - x^2) with the
/// removable points x = 0, +-1 evaluated by series.
double selberg_r(double x);

/// R_hat(t) = 1 - |t| + sin(2 pi |t|)/(2 pi) on [-1, 1], zero outside.
double selberg_r_hat(double t);

/// r(u) = R(u/lambda), r_hat(alpha) = lambda R_hat(lambda alpha).
TestFunction selberg_scaled(double lambda);

/// c(lambda; r) = r_hat(0) - 1 + 2 int_0^1 alpha r_hat(alpha) d alpha,
/// adaptive quadrature with absolute error <= 1e-12.
double c_functional(double lambda, const TestFunction& r);

/// Closed form of c(lambda; r) for the scaled Selberg family.
double c_selberg_closed_form(double lambda);

struct ThresholdQuery {
  double target;                  // 0 for mu_D-type, n*-1 for mu_{D_d}-type
  double n_star_bound = 1.3208;   // configurable; 1.2826 is the remark preset
};

struct ThresholdResult {
  double lambda_root;
  double c_at_root;
  double target;
};

/// Bisection for c(lambda) = target on [lo, hi] over the Selberg family,
/// with sampled monotonicity of c on the bracket.
ThresholdResult solve_threshold(const ThresholdQuery& query, double lo,
                                double hi);

struct AdmissibilityReport {
  bool pass;
  double r0_error;                  // |r(0) - 1|
  double worst_sign_violation;      // max r(u) over sampled |u| > lambda
  double worst_transform_negative;  // max(-r_hat) over sampled support
  double worst_evenness;            // max |r(u) - r(-u)|
  std::string detail;
};

AdmissibilityReport validate_admissible(const TestFunction& r,
                                        double grid_step, double range);

}  // namespace zetalab

#endif
