#ifndef ZETALAB_NUMERICS_HPP
#define ZETALAB_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace zetalab {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Adaptive Simpson quadrature with an absolute error target.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_depth = 40);

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, cached per n.
const GaussLegendreRule& gauss_legendre(int n);

struct BisectionResult {
  double x;
  double f_at_x;
  int iterations;
};

/// Bisection for f(x) = target on [lo, hi]. Requires a sign change of
/// f - target. Stops when |f(x) - target| <= value_tol or the bracket
/// width drops below x_tol.
BisectionResult bisect_to_target(const std::function<double(double)>& f,
                                 double lo, double hi, double target,
                                 double value_tol, double x_tol);

/// Runs work(chunk) for chunk = 0..n_chunks-1 on a small thread pool.
/// Chunks are independent; callers reduce results in chunk order, which
/// keeps floating-point output identical run to run.
void parallel_chunks(std::size_t n_chunks,
                     const std::function<void(std::size_t)>& work);

}  // namespace zetalab

#endif
