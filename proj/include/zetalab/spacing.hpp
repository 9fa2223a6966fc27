#ifndef ZETALAB_SPACING_HPP
#define ZETALAB_SPACING_HPP

#include <vector>

#include "zetalab/admissible.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

/// Montgomery weight w(u) = 4/(4 + u^2).
inline double pair_weight(double u) { return 4.0 / (4.0 + u * u); }

struct GapStatistics {
  std::vector<double> normalized_gaps;  // consecutive, counting multiplicity
  double min_normalized_gap;            // proxy for mu
  double min_distinct_gap;              // proxy for mu_d
  double big_t;
};

/// Consecutive-spacing statistics over ordinates <= big_t. Gaps are
/// normalized by log T/(2 pi); the flag switches the normalization to
/// log gamma for the liminf-style proxies.
GapStatistics gap_statistics(const ZeroTable& table, double big_t,
                             bool normalize_by_log_gamma = false);

/// D(lambda, T) (distinct = false) or D_d(lambda, T) (distinct = true).
double distribution_d(double lambda, double big_t, const ZeroTable& table,
                      bool distinct);

/// Precomputed positive pair differences gamma_k - gamma_j (j < k) of the
/// multiplicity-expanded ordinates up to T; shared by the form factor and
/// the convolution identity.
class PairDifferences {
 public:
  PairDifferences(const ZeroTable& table, double big_t, double cutoff = 1e4);
  long long zero_count() const { return n_; }
  const std::vector<double>& diffs() const { return diffs_; }
  double big_t() const { return big_t_; }

 private:
  long long n_;
  double big_t_;
  std::vector<double> diffs_;
};

/// F(alpha, T) = N(T)^{-1} sum_{0<gamma,gamma'<=T} T^{i alpha (gamma-gamma')}
/// w(gamma - gamma'), evaluated as a cosine pair sum, which makes evenness
/// exact.
double form_factor(double alpha, const PairDifferences& pairs);
double form_factor(double alpha, double big_t, const ZeroTable& table);

/// The same quantity as an ordered complex double sum over pairs, so rounding
/// in the imaginary part is visible; the real part must match form_factor and
/// the imaginary part must stay below 1e-8.
struct FormFactorComplex {
  double re;
  double im;
};
FormFactorComplex form_factor_ordered(double alpha, double big_t,
                                      const ZeroTable& table);

struct FormFactorGrid {
  std::vector<double> alphas;
  std::vector<double> values;
  double big_t;
};
FormFactorGrid form_factor_grid(const std::vector<double>& alphas,
                                double big_t, const ZeroTable& table);

struct ConvolutionCheck {
  double lhs;
  double rhs;
  double relative_residual;
};

/// Both sides of the Fourier-inversion identity: the weighted pair sum of r
/// against N(T) times the integral of r_hat F over the transform support.
/// The right side integrates composite-Simpson over an F grid of the given
/// step; the residual measures that grid quadrature, not the identity.
ConvolutionCheck convolution_check(const TestFunction& r, double big_t,
                                   const ZeroTable& table,
                                   double grid_step = 0.005);

struct SpacingCount {
  double t;
  double lambda;
  long long count;
};

/// n(t, lambda) = N(t + 2 pi lambda/log T) - N(t), exact on the table.
SpacingCount n_of_t(double t, double lambda, double big_t,
                    const ZeroTable& table);

struct MomentResult {
  double value;
  double normalized;  // value/(T log T) for the sum, value/T for the integral
};

/// sum_{0<gamma<=T} n(gamma, k)^{2k}; requires the table to reach T + the
/// window length.
MomentResult moment_sum(int k, double big_t, const ZeroTable& table);

/// int_0^T n(t, k)^{2k} dt by event sweep over the piecewise-constant count.
MomentResult moment_integral(int k, double big_t, const ZeroTable& table);

struct Prop1Balance {
  double multiplicity_term;  // sum m(m-1) over distinct ordinates
  double close_pair_term;    // ordered pairs at positive distance <= window
  double rhs;                // c(lambda; r) N(T)
};

Prop1Balance proposition1_balance(double lambda, const TestFunction& r,
                                  double big_t, const ZeroTable& table);

}  // namespace zetalab

#endif
