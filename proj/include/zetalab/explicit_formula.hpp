#ifndef ZETALAB_EXPLICIT_FORMULA_HPP
#define ZETALAB_EXPLICIT_FORMULA_HPP

#include <vector>

#include "zetalab/arithmetic.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

/// Regression constant for the Lemma-1 error budget, frozen from a
/// calibration sweep (2x the worst observed |residual|/shape over
/// tau in {50,100,200,500}, x in {10,30,100} with zeros to 650).
inline constexpr double kLemma1CalibratedA = 2.0;

/// A * (1/(tau log x) + sqrt(x)/(tau log x)^2)
double lemma1_budget(double tau, double x, double calib_a);

struct FejerZeroSum {
  double value;           // windowed sum plus the smoothed tail midpoint
  double tail_halfwidth;  // certified half-width of the tail estimate
};

/// sum over zeros (positive and mirrored) of
/// (sin(.5 (gamma - tau) log x) / (.5 (gamma - tau) log x))^2.
/// Zeros beyond the table enter through a smoothed-density tail estimate
/// reported as an interval rather than dropped.
FejerZeroSum fejer_zero_sum(double tau, double x, const ZeroTable& table);

/// log(tau/2pi)/log x - prime_sum_lemma1(tau, x).
double lemma1_rhs(double tau, double x, const ArithmeticTables& tables);

struct Lemma1Evaluation {
  double tau;
  double x;
  double zero_side;
  double prime_side;
  double residual;        // zero_side - prime_side
  double tail_halfwidth;
  double budget;
};

std::vector<Lemma1Evaluation> lemma1_residual_sweep(
    const std::vector<double>& tau_list, const std::vector<double>& x_list,
    const ZeroTable& table, const ArithmeticTables& tables,
    double calib_a = kLemma1CalibratedA);

}  // namespace zetalab

#endif
