#include "zetalab/explicit_formula.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zetalab/numerics.hpp"

namespace zetalab {

namespace {

double fejer_kernel(double u, double log_x) {
  const double z = 0.5 * u * log_x;
  if (std::abs(z) < 1e-8) return 1.0;
  const double s = std::sin(z) / z;
  return s * s;
}

// int_W^infty log((u+c)/2pi)/u^2 du for W > 0, W + c > 0.
double density_tail_integral(double w, double c) {
  if (c == 0.0) return (1.0 + std::log(w / kTwoPi)) / w;
  return std::log((w + c) / kTwoPi) / w + std::log1p(c / w) / c;
}

}  // namespace

double lemma1_budget(double tau, double x, double calib_a) {
  const double tl = tau * std::log(x);
  return calib_a * (1.0 / tl + std::sqrt(x) / (tl * tl));
}

FejerZeroSum fejer_zero_sum(double tau, double x, const ZeroTable& table) {
  if (!(tau >= 2.0)) throw std::invalid_argument("fejer_zero_sum: tau >= 2");
  if (!(x >= 2.0)) throw std::invalid_argument("fejer_zero_sum: x >= 2");
  const double log_x = std::log(x);
  const double min_window = 50.0 * kTwoPi / log_x;
  if (!table.has_height_range() || table.t_max() < tau + min_window) {
    std::ostringstream os;
    os << "fejer_zero_sum: table must cover ordinates up to "
       << tau + min_window << " (tau + 50 average windows)";
    throw std::invalid_argument(os.str());
  }
  if (table.t_min() > 14.0) {
    throw std::invalid_argument(
        "fejer_zero_sum: table must start below the first ordinate");
  }

  double sum = 0.0;
  for (const CriticalZero& z : table.zeros()) {
    // The sum runs over all zeros; ordinates come in +-gamma pairs.
    sum += (double)z.multiplicity *
           (fejer_kernel(z.ordinate - tau, log_x) +
            fejer_kernel(z.ordinate + tau, log_x));
  }

  // Zeros above the table: kernel <= 4/((gamma -+ tau)^2 log^2 x) with mean
  // sin^2 = 1/2, against density log(t/2pi)/2pi. The midpoint estimate is
  // added to the sum; sin^2 in [0, 2 * mean] bounds the interval.
  const double top = table.t_max();
  const double tail_mid =
      (density_tail_integral(top - tau, tau) +
       density_tail_integral(top + tau, -tau)) /
      (kPi * log_x * log_x);
  return {sum + tail_mid, tail_mid};
}

double lemma1_rhs(double tau, double x, const ArithmeticTables& tables) {
  return std::log(tau / kTwoPi) / std::log(x) +
         -prime_sum_lemma1(tau, x, tables);
}

std::vector<Lemma1Evaluation> lemma1_residual_sweep(
    const std::vector<double>& tau_list, const std::vector<double>& x_list,
    const ZeroTable& table, const ArithmeticTables& tables, double calib_a) {
  std::vector<Lemma1Evaluation> out;
  out.reserve(tau_list.size() * x_list.size());
  for (double tau : tau_list) {
    for (double x : x_list) {
      const FejerZeroSum zs = fejer_zero_sum(tau, x, table);
      Lemma1Evaluation e;
      e.tau = tau;
      e.x = x;
      e.zero_side = zs.value;
      e.tail_halfwidth = zs.tail_halfwidth;
      e.prime_side = lemma1_rhs(tau, x, tables);
      e.residual = e.zero_side - e.prime_side;
      e.budget = lemma1_budget(tau, x, calib_a);
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace zetalab
