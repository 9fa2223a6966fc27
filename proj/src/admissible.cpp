#include "zetalab/admissible.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zetalab/numerics.hpp"

namespace zetalab {

namespace {

// sin(pi x)/(pi x), series near 0.
double sinc_pi(double x) {
  const double z = kPi * x;
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0);
  }
  return std::sin(z) / z;
}

// (sin z - z cos z)/z^2, series near 0; feeds the closed form of
// int_0^L alpha sin(c alpha) d alpha = (sin(cL) - cL cos(cL))/c^2.
double sin_minus_zcos_over_z2(double z) {
  if (std::abs(z) < 0.5) {
    const double z2 = z * z;
    return z / 3.0 * (1.0 - z2 / 10.0 * (1.0 - z2 / 28.0 * (1.0 - z2 / 54.0)));
  }
  return (std::sin(z) - z * std::cos(z)) / (z * z);
}

}  // namespace

double selberg_r(double x) {
  const double ax = std::abs(x);
  if (std::abs(ax - 1.0) < 1e-4) {
    // R(x) = -sin^2(pi e)/(pi^2 x^2 e (2 + e)) with e = |x| - 1; the direct
    // quotient loses ~8 digits here to the 1/(1-x^2) pole.
    const double e = ax - 1.0;
    const double pe = kPi * e;
    double s_over_e;  // sin^2(pi e)/e
    if (std::abs(e) < 1e-8) {
      s_over_e = kPi * pe;  // pi^2 e
    } else {
      s_over_e = std::sin(pe) * std::sin(pe) / e;
    }
    return -s_over_e / (kPi * kPi * ax * ax * (2.0 + e));
  }
  const double sc = sinc_pi(x);
  return sc * sc / (1.0 - x * x);
}

double selberg_r_hat(double t) {
  const double a = std::abs(t);
  if (a >= 1.0) return 0.0;
  return 1.0 - a + std::sin(kTwoPi * a) / kTwoPi;
}

TestFunction selberg_scaled(double lambda) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("selberg_scaled: lambda > 0 required");
  }
  TestFunction f;
  f.value = [lambda](double u) { return selberg_r(u / lambda); };
  f.transform = [lambda](double a) {
    return lambda * selberg_r_hat(lambda * a);
  };
  f.support_lambda = lambda;
  f.transform_support = 1.0 / lambda;
  return f;
}

double c_functional(double lambda, const TestFunction& r) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("c_functional: lambda > 0 required");
  }
  const auto integrand = [&r](double a) { return a * r.transform(a); };
  const double split = std::min(1.0, r.transform_support);
  // r_hat may have a kink where its support ends; integrate the pieces.
  double integral = integrate_adaptive(integrand, 0.0, split, 0.5e-12);
  if (split < 1.0) {
    integral += integrate_adaptive(integrand, split, 1.0, 0.5e-12);
  }
  return r.transform(0.0) - 1.0 + 2.0 * integral;
}

double c_selberg_closed_form(double lambda) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("c_selberg_closed_form: lambda > 0 required");
  }
  const double big_l = std::min(1.0, 1.0 / lambda);
  const double z = kTwoPi * lambda * big_l;
  const double int_a_sin = sin_minus_zcos_over_z2(z) * big_l * big_l;
  const double bracket = 0.5 * big_l * big_l - lambda * big_l * big_l * big_l / 3.0 +
                         int_a_sin / kTwoPi;
  return lambda - 1.0 + 2.0 * lambda * bracket;
}

ThresholdResult solve_threshold(const ThresholdQuery& query, double lo,
                                double hi) {
  if (!(lo > 0.0 && lo < hi)) {
    throw std::invalid_argument("solve_threshold: bad bracket");
  }
  const double f_lo = c_selberg_closed_form(lo) - query.target;
  const double f_hi = c_selberg_closed_form(hi) - query.target;
  if ((f_lo > 0) == (f_hi > 0)) {
    throw std::invalid_argument("solve_threshold: no sign change in bracket");
  }
  // Sampled monotonicity backs the bisection's uniqueness claim.
  double prev = c_selberg_closed_form(lo);
  for (int i = 1; i <= 64; ++i) {
    const double x = lo + (hi - lo) * i / 64.0;
    const double v = c_selberg_closed_form(x);
    if (v < prev - 1e-14) {
      throw std::runtime_error(
          "solve_threshold: c(lambda) not monotone on bracket");
    }
    prev = v;
  }
  const BisectionResult b = bisect_to_target(
      [](double l) { return c_selberg_closed_form(l); }, lo, hi, query.target,
      1e-10, 1e-13);
  return {b.x, b.f_at_x, query.target};
}

AdmissibilityReport validate_admissible(const TestFunction& r,
                                        double grid_step, double range) {
  if (!(grid_step > 0.0) || !(range > r.support_lambda)) {
    throw std::invalid_argument("validate_admissible: bad grid");
  }
  AdmissibilityReport rep{};
  rep.r0_error = std::abs(r.value(0.0) - 1.0);
  rep.worst_sign_violation = 0.0;
  rep.worst_transform_negative = 0.0;
  rep.worst_evenness = 0.0;
  for (double u = r.support_lambda + grid_step; u <= range; u += grid_step) {
    rep.worst_sign_violation = std::max(rep.worst_sign_violation, r.value(u));
  }
  for (double a = 0.0; a <= r.transform_support; a += grid_step) {
    rep.worst_transform_negative =
        std::max(rep.worst_transform_negative, -r.transform(a));
  }
  for (double u = grid_step; u <= range; u += grid_step) {
    rep.worst_evenness =
        std::max(rep.worst_evenness, std::abs(r.value(u) - r.value(-u)));
  }
  rep.pass = rep.r0_error <= 1e-12 && rep.worst_sign_violation <= 1e-12 &&
             rep.worst_transform_negative <= 1e-12 &&
             rep.worst_evenness <= 1e-12;
  std::ostringstream os;
  os << "r0_error=" << rep.r0_error
     << " sign_violation=" << rep.worst_sign_violation
     << " transform_negative=" << rep.worst_transform_negative
     << " evenness=" << rep.worst_evenness;
  rep.detail = os.str();
  return rep;
}

}  // namespace zetalab
