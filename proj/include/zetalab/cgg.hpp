#ifndef ZETALAB_CGG_HPP
#define ZETALAB_CGG_HPP

#include <complex>
#include <vector>

#include "zetalab/arithmetic.hpp"

namespace zetalab {

using Complex = std::complex<double>;

struct ExpTerm {
  Complex coeff;
  int power;     // >= 0
  Complex rate;  // coeff * x^power * exp(rate * x)
};

/// Finite sums of c x^m e^{beta x}: closed under addition, multiplication,
/// differentiation and exact integration over [0, 1]. This is the algebra in
/// which g1, g2 and the damped polynomials T_a Q live.
class ExpPolynomial {
 public:
  ExpPolynomial() = default;

  static ExpPolynomial from_polynomial(const Polynomial& p,
                                       Complex rate = 0.0,
                                       Complex scale = 1.0);

  ExpPolynomial& add_term(Complex coeff, int power, Complex rate);
  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  ExpPolynomial operator+(const ExpPolynomial& o) const;
  ExpPolynomial operator*(const ExpPolynomial& o) const;
  ExpPolynomial operator*(Complex s) const;
  ExpPolynomial derivative() const;

  Complex evaluate(double x) const;
  /// Exact int_0^1, with a series branch for small |rate| where the
  /// integration-by-parts recurrence would cancel.
  Complex integral01() const;

 private:
  std::vector<ExpTerm> terms_;
};

/// int_0^1 x^m e^{beta x} dx in closed form.
Complex integral01_term(int power, Complex beta);

struct MainTermInput {
  Complex a;
  Complex b;
  ExpPolynomial g1;  // g1(0) = 0
  ExpPolynomial g2;  // g2(0) = 0
  Polynomial q1;
  Polynomial q2;
  double theta;      // in (0, 1/2)
};

struct MainTermResult {
  Complex value;      // symbolic route (exact integrals, uv jet)
  Complex numeric;    // finite differences over quadrature
  double agreement;   // |value - numeric|
};

/// The bracketed d^2/du dv {...}|_{u=v=0} factor of the mean-value main
/// term, i.e. I/(T log T / 2 pi). Both evaluation routes are computed and
/// must agree to 1e-8; disagreement throws rather than averaging.
MainTermResult main_term_i(const MainTermInput& input);

struct SigmaParams {
  double theta;
  double kappa;
  double eta;
  Polynomial shape_p;  // P(0) = 0
};

struct SigmaCoefficient {
  double c_sigma;           // coefficient of T log^2 T / 2 pi
  double imag_part;         // |imag| of the assembled value, must be < 1e-10
  double method_agreement;  // dual-path distance from main_term_i
};

/// Builds g1 = P(x) e^{-2 pi i theta eta (1-x)}, g2 its reflection,
/// Q1 = 1, Q2 = -x, and returns Re[-i e^{i pi kappa} I(2 pi i kappa, 0, ...)].
SigmaCoefficient sigma_coefficient(const SigmaParams& params);

struct KappaScanRow {
  double kappa;
  double c_sigma;
};

struct KappaScanResult {
  std::vector<KappaScanRow> rows;
  bool found_negative;
  double kappa_min;          // smallest kappa with c_sigma < 0 (refined)
  bool crossing_refined;
  double crossing;           // sign change location, when one exists
};

KappaScanResult scan_kappa(double theta, double eta, const Polynomial& shape_p,
                           const std::vector<double>& kappa_grid);

struct OptimizeResult {
  SigmaParams best;
  double kappa_min;     // smallest kappa with c_sigma < 0 at best params
  double c_sigma;       // fresh certification value just past the crossing
};

/// Deterministic coordinate-descent over eta, theta and the coefficients of
/// P (degree <= p_degree), minimizing the kappa at which c_sigma crosses
/// zero.
OptimizeResult optimize_parameters(int p_degree,
                                   std::pair<double, double> theta_bounds,
                                   std::pair<double, double> eta_bounds,
                                   int rounds = 2);

}  // namespace zetalab

#endif
