#include "zetalab/cgg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "zetalab/numerics.hpp"

namespace zetalab {

namespace {

using ComplexL = std::complex<long double>;

constexpr double kDualPathTol = 1e-8;

}  // namespace

// ---------------------------------------------------------------------------
// ExpPolynomial
// ---------------------------------------------------------------------------

Complex integral01_term(int power, Complex beta) {
  if (power < 0) throw std::invalid_argument("integral01_term: power >= 0");
  const double ab = std::abs(beta);
  if (ab < 8.0) {
    // sum_j beta^j / (j! (m + j + 1)); the recurrence cancels badly as
    // beta -> 0, the series does not.
    Complex term = 1.0;  // beta^j / j!
    Complex acc = 0.0;
    for (int j = 0; j < 160; ++j) {
      const Complex contrib = term / (double)(power + j + 1);
      acc += contrib;
      if (std::abs(contrib) < 1e-22 * (1.0 + std::abs(acc)) && j > (int)ab) {
        break;
      }
      term *= beta / (double)(j + 1);
    }
    return acc;
  }
  const Complex eb = std::exp(beta);
  Complex value = (eb - 1.0) / beta;  // m = 0
  for (int m = 1; m <= power; ++m) {
    value = eb / beta - (double)m / beta * value;
  }
  return value;
}

ExpPolynomial ExpPolynomial::from_polynomial(const Polynomial& p, Complex rate,
                                             Complex scale) {
  ExpPolynomial out;
  for (std::size_t m = 0; m < p.coeffs.size(); ++m) {
    if (p.coeffs[m] == 0.0) continue;
    out.add_term(scale * p.coeffs[m], (int)m, rate);
  }
  return out;
}

ExpPolynomial& ExpPolynomial::add_term(Complex coeff, int power,
                                       Complex rate) {
  if (power < 0) throw std::invalid_argument("ExpPolynomial: power >= 0");
  if (coeff == Complex(0.0, 0.0)) return *this;
  for (ExpTerm& t : terms_) {
    if (t.power == power && t.rate == rate) {
      t.coeff += coeff;
      return *this;
    }
  }
  terms_.push_back({coeff, power, rate});
  return *this;
}

ExpPolynomial ExpPolynomial::operator+(const ExpPolynomial& o) const {
  ExpPolynomial out = *this;
  for (const ExpTerm& t : o.terms_) out.add_term(t.coeff, t.power, t.rate);
  return out;
}

ExpPolynomial ExpPolynomial::operator*(const ExpPolynomial& o) const {
  ExpPolynomial out;
  for (const ExpTerm& s : terms_) {
    for (const ExpTerm& t : o.terms_) {
      out.add_term(s.coeff * t.coeff, s.power + t.power, s.rate + t.rate);
    }
  }
  return out;
}

ExpPolynomial ExpPolynomial::operator*(Complex s) const {
  ExpPolynomial out;
  for (const ExpTerm& t : terms_) out.add_term(s * t.coeff, t.power, t.rate);
  return out;
}

ExpPolynomial ExpPolynomial::derivative() const {
  ExpPolynomial out;
  for (const ExpTerm& t : terms_) {
    if (t.power > 0) {
      out.add_term(t.coeff * (double)t.power, t.power - 1, t.rate);
    }
    if (t.rate != Complex(0.0, 0.0)) {
      out.add_term(t.coeff * t.rate, t.power, t.rate);
    }
  }
  return out;
}

Complex ExpPolynomial::evaluate(double x) const {
  Complex acc = 0.0;
  for (const ExpTerm& t : terms_) {
    double xp = 1.0;
    for (int i = 0; i < t.power; ++i) xp *= x;
    acc += t.coeff * xp * std::exp(t.rate * x);
  }
  return acc;
}

Complex ExpPolynomial::integral01() const {
  Complex acc = 0.0;
  for (const ExpTerm& t : terms_) {
    acc += t.coeff * integral01_term(t.power, t.rate);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// main_term_i, symbolic route: first-order jets in u and v
// ---------------------------------------------------------------------------

namespace {

// Value plus the u, v and uv coefficients, truncated at degree 1 in each.
struct BiJet {
  Complex v{0.0}, du{0.0}, dv{0.0}, duv{0.0};

  BiJet operator+(const BiJet& o) const {
    return {v + o.v, du + o.du, dv + o.dv, duv + o.duv};
  }
  BiJet operator-(const BiJet& o) const {
    return {v - o.v, du - o.du, dv - o.dv, duv - o.duv};
  }
  BiJet operator*(const BiJet& o) const {
    return {v * o.v, v * o.du + du * o.v, v * o.dv + dv * o.v,
            v * o.duv + duv * o.v + du * o.dv + dv * o.du};
  }
};

BiJet operator*(Complex s, const BiJet& j) {
  return {s * j.v, s * j.du, s * j.dv, s * j.duv};
}

BiJet constant_jet(Complex c) { return {c, 0.0, 0.0, 0.0}; }

// Integral over [0,1] of f(x+u) g(x+v) expanded to first order in u, v.
BiJet integral_jet(const ExpPolynomial& f, const ExpPolynomial& fu,
                   const ExpPolynomial& g, const ExpPolynomial& gv) {
  BiJet out;
  out.v = (f * g).integral01();
  out.du = (fu * g).integral01();
  out.dv = (f * gv).integral01();
  out.duv = (fu * gv).integral01();
  return out;
}

BiJet integral_jet_u(const ExpPolynomial& f, const ExpPolynomial& fu) {
  return {f.integral01(), fu.integral01(), 0.0, 0.0};
}

BiJet integral_jet_v(const ExpPolynomial& g, const ExpPolynomial& gv) {
  return {g.integral01(), 0.0, gv.integral01(), 0.0};
}

Complex symbolic_main_term(const MainTermInput& in) {
  const ExpPolynomial& g1 = in.g1;
  const ExpPolynomial& g2 = in.g2;
  const ExpPolynomial g1d = g1.derivative();
  const ExpPolynomial g2d = g2.derivative();

  // T_a Q1 = e^{-a(x + theta u)} Q1(x + theta u): to first order in u this
  // is tq1 + theta u * tq1', with tq1 = e^{-a x} Q1(x).
  const ExpPolynomial tq1 = ExpPolynomial::from_polynomial(in.q1, -in.a);
  const ExpPolynomial tq2 = ExpPolynomial::from_polynomial(in.q2, -in.b);
  const ExpPolynomial tq1u = tq1.derivative() * Complex(in.theta);
  const ExpPolynomial tq2v = tq2.derivative() * Complex(in.theta);

  const BiJet a_block = (1.0 / in.theta) * integral_jet(g1, g1d, g2, g2d) +
                        integral_jet_u(g1, g1d) * integral_jet_v(g2, g2d);
  const BiJet b_block = integral_jet(tq1, tq1u, tq2, tq2v) -
                        integral_jet_u(tq1, tq1u) * integral_jet_v(tq2, tq2v);
  const Complex q1_at_0 = in.q1.coeffs.empty() ? 0.0 : in.q1.coeffs[0];
  const Complex q2_at_0 = in.q2.coeffs.empty() ? 0.0 : in.q2.coeffs[0];
  const BiJet c_block =
      integral_jet_u(g1, g1d) * integral_jet_v(g2, g2d) *
      (constant_jet(q1_at_0) - integral_jet_u(tq1, tq1u)) *
      (constant_jet(q2_at_0) - integral_jet_v(tq2, tq2v));

  return (a_block * b_block + c_block).duv;
}

// ---------------------------------------------------------------------------
// main_term_i, numeric route: frozen-panel Gauss-Legendre in long double,
// Richardson-extrapolated central differences with base step 1e-4
// ---------------------------------------------------------------------------

ComplexL evaluate_ld(const ExpPolynomial& p, long double x) {
  ComplexL acc = 0.0L;
  for (const ExpTerm& t : p.terms()) {
    long double xp = 1.0L;
    for (int i = 0; i < t.power; ++i) xp *= x;
    const ComplexL rate((long double)t.rate.real(),
                        (long double)t.rate.imag());
    const ComplexL coeff((long double)t.coeff.real(),
                         (long double)t.coeff.imag());
    acc += coeff * xp * std::exp(rate * x);
  }
  return acc;
}

ComplexL poly_ld(const Polynomial& p, ComplexL x) {
  ComplexL acc = 0.0L;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    acc = acc * x + (long double)p.coeffs[i];
  }
  return acc;
}

struct QuadGrid {
  std::vector<long double> nodes;    // on [0, 1]
  std::vector<long double> weights;
};

QuadGrid make_grid(int panels, int order) {
  const GaussLegendreRule& rule = gauss_legendre(order);
  QuadGrid g;
  g.nodes.reserve((std::size_t)panels * order);
  g.weights.reserve((std::size_t)panels * order);
  const long double w_panel = 1.0L / panels;
  for (int p = 0; p < panels; ++p) {
    const long double lo = w_panel * p;
    for (int i = 0; i < order; ++i) {
      g.nodes.push_back(lo + w_panel * 0.5L * (1.0L + (long double)rule.nodes[i]));
      g.weights.push_back(w_panel * 0.5L * (long double)rule.weights[i]);
    }
  }
  return g;
}

struct NumericEvaluator {
  const MainTermInput& in;
  const QuadGrid& grid;

  ComplexL value(long double u, long double v) const {
    const ComplexL a((long double)in.a.real(), (long double)in.a.imag());
    const ComplexL b((long double)in.b.real(), (long double)in.b.imag());
    const long double th = (long double)in.theta;

    ComplexL i_g1g2 = 0.0L, i_g1 = 0.0L, i_g2 = 0.0L;
    ComplexL i_tt = 0.0L, i_t1 = 0.0L, i_t2 = 0.0L;
    for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
      const long double x = grid.nodes[k];
      const long double w = grid.weights[k];
      const ComplexL g1v = evaluate_ld(in.g1, x + u);
      const ComplexL g2v = evaluate_ld(in.g2, x + v);
      const ComplexL t1 =
          std::exp(-a * (x + th * u)) * poly_ld(in.q1, ComplexL(x + th * u));
      const ComplexL t2 =
          std::exp(-b * (x + th * v)) * poly_ld(in.q2, ComplexL(x + th * v));
      i_g1g2 += w * g1v * g2v;
      i_g1 += w * g1v;
      i_g2 += w * g2v;
      i_tt += w * t1 * t2;
      i_t1 += w * t1;
      i_t2 += w * t2;
    }
    const ComplexL a_block = i_g1g2 / th + i_g1 * i_g2;
    const ComplexL b_block = i_tt - i_t1 * i_t2;
    const ComplexL q10 =
        in.q1.coeffs.empty() ? 0.0L : (long double)in.q1.coeffs[0];
    const ComplexL q20 =
        in.q2.coeffs.empty() ? 0.0L : (long double)in.q2.coeffs[0];
    const ComplexL c_block = i_g1 * i_g2 * (q10 - i_t1) * (q20 - i_t2);
    return a_block * b_block + c_block;
  }

  ComplexL mixed_stencil(long double h) const {
    return (value(h, h) - value(h, -h) - value(-h, h) + value(-h, -h)) /
           (4.0L * h * h);
  }
};

Complex numeric_main_term(const MainTermInput& in) {
  // Panel count chosen adaptively at the center, then frozen across the
  // stencil so the quadrature error differentiates away smoothly.
  int panels = 2;
  const int order = 32;
  for (; panels <= 16; panels *= 2) {
    const QuadGrid g1 = make_grid(panels, order);
    const QuadGrid g2 = make_grid(panels * 2, order);
    const ComplexL v1 = NumericEvaluator{in, g1}.value(0.0L, 0.0L);
    const ComplexL v2 = NumericEvaluator{in, g2}.value(0.0L, 0.0L);
    if (std::abs(v1 - v2) <= 1e-14L * (1.0L + std::abs(v2))) break;
  }
  if (panels > 16) panels = 16;
  const QuadGrid grid = make_grid(panels, order);
  const NumericEvaluator ev{in, grid};
  const long double h = 1e-4L;
  const ComplexL d_h = ev.mixed_stencil(h);
  const ComplexL d_h2 = ev.mixed_stencil(0.5L * h);
  const ComplexL extrap = (4.0L * d_h2 - d_h) / 3.0L;
  return {(double)extrap.real(), (double)extrap.imag()};
}

}  // namespace

MainTermResult main_term_i(const MainTermInput& input) {
  if (!(input.theta > 0.0 && input.theta < 0.5)) {
    throw std::invalid_argument("main_term_i: theta must lie in (0, 1/2)");
  }
  double scale = 1.0;
  for (const ExpTerm& t : input.g1.terms()) {
    scale = std::max(scale, std::abs(t.coeff));
  }
  for (const ExpTerm& t : input.g2.terms()) {
    scale = std::max(scale, std::abs(t.coeff));
  }
  if (std::abs(input.g1.evaluate(0.0)) > 1e-12 * scale ||
      std::abs(input.g2.evaluate(0.0)) > 1e-12 * scale) {
    throw std::invalid_argument("main_term_i: g1(0) = g2(0) = 0 required");
  }

  MainTermResult out;
  out.value = symbolic_main_term(input);
  out.numeric = numeric_main_term(input);
  out.agreement = std::abs(out.value - out.numeric);
  if (!(out.agreement <= kDualPathTol)) {
    throw std::runtime_error(
        "main_term_i: symbolic and finite-difference routes disagree beyond "
        "1e-8 (internal consistency failure)");
  }
  return out;
}

SigmaCoefficient sigma_coefficient(const SigmaParams& params) {
  if (!(params.eta > 0.0 && params.eta < params.kappa)) {
    throw std::invalid_argument("sigma_coefficient: need 0 < eta < kappa");
  }
  if (!params.shape_p.coeffs.empty() && params.shape_p.coeffs[0] != 0.0) {
    throw std::invalid_argument("sigma_coefficient: P(0) = 0 required");
  }
  const double phase = kTwoPi * params.theta * params.eta;
  MainTermInput in;
  in.a = Complex(0.0, kTwoPi * params.kappa);
  in.b = 0.0;
  in.g1 = ExpPolynomial::from_polynomial(
      params.shape_p, Complex(0.0, phase), std::exp(Complex(0.0, -phase)));
  in.g2 = ExpPolynomial::from_polynomial(
      params.shape_p, Complex(0.0, -phase), std::exp(Complex(0.0, phase)));
  in.q1 = Polynomial{1.0};
  in.q2 = Polynomial{0.0, -1.0};
  in.theta = params.theta;

  SigmaCoefficient out;
  if (params.shape_p.is_zero()) {
    out.c_sigma = 0.0;
    out.imag_part = 0.0;
    out.method_agreement = 0.0;
    return out;
  }
  const MainTermResult mt = main_term_i(in);
  const Complex assembled =
      Complex(0.0, -1.0) * std::exp(Complex(0.0, kPi * params.kappa)) *
      mt.value;
  out.c_sigma = assembled.real();
  out.imag_part = std::abs(assembled.imag());
  out.method_agreement = mt.agreement;
  if (!(out.imag_part < 1e-10)) {
    throw std::runtime_error(
        "sigma_coefficient: assembled value has a nonreal part");
  }
  return out;
}

KappaScanResult scan_kappa(double theta, double eta, const Polynomial& shape_p,
                           const std::vector<double>& kappa_grid) {
  if (kappa_grid.empty()) {
    throw std::invalid_argument("scan_kappa: empty kappa grid");
  }
  std::vector<double> grid = kappa_grid;
  std::sort(grid.begin(), grid.end());
  KappaScanResult out;
  out.found_negative = false;
  out.crossing_refined = false;
  out.kappa_min = std::numeric_limits<double>::quiet_NaN();
  out.crossing = std::numeric_limits<double>::quiet_NaN();
  for (double k : grid) {
    const SigmaCoefficient c = sigma_coefficient({theta, k, eta, shape_p});
    out.rows.push_back({k, c.c_sigma});
  }
  std::size_t first_neg = out.rows.size();
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    if (out.rows[i].c_sigma < 0.0) {
      first_neg = i;
      break;
    }
  }
  if (first_neg == out.rows.size()) return out;  // clean no-negative report
  out.found_negative = true;
  out.kappa_min = out.rows[first_neg].kappa;
  if (first_neg > 0) {
    double lo = out.rows[first_neg - 1].kappa;
    double hi = out.rows[first_neg].kappa;
    while (hi - lo > 1e-4) {
      const double mid = 0.5 * (lo + hi);
      const SigmaCoefficient c = sigma_coefficient({theta, mid, eta, shape_p});
      if (c.c_sigma < 0.0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.crossing_refined = true;
    out.crossing = hi;
    out.kappa_min = hi;
  }
  return out;
}

namespace {

// Smallest kappa in [0.5, 1.3] with c_sigma < 0, +infinity when none.
double kappa_cross(double theta, double eta, const Polynomial& shape_p) {
  if (shape_p.is_zero()) return std::numeric_limits<double>::infinity();
  double prev_k = 0.5;
  SigmaCoefficient c = sigma_coefficient({theta, prev_k, eta, shape_p});
  if (c.c_sigma < 0.0) return prev_k;
  for (double k = 0.55; k <= 1.3 + 1e-12; k += 0.05) {
    c = sigma_coefficient({theta, k, eta, shape_p});
    if (c.c_sigma < 0.0) {
      double lo = prev_k, hi = k;
      while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        const SigmaCoefficient cm =
            sigma_coefficient({theta, mid, eta, shape_p});
        if (cm.c_sigma < 0.0) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      return hi;
    }
    prev_k = k;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

OptimizeResult optimize_parameters(int p_degree,
                                   std::pair<double, double> theta_bounds,
                                   std::pair<double, double> eta_bounds,
                                   int rounds) {
  if (p_degree < 1 || p_degree > 4) {
    throw std::invalid_argument("optimize_parameters: 1 <= p_degree <= 4");
  }
  if (!(theta_bounds.first > 0.0 && theta_bounds.second < 0.5 &&
        theta_bounds.first <= theta_bounds.second)) {
    throw std::invalid_argument(
        "optimize_parameters: theta bounds must lie in (0, 1/2)");
  }
  if (!(eta_bounds.first > 0.0 && eta_bounds.first <= eta_bounds.second)) {
    throw std::invalid_argument("optimize_parameters: bad eta bounds");
  }

  SigmaParams best;
  best.theta = std::clamp(0.4999, theta_bounds.first, theta_bounds.second);
  best.eta = std::clamp(0.6, eta_bounds.first, eta_bounds.second);
  best.shape_p.coeffs.assign((std::size_t)p_degree + 1, 0.0);
  best.shape_p.coeffs[1] = 1.0;  // seeded at P(x) = x
  best.kappa = 1.0;              // placeholder; kappa is the objective

  double best_obj = kappa_cross(best.theta, best.eta, best.shape_p);
  double coeff_halfspan = 1.0;
  for (int round = 0; round < rounds; ++round) {
    // eta sweep
    {
      const double lo = eta_bounds.first, hi = eta_bounds.second;
      for (int i = 0; i <= 8; ++i) {
        const double eta = lo + (hi - lo) * i / 8.0;
        const double obj = kappa_cross(best.theta, eta, best.shape_p);
        if (obj < best_obj) {
          best_obj = obj;
          best.eta = eta;
        }
      }
    }
    // theta sweep
    if (theta_bounds.second > theta_bounds.first) {
      const double lo = theta_bounds.first, hi = theta_bounds.second;
      for (int i = 0; i <= 4; ++i) {
        const double theta = lo + (hi - lo) * i / 4.0;
        const double obj = kappa_cross(theta, best.eta, best.shape_p);
        if (obj < best_obj) {
          best_obj = obj;
          best.theta = theta;
        }
      }
    }
    // shape coefficients, one at a time
    for (int m = 2; m <= p_degree; ++m) {
      const double center = best.shape_p.coeffs[(std::size_t)m];
      for (int i = 0; i <= 8; ++i) {
        Polynomial p = best.shape_p;
        p.coeffs[(std::size_t)m] =
            center - coeff_halfspan + 2.0 * coeff_halfspan * i / 8.0;
        const double obj = kappa_cross(best.theta, best.eta, p);
        if (obj < best_obj) {
          best_obj = obj;
          best.shape_p = p;
        }
      }
    }
    coeff_halfspan *= 0.5;
  }

  if (!std::isfinite(best_obj)) {
    throw std::runtime_error(
        "optimize_parameters: no sign change found in the search region");
  }
  OptimizeResult out;
  out.kappa_min = best_obj;
  best.kappa = std::min(best_obj + 1e-4, 1.3);
  const SigmaCoefficient cert = sigma_coefficient(best);
  if (!(cert.c_sigma < 0.0)) {
    throw std::runtime_error(
        "optimize_parameters: certification re-evaluation came out "
        "nonnegative");
  }
  out.best = best;
  out.c_sigma = cert.c_sigma;
  return out;
}

}  // namespace zetalab
