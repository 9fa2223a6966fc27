#include "zetalab/empirical.hpp"

#include <cmath>
#include <stdexcept>

#include "zetalab/numerics.hpp"

namespace zetalab {

EmpiricalSigmaResult sigma_empirical(const SigmaParams& params, double big_t,
                                     const ZeroTable& table,
                                     const ArithmeticTables& tables,
                                     std::vector<SigmaSummandRow>* rows) {
  if (!table.certified_on(table.t_min(), 2.0 * big_t)) {
    throw std::invalid_argument(
        "sigma_empirical: table not certified through 2T");
  }
  const Mollifier moll(big_t, params.theta, params.shape_p);
  if ((std::uint32_t)std::floor(moll.length_y()) > tables.limit()) {
    throw std::invalid_argument(
        "sigma_empirical: mollifier length exceeds arithmetic tables");
  }
  const double log_t = std::log(big_t);
  const double shift = kTwoPi * params.kappa / log_t;
  const double eta_shift = kTwoPi * params.eta / log_t;

  const std::vector<double> gammas = table.expanded_in(big_t, 2.0 * big_t);
  std::vector<double> products(gammas.size());
  std::vector<SigmaSummandRow> local(rows != nullptr ? gammas.size() : 0);
  parallel_chunks(gammas.size(), [&](std::size_t i) {
    const double g = gammas[i];
    const double zp = hardy_z_derivative(g);
    const double zs = hardy_z(g + shift);
    const Complex m =
        mollifier_value(Complex(0.5, g + eta_shift), moll, tables);
    const double msq = std::norm(m);
    products[i] = zp * zs * msq;
    if (rows != nullptr) local[i] = {g, zp, zs, msq, products[i]};
  });
  double raw = 0.0;
  for (double p : products) raw += p;
  if (rows != nullptr) *rows = std::move(local);

  EmpiricalSigmaResult out;
  out.big_t = big_t;
  out.params = params;
  out.raw_sum = raw;
  out.normalized = raw / (big_t * log_t * log_t / kTwoPi);
  out.zero_count_used = (long long)gammas.size();
  return out;
}

NegativeProductCount count_negative_products(double kappa, double big_t,
                                             const ZeroTable& table) {
  const double log_t = std::log(big_t);
  const double window = kTwoPi * kappa / log_t;
  if (!table.certified_on(table.t_min(), 2.0 * big_t + window)) {
    throw std::invalid_argument(
        "count_negative_products: table not certified through 2T + window");
  }
  const auto& zs = table.zeros();
  NegativeProductCount out{0, 0, 0};
  std::vector<int> flags(zs.size(), 0);  // 1 = negative, 2 = also verified
  parallel_chunks(zs.size(), [&](std::size_t i) {
    const double g = zs[i].ordinate;
    if (g <= big_t || g > 2.0 * big_t) return;
    const double zp = hardy_z_derivative(g);
    const double zv = hardy_z(g + window);
    flags[i] = 1;
    if (zp * zv < 0.0) {
      flags[i] = 2;
      // A negative product means Z changed sign past gamma, so a distinct
      // ordinate must sit inside (gamma, gamma + window].
      if (i + 1 < zs.size() && zs[i + 1].ordinate <= g + window) flags[i] = 3;
    }
  });
  for (int f : flags) {
    if (f >= 1) ++out.total;
    if (f >= 2) ++out.count;
    if (f >= 3) ++out.verified;
  }
  return out;
}

LandauGonekCheck landau_gonek_check(const std::vector<Complex>& coeffs,
                                    double big_t, const ZeroTable& table,
                                    const ArithmeticTables& tables,
                                    double epsilon) {
  const std::size_t x = coeffs.size();
  if (x == 0) throw std::invalid_argument("landau_gonek_check: empty coeffs");
  if ((double)x > std::pow(big_t, 1.0 - epsilon)) {
    throw std::invalid_argument(
        "landau_gonek_check: x exceeds T^(1-epsilon)");
  }
  if ((std::uint32_t)x > tables.limit()) {
    throw std::invalid_argument("landau_gonek_check: tables shorter than x");
  }
  if (!table.certified_on(table.t_min(), big_t)) {
    throw std::invalid_argument(
        "landau_gonek_check: table not certified through T");
  }

  std::vector<double> inv_sqrt(x + 1), log_n(x + 1);
  for (std::size_t n = 1; n <= x; ++n) {
    inv_sqrt[n] = 1.0 / std::sqrt((double)n);
    log_n[n] = std::log((double)n);
  }

  const std::vector<double> gammas = table.expanded_upto(big_t);
  std::vector<double> terms(gammas.size());
  parallel_chunks(gammas.size(), [&](std::size_t i) {
    const double g = gammas[i];
    Complex acc = 0.0;
    for (std::size_t n = 1; n <= x; ++n) {
      if (coeffs[n - 1] == Complex(0.0, 0.0)) continue;
      const double ph = -g * log_n[n];
      acc += coeffs[n - 1] * inv_sqrt[n] *
             Complex(std::cos(ph), std::sin(ph));
    }
    terms[i] = std::norm(acc);
  });
  double lhs = 0.0;
  for (double t : terms) lhs += t;

  const double big_n = (double)gammas.size();
  double diag = 0.0;
  for (std::size_t n = 1; n <= x; ++n) diag += std::norm(coeffs[n - 1]) / n;
  double conv = 0.0;  // Re sum (Lambda*a)(n) conj(a(n))/n
  for (std::size_t n = 1; n <= x; ++n) {
    if (coeffs[n - 1] == Complex(0.0, 0.0)) continue;
    Complex lam_a = 0.0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) lam_a += tables.von_mangoldt((std::uint32_t)d) *
                               coeffs[n / d - 1];
    }
    conv += (lam_a * std::conj(coeffs[n - 1])).real() / (double)n;
  }
  const double rhs = big_n * diag - big_t / kPi * conv;

  LandauGonekCheck out;
  out.lhs = lhs;
  out.rhs = rhs;
  out.relative_error =
      std::abs(lhs - rhs) / std::max(1e-300, std::abs(lhs));
  return out;
}

}  // namespace zetalab
