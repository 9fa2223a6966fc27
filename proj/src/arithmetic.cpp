#include "zetalab/arithmetic.hpp"

#include <cmath>
#include <stdexcept>

namespace zetalab {

namespace {
// 2^28 entries of sieve state is ~1.3 GB across the two tables; past that
// the build is refused rather than left to the OOM killer.
constexpr std::uint32_t kMaxLimit = 1u << 28;
}  // namespace

ArithmeticTables::ArithmeticTables(std::uint32_t limit) : limit_(limit) {
  if (limit < 1) throw std::invalid_argument("ArithmeticTables: limit >= 1");
  if (limit > kMaxLimit) {
    throw std::invalid_argument("ArithmeticTables: limit exceeds memory budget");
  }
  mobius_.assign(limit + 1, 0);
  pp_base_.assign(limit + 1, 0);
  std::vector<std::uint32_t> spf(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  mobius_[1] = 1;
  for (std::uint32_t n = 2; n <= limit; ++n) {
    if (spf[n] == 0) {
      spf[n] = n;
      primes.push_back(n);
      mobius_[n] = -1;
    }
    for (std::uint32_t p : primes) {
      if (p > spf[n] || (std::uint64_t)p * n > limit) break;
      spf[p * n] = p;
      mobius_[p * n] = (p == spf[n]) ? 0 : -mobius_[n];
    }
  }
  for (std::uint32_t p : primes) {
    for (std::uint64_t q = p; q <= limit; q *= p) pp_base_[q] = p;
  }
}

int ArithmeticTables::mobius(std::uint32_t n) const {
  if (n < 1 || n > limit_) {
    throw std::invalid_argument("mobius: n outside table");
  }
  return mobius_[n];
}

double ArithmeticTables::von_mangoldt(std::uint32_t n) const {
  if (n < 1 || n > limit_) {
    throw std::invalid_argument("von_mangoldt: n outside table");
  }
  const std::uint32_t p = pp_base_[n];
  return p == 0 ? 0.0 : std::log((double)p);
}

std::uint32_t ArithmeticTables::prime_power_base(std::uint32_t n) const {
  if (n < 1 || n > limit_) {
    throw std::invalid_argument("prime_power_base: n outside table");
  }
  return pp_base_[n];
}

bool ArithmeticTables::is_prime(std::uint32_t n) const {
  return n >= 2 && n <= limit_ && pp_base_[n] == n;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    d.coeffs.push_back(coeffs[i] * (double)i);
  }
  return d;
}

bool Polynomial::is_zero() const {
  for (double c : coeffs) {
    if (c != 0.0) return false;
  }
  return true;
}

Mollifier::Mollifier(double big_t_, double theta_, Polynomial shape_)
    : big_t(big_t_), theta(theta_), shape(std::move(shape_)) {
  if (!(big_t > 1.0)) throw std::invalid_argument("Mollifier: T > 1 required");
  if (!(theta > 0.0 && theta < 0.5)) {
    throw std::invalid_argument("Mollifier: theta in (0, 1/2) required");
  }
  if (!shape.coeffs.empty() && shape.coeffs[0] != 0.0) {
    throw std::invalid_argument("Mollifier: P(0) = 0 required");
  }
}

double Mollifier::length_y() const { return std::pow(big_t, theta); }

std::complex<double> mollifier_value(std::complex<double> s,
                                     const Mollifier& m,
                                     const ArithmeticTables& tables) {
  const double y = m.length_y();
  const std::uint32_t top = (std::uint32_t)std::floor(y);
  if (top > tables.limit()) {
    throw std::invalid_argument("mollifier_value: tables shorter than y");
  }
  const double log_y = std::log(y);
  std::complex<double> acc = 0.0;
  for (std::uint32_t n = 1; n <= top; ++n) {
    const int mu = tables.mobius(n);
    if (mu == 0) continue;
    const double log_n = std::log((double)n);
    const double shape = m.shape((log_y - log_n) / log_y);
    if (shape == 0.0) continue;
    // n^{-s} without complex pow: exp(-Re s log n) * e^{-i Im s log n}
    const double mod = std::exp(-s.real() * log_n);
    const double ph = -s.imag() * log_n;
    acc += (double)mu * shape * mod *
           std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return acc;
}

double prime_sum_lemma1(double tau, double x, const ArithmeticTables& tables) {
  if (!(x >= 2.0)) throw std::invalid_argument("prime_sum_lemma1: x >= 2");
  if (!(tau >= 2.0)) throw std::invalid_argument("prime_sum_lemma1: tau >= 2");
  const std::uint32_t top = (std::uint32_t)std::floor(x);
  if (top > tables.limit()) {
    throw std::invalid_argument("prime_sum_lemma1: tables shorter than x");
  }
  const double log_x = std::log(x);
  double acc = 0.0;
  for (std::uint32_t n = 2; n <= top; ++n) {
    const std::uint32_t p = tables.prime_power_base(n);
    if (p == 0) continue;
    const double log_n = std::log((double)n);
    acc += std::log((double)p) / std::sqrt((double)n) *
           (1.0 - log_n / log_x) * std::cos(tau * log_n);
  }
  return 2.0 / log_x * acc;
}

}  // namespace zetalab
