#ifndef ZETALAB_ARITHMETIC_HPP
#define ZETALAB_ARITHMETIC_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace zetalab {

/// Moebius and von Mangoldt tables up to a limit, built by a linear sieve.
/// Lambda(n) is stored through the prime: for n = p^k the base p is kept and
/// log p is taken fresh on read, so products like Lambda(n) n^{-1/2} do not
/// accumulate sieved-log rounding.
class ArithmeticTables {
 public:
  explicit ArithmeticTables(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  int mobius(std::uint32_t n) const;
  /// log p when n = p^k, else 0.
  double von_mangoldt(std::uint32_t n) const;
  /// p when n = p^k, else 0.
  std::uint32_t prime_power_base(std::uint32_t n) const;
  bool is_prime(std::uint32_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::int8_t> mobius_;
  std::vector<std::uint32_t> pp_base_;
};

/// Real polynomial with ascending coefficients.
struct Polynomial {
  std::vector<double> coeffs;

  Polynomial() = default;
  Polynomial(std::initializer_list<double> c) : coeffs(c) {}
  explicit Polynomial(std::vector<double> c) : coeffs(std::move(c)) {}

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> x) const;
  Polynomial derivative() const;
  int degree() const { return (int)coeffs.size() - 1; }
  bool is_zero() const;
};

/// Dirichlet-polynomial mollifier M(s, P) = sum_{n <= y} mu(n)
/// P(log(y/n)/log y) n^{-s}, with y = T^theta and P(0) = 0.
struct Mollifier {
  double big_t;
  double theta;       // in (0, 1/2)
  Polynomial shape;   // P, with P(0) = 0

  Mollifier(double big_t_, double theta_, Polynomial shape_);
  double length_y() const;
};

std::complex<double> mollifier_value(std::complex<double> s,
                                     const Mollifier& m,
                                     const ArithmeticTables& tables);

/// (2/log x) sum_{n <= x} Lambda(n) n^{-1/2} (1 - log n/log x) cos(tau log n)
double prime_sum_lemma1(double tau, double x, const ArithmeticTables& tables);

}  // namespace zetalab

#endif
