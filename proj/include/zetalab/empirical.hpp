#ifndef ZETALAB_EMPIRICAL_HPP
#define ZETALAB_EMPIRICAL_HPP

#include <vector>

#include "zetalab/arithmetic.hpp"
#include "zetalab/cgg.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

struct SigmaSummandRow {
  double gamma;
  double z_prime;
  double z_shifted;
  double mollifier_sq;
  double product;
};

struct EmpiricalSigmaResult {
  double big_t;
  SigmaParams params;
  double raw_sum;
  double normalized;  // raw_sum / (T log^2 T / 2 pi)
  long long zero_count_used;
};

/// sum_{T < gamma <= 2T} Z'(gamma) Z(gamma + 2 pi kappa/log T)
/// |M(1/2 + i gamma + 2 pi i eta/log T, P)|^2, every factor from the zero
/// and prime engines. Pass `rows` to capture the per-ordinate factors.
EmpiricalSigmaResult sigma_empirical(const SigmaParams& params, double big_t,
                                     const ZeroTable& table,
                                     const ArithmeticTables& tables,
                                     std::vector<SigmaSummandRow>* rows =
                                         nullptr);

struct NegativeProductCount {
  long long count;     // ordinates with Z'(gamma) Z(gamma + window) < 0
  long long verified;  // of those, ones with a table ordinate in the window
  long long total;     // ordinates examined in (T, 2T]
};

/// Counts gamma in (T, 2T] with Z'(gamma) Z(gamma + 2 pi kappa/log T) < 0
/// and cross-checks each hit against the table: a negative product must
/// bracket a sign change, hence a distinct ordinate, in the forward window.
NegativeProductCount count_negative_products(double kappa, double big_t,
                                             const ZeroTable& table);

struct LandauGonekCheck {
  double lhs;
  double rhs;
  double relative_error;
};

/// Landau-Gonek mean value over zeros: the direct sum
/// sum_{0<gamma<=T} |sum_{n<=x} a(n) n^{-1/2-i gamma}|^2 against
/// N(T) sum |a(n)|^2/n - (T/pi) Re sum (Lambda*a)(n) conj(a(n))/n.
/// `coeffs[i]` holds a(i+1); x = coeffs.size().
LandauGonekCheck landau_gonek_check(const std::vector<Complex>& coeffs,
                                    double big_t, const ZeroTable& table,
                                    const ArithmeticTables& tables,
                                    double epsilon = 0.1);

}  // namespace zetalab

#endif
