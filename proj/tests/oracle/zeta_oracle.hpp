#ifndef ZETALAB_TESTS_ZETA_ORACLE_HPP
#define ZETALAB_TESTS_ZETA_ORACLE_HPP

// Test-only high-precision oracle for the critical line, kept independent of
// the library under test: long double Euler-Maclaurin with its own parameter
// choices, its own theta route (complex log-gamma everywhere, never the
// asymptotic series), and a plain scan-and-bisect zero finder.

#include <complex>
#include <vector>

namespace zetalab_oracle {

std::complex<long double> zeta_half(long double t);
long double theta(long double t);
long double hardy_z(long double t);
long double hardy_z_derivative(long double t);  // 5-point stencil, h = 1e-4

// All zero ordinates in [lo, hi], located to ~1e-11.
std::vector<long double> find_zeros(long double lo, long double hi);

}  // namespace zetalab_oracle

#endif
