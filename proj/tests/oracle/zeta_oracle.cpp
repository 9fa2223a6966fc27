#include "zeta_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace zetalab_oracle {

namespace {

constexpr long double PI = 3.14159265358979323846264338327950288L;

// Godfrey-style Lanczos fit, g = 607/128, 15 terms. Good to ~15 digits over
// the right half plane, far beyond what zero location at 1e-6 needs.
const long double kLanczos[15] = {
    0.99999999999999709182L,      57.156235665862923517L,
    -59.597960355475491248L,      14.136097974741747174L,
    -0.49191381609762019978L,     0.33994649984811888699e-4L,
    0.46523628927048575665e-4L,   -0.98374475304879564677e-4L,
    0.15808870322491248884e-3L,   -0.21026444172410488319e-3L,
    0.21743961811521264320e-3L,   -0.16431810653676389022e-3L,
    0.84418223983852743293e-4L,   -0.26190838401581408670e-4L,
    0.36899182659531622704e-5L};

std::complex<long double> log_gamma(std::complex<long double> z) {
  const long double g = 607.0L / 128.0L;
  std::complex<long double> x = kLanczos[0];
  for (int i = 1; i < 15; ++i) x += kLanczos[i] / (z + (long double)(i - 1));
  const std::complex<long double> t = z + g - 0.5L;
  return 0.5L * std::log(2.0L * PI) + (z - 0.5L) * std::log(t) - t +
         std::log(x);
}

// B_{2k} as exact rationals, divided out below.
struct Bern {
  long double num;
  long double den;
};
const Bern kB[14] = {{1.0L, 6.0L},
                     {-1.0L, 30.0L},
                     {1.0L, 42.0L},
                     {-1.0L, 30.0L},
                     {5.0L, 66.0L},
                     {-691.0L, 2730.0L},
                     {7.0L, 6.0L},
                     {-3617.0L, 510.0L},
                     {43867.0L, 798.0L},
                     {-174611.0L, 330.0L},
                     {854513.0L, 138.0L},
                     {-236364091.0L, 2730.0L},
                     {8553103.0L, 6.0L},
                     {-23749461029.0L, 870.0L}};

}  // namespace

std::complex<long double> zeta_half(long double t) {
  if (t < 0.0L) t = -t;  // conjugate symmetry is irrelevant for |Z|
  const std::complex<long double> s(0.5L, t);
  const long long big_n = std::max<long long>(40, (long long)(2.0L * t) + 20);
  std::complex<long double> acc = 0.0L;
  for (long long n = 1; n < big_n; ++n) {
    const long double ln = std::log((long double)n);
    acc += std::polar(1.0L / std::sqrt((long double)n), -t * ln);
  }
  const long double nf = (long double)big_n;
  const std::complex<long double> n_ms =
      std::polar(std::pow(nf, -0.5L), -t * std::log(nf));
  acc += nf * n_ms / (s - 1.0L);
  acc += 0.5L * n_ms;
  std::complex<long double> factor = s * n_ms / nf;
  long double fact = 2.0L;  // (2k)! running value, starts at 2!
  for (int k = 1; k <= 14; ++k) {
    acc += kB[k - 1].num / (kB[k - 1].den * fact) * factor;
    factor *= (s + (long double)(2 * k - 1)) * (s + (long double)(2 * k)) /
              (nf * nf);
    fact *= (long double)(2 * k + 1) * (long double)(2 * k + 2);
  }
  return acc;
}

long double theta(long double t) {
  const std::complex<long double> lg = log_gamma({0.25L, 0.5L * t});
  return lg.imag() - 0.5L * t * std::log(PI);
}

long double hardy_z(long double t) {
  const std::complex<long double> z = zeta_half(t);
  const long double th = theta(t);
  return std::cos(th) * z.real() - std::sin(th) * z.imag();
}

long double hardy_z_derivative(long double t) {
  const long double h = 1e-4L;
  const long double f1 = hardy_z(t + h) - hardy_z(t - h);
  const long double f2 = hardy_z(t + 2.0L * h) - hardy_z(t - 2.0L * h);
  return (8.0L * f1 - f2) / (12.0L * h);
}

std::vector<long double> find_zeros(long double lo, long double hi) {
  if (!(lo >= 0.0L && lo < hi)) {
    throw std::invalid_argument("oracle find_zeros: bad range");
  }
  std::vector<long double> out;
  const long double step = 0.05L;
  long double prev_t = lo;
  long double prev_z = hardy_z(lo);
  for (long double t = lo + step; t < hi + step; t += step) {
    const long double tt = std::min(t, hi);
    const long double z = hardy_z(tt);
    if ((z > 0.0L) != (prev_z > 0.0L)) {
      long double a = prev_t, b = tt, fa = prev_z;
      for (int i = 0; i < 80 && b - a > 1e-14L; ++i) {
        const long double m = 0.5L * (a + b);
        const long double fm = hardy_z(m);
        if ((fm > 0.0L) == (fa > 0.0L)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      out.push_back(0.5L * (a + b));
    }
    prev_t = tt;
    prev_z = z;
    if (tt >= hi) break;
  }
  return out;
}

}  // namespace zetalab_oracle
