#include "zetalab/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "zetalab/numerics.hpp"

namespace zetalab {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;
constexpr long double kTwoPiL = 2.0L * kPiL;

// ---------------------------------------------------------------------------
// Riemann-Siegel theta
// ---------------------------------------------------------------------------

// Lanczos g=7 coefficients, used only below t = 10 where the asymptotic
// series for theta is not yet at full precision.
std::complex<long double> lanczos_log_gamma(std::complex<long double> z) {
  static const long double coeffs[9] = {
      0.99999999999980993L,  676.5203681218851L,   -1259.1392167224028L,
      771.32342877765313L,   -176.61502916214059L, 12.507343278686905L,
      -0.13857109526572012L, 9.9843695780195716e-6L, 1.5056327351493116e-7L};
  z -= 1.0L;
  std::complex<long double> x = coeffs[0];
  for (int i = 1; i < 9; ++i) x += coeffs[i] / (z + (long double)i);
  const std::complex<long double> t = z + 7.5L;
  return 0.5L * std::log(2.0L * kPiL) + (z + 0.5L) * std::log(t) - t +
         std::log(x);
}

long double rs_theta_ld(long double t) {
  if (t < 10.0L) {
    const std::complex<long double> lg =
        lanczos_log_gamma({0.25L, 0.5L * t});
    return lg.imag() - 0.5L * t * std::log(kPiL);
  }
  const long double t2 = t * t;
  long double v = 0.5L * t * (std::log(t / kTwoPiL) - 1.0L) - kPiL / 8.0L;
  v += (1.0L / 48.0L) / t;
  v += (7.0L / 5760.0L) / (t * t2);
  v += (31.0L / 80640.0L) / (t * t2 * t2);
  v += (127.0L / 430080.0L) / (t * t2 * t2 * t2);
  return v;
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin zeta(1/2 + it)
// ---------------------------------------------------------------------------

// B_{2k} / (2k)! for k = 1..12
constexpr long double kBernFact[12] = {
    8.33333333333333333333e-02L,  -1.38888888888888888889e-03L,
    3.30687830687830687831e-05L,  -8.26719576719576719577e-07L,
    2.08767569878680989792e-08L,  -5.28419013868749318484e-10L,
    1.33825365306846788328e-11L,  -3.38968029632258286683e-13L,
    8.58606205627784456413e-15L,  -2.17486869855806187252e-16L,
    5.50900282836022951520e-18L,  -1.39544646858125233407e-19L};

std::complex<double> em_zeta_half(double t) {
  const std::complex<long double> s(0.5L, (long double)t);
  const int big_n = std::max(24, (int)std::ceil(1.25 * std::abs(t)));
  std::complex<long double> sum = 0.0L;
  for (int n = 1; n < big_n; ++n) {
    const long double ln = std::log((long double)n);
    const long double mod = 1.0L / std::sqrt((long double)n);
    const long double ph = -(long double)t * ln;
    sum += std::complex<long double>(mod * std::cos(ph), mod * std::sin(ph));
  }
  const std::complex<long double> nl = (long double)big_n;
  const std::complex<long double> n_ms = std::exp(-s * std::log(nl));
  sum += nl * n_ms / (s - 1.0L);  // N^{1-s}/(s-1)
  sum += 0.5L * n_ms;
  // Bernoulli tail: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  std::complex<long double> rising = s;          // k = 1 product
  std::complex<long double> npow = n_ms / nl;    // N^{-s-1}
  const long double inv_n2 = 1.0L / ((long double)big_n * (long double)big_n);
  for (int k = 1; k <= 12; ++k) {
    sum += kBernFact[k - 1] * rising * npow * (long double)big_n;
    // advance to k+1
    rising *= (s + (long double)(2 * k - 1)) * (s + (long double)(2 * k));
    npow *= inv_n2;
  }
  return {(double)sum.real(), (double)sum.imag()};
}

// ---------------------------------------------------------------------------
// Riemann-Siegel correction terms via Taylor jets of
// Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p).
// Psi is entire; at p = 1/4, 3/4 numerator and denominator share a simple
// zero which is cancelled in series form before dividing.
// ---------------------------------------------------------------------------

constexpr int kSeriesOrder = 48;
using Series = std::array<long double, kSeriesOrder + 1>;

Series series_multiply(const Series& a, const Series& b) {
  Series r{};
  for (int i = 0; i <= kSeriesOrder; ++i) {
    if (a[i] == 0.0L) continue;
    for (int j = 0; i + j <= kSeriesOrder; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// cos(a0 + a1 e + a2 e^2) as a power series in e.
Series series_cos_quadratic(long double a0, long double a1, long double a2) {
  Series u{};
  u[1] = a1;
  u[2] = a2;
  Series upow{};
  upow[0] = 1.0L;
  Series cos_u{}, sin_u{};
  cos_u[0] = 1.0L;
  long double fact = 1.0L;
  for (int j = 1; j <= kSeriesOrder; ++j) {
    upow = series_multiply(upow, u);
    fact *= (long double)j;
    const long double c = 1.0L / fact;
    const int sgn = (j / 2) % 2 == 0 ? 1 : -1;
    if (j % 2 == 0) {
      for (int i = 0; i <= kSeriesOrder; ++i) cos_u[i] += sgn * c * upow[i];
    } else {
      for (int i = 0; i <= kSeriesOrder; ++i) sin_u[i] += sgn * c * upow[i];
    }
  }
  const long double ca = std::cos(a0), sa = std::sin(a0);
  Series r{};
  for (int i = 0; i <= kSeriesOrder; ++i) r[i] = ca * cos_u[i] - sa * sin_u[i];
  return r;
}

Series psi_series_at(long double c, bool singular) {
  Series num = series_cos_quadratic(kTwoPiL * (c * c - c - 0.0625L),
                                    kTwoPiL * (2.0L * c - 1.0L), kTwoPiL);
  Series den = series_cos_quadratic(kTwoPiL * c, kTwoPiL, 0.0L);
  if (singular) {
    // Both series vanish at the center; cancel the common factor.
    for (int i = 0; i < kSeriesOrder; ++i) {
      num[i] = num[i + 1];
      den[i] = den[i + 1];
    }
    num[kSeriesOrder] = 0.0L;
    den[kSeriesOrder] = 0.0L;
  }
  Series q{};
  for (int j = 0; j <= kSeriesOrder; ++j) {
    long double acc = num[j];
    for (int i = 1; i <= j; ++i) acc -= den[i] * q[j - i];
    q[j] = acc / den[0];
  }
  return q;
}

constexpr int kMaxPsiDeriv = 12;

struct PsiTables {
  // deriv_series[center][k][j]: j-th coefficient of Psi^(k) about the center
  std::array<std::array<Series, kMaxPsiDeriv + 1>, 5> deriv;
};

const PsiTables& psi_tables() {
  static const PsiTables tables = [] {
    PsiTables t{};
    for (int ci = 0; ci < 5; ++ci) {
      const long double c = 0.25L * ci;
      const bool singular = (ci == 1 || ci == 3);
      const Series base = psi_series_at(c, singular);
      for (int k = 0; k <= kMaxPsiDeriv; ++k) {
        Series d{};
        for (int j = 0; j + k <= kSeriesOrder; ++j) {
          long double ff = 1.0L;
          for (int i = 0; i < k; ++i) ff *= (long double)(j + k - i);
          d[j] = base[j + k] * ff;
        }
        t.deriv[ci][k] = d;
      }
    }
    return t;
  }();
  return tables;
}

void psi_derivatives(long double p, long double out[kMaxPsiDeriv + 1]) {
  int ci = (int)std::floor(p * 4.0L + 0.5L);
  ci = std::clamp(ci, 0, 4);
  const long double delta = p - 0.25L * ci;
  const PsiTables& t = psi_tables();
  for (int k = 0; k <= kMaxPsiDeriv; ++k) {
    const Series& d = t.deriv[ci][k];
    long double acc = 0.0L;
    for (int j = kSeriesOrder - k; j >= 0; --j) acc = acc * delta + d[j];
    out[k] = acc;
  }
}

double riemann_siegel_z(double t) {
  const long double tl = t;
  const long double a = std::sqrt(tl / kTwoPiL);
  const long long m = (long long)std::floor(a);
  const long double p = a - (long double)m;
  const long double theta = rs_theta_ld(tl);

  long double main = 0.0L;
  for (long long n = 1; n <= m; ++n) {
    const long double ph = theta - tl * std::log((long double)n);
    main += std::cos(ph) / std::sqrt((long double)n);
  }
  main *= 2.0L;

  long double d[kMaxPsiDeriv + 1];
  psi_derivatives(p, d);
  constexpr long double pi2 = kPiL * kPiL;
  constexpr long double pi4 = pi2 * pi2;
  constexpr long double pi6 = pi4 * pi2;
  constexpr long double pi8 = pi4 * pi4;
  const long double c0 = d[0];
  const long double c1 = -d[3] / (96.0L * pi2);
  const long double c2 = d[2] / (64.0L * pi2) + d[6] / (18432.0L * pi4);
  const long double c3 = -d[1] / (64.0L * pi2) - d[5] / (3840.0L * pi4) -
                         d[9] / (5308416.0L * pi6);
  const long double c4 = d[0] / (128.0L * pi2) + 19.0L * d[4] / (24576.0L * pi4) +
                         11.0L * d[8] / (5898240.0L * pi6) +
                         d[12] / (2038431744.0L * pi8);
  const long double u = 1.0L / a;
  const long double corr =
      (m % 2 == 0 ? -1.0L : 1.0L) / std::sqrt(a) *
      (c0 + u * (c1 + u * (c2 + u * (c3 + u * c4))));
  return (double)(main + corr);
}

}  // namespace

double rs_theta(double t) { return (double)rs_theta_ld((long double)t); }

double rs_theta_derivative(double t) {
  if (t < 1e-3) t = 1e-3;
  return 0.5 * std::log(t / kTwoPi) - 1.0 / (48.0 * t * t);
}

std::complex<double> zeta_half_line(double t) {
  if (t < 0.0) throw std::invalid_argument("zeta_half_line: t must be >= 0");
  if (t > kHeightCeiling) {
    throw std::invalid_argument("zeta_half_line: t above height ceiling");
  }
  return em_zeta_half(t);
}

std::complex<double> rotated_zeta(double t) {
  const std::complex<double> z = zeta_half_line(t);
  const long double th = rs_theta_ld((long double)t);
  const std::complex<double> rot((double)std::cos(th), (double)std::sin(th));
  return rot * z;
}

double hardy_z(double t) {
  if (t < 0.0) throw std::invalid_argument("hardy_z: t must be >= 0");
  if (t > kHeightCeiling) {
    throw std::invalid_argument(
        "hardy_z: t above the validated height ceiling");
  }
  if (t < kRiemannSiegelSwitch) return rotated_zeta(t).real();
  return riemann_siegel_z(t);
}

double hardy_z_derivative(double t) {
  if (t < 0.0) throw std::invalid_argument("hardy_z_derivative: t >= 0");
  const double h = 1e-5;
  // Z is even, so reflected arguments are valid near t = 0.
  return (hardy_z(std::abs(t + h)) - hardy_z(std::abs(t - h))) / (2.0 * h);
}

double smooth_counting_main(double big_t) {
  const double x = big_t / kTwoPi;
  return x * std::log(x) - x + 0.875;
}

double gram_point(long long n) {
  if (n < -1) throw std::invalid_argument("gram_point: n >= -1 required");
  const double target = kPi * (double)n;
  double lo = 6.3;
  double hi = std::max(20.0, 8.0 * (double)n + 20.0);
  // theta is increasing beyond 2*pi; plain bisection is plenty fast.
  for (int i = 0; i < 90; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (rs_theta(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-12 * std::max(1.0, hi)) break;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// ZeroTable
// ---------------------------------------------------------------------------

ZeroTable::ZeroTable(std::vector<CriticalZero> zeros, double t_min,
                     double t_max, ZeroSource source)
    : zeros_(std::move(zeros)),
      t_min_(t_min),
      t_max_(t_max),
      has_range_(true),
      source_(source) {
  if (!(t_min >= 0.0 && t_min < t_max)) {
    throw std::invalid_argument("ZeroTable: invalid height range");
  }
  double prev = 0.0;
  for (const CriticalZero& z : zeros_) {
    if (!(z.ordinate > 0.0)) {
      throw std::invalid_argument("ZeroTable: ordinates must be positive");
    }
    if (!(z.ordinate > prev)) {
      throw std::invalid_argument(
          "ZeroTable: ordinates must be strictly increasing");
    }
    if (z.multiplicity < 1) {
      throw std::invalid_argument("ZeroTable: multiplicity must be >= 1");
    }
    if (z.multiplicity > 1 && source != ZeroSource::synthetic) {
      throw std::invalid_argument(
          "ZeroTable: only synthetic tables may carry multiplicity > 1");
    }
    prev = z.ordinate;
  }
}

ZeroTable ZeroTable::synthetic(std::vector<CriticalZero> zeros) {
  if (zeros.empty()) {
    ZeroTable t;
    t.source_ = ZeroSource::synthetic;
    return t;
  }
  const double hi = zeros.back().ordinate;
  return ZeroTable(std::move(zeros), 0.0, hi, ZeroSource::synthetic);
}

double ZeroTable::t_min() const {
  if (!has_range_) throw std::runtime_error("ZeroTable: no height range");
  return t_min_;
}

double ZeroTable::t_max() const {
  if (!has_range_) throw std::runtime_error("ZeroTable: no height range");
  return t_max_;
}

bool ZeroTable::certified_on(double lo, double hi) const {
  if (!has_range_) return false;
  if (lo < t_min_ - 1e-9 || hi > t_max_ + 1e-9) return false;
  for (const Window& w : uncertified_) {
    if (w.lo < hi && w.hi > lo) return false;
  }
  return true;
}

namespace {
std::vector<CriticalZero>::const_iterator upper_by_ordinate(
    const std::vector<CriticalZero>& zs, double t) {
  return std::upper_bound(
      zs.begin(), zs.end(), t,
      [](double v, const CriticalZero& z) { return v < z.ordinate; });
}
}  // namespace

long long ZeroTable::count_upto(double t) const {
  long long n = 0;
  for (auto it = zeros_.begin(); it != upper_by_ordinate(zeros_, t); ++it) {
    n += it->multiplicity;
  }
  return n;
}

long long ZeroTable::count_in(double lo, double hi) const {
  if (hi <= lo) return 0;
  long long n = 0;
  auto it = upper_by_ordinate(zeros_, lo);
  auto end = upper_by_ordinate(zeros_, hi);
  for (; it != end; ++it) n += it->multiplicity;
  return n;
}

std::vector<double> ZeroTable::expanded_upto(double t) const {
  return expanded_in(0.0, t);
}

std::vector<double> ZeroTable::expanded_in(double lo, double hi) const {
  std::vector<double> out;
  auto it = upper_by_ordinate(zeros_, lo);
  auto end = upper_by_ordinate(zeros_, hi);
  for (; it != end; ++it) {
    for (int m = 0; m < it->multiplicity; ++m) out.push_back(it->ordinate);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Zero finding
// ---------------------------------------------------------------------------

namespace {

constexpr double kFirstGram = 9.6669080561;  // g_{-1}; no zeros below it

double refine_zero(double lo, double z_lo, double hi, double tol) {
  double flo = z_lo;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = hardy_z(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0) == (flo > 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct BlockScan {
  std::vector<std::pair<double, double>> brackets;  // sign-change intervals
};

// Scans [a, b] with n_points+1 equally spaced evaluations.
BlockScan scan_interval(double a, double b, int n_points) {
  BlockScan out;
  double prev_t = a;
  double prev_z = hardy_z(a);
  for (int j = 1; j <= n_points; ++j) {
    const double t = a + (b - a) * j / n_points;
    const double z = hardy_z(t);
    if ((z > 0) != (prev_z > 0)) out.brackets.emplace_back(prev_t, t);
    prev_t = t;
    prev_z = z;
  }
  return out;
}

}  // namespace

ZeroTable find_zeros(double t_min, double t_max,
                     const FindZerosOptions& options) {
  if (!(t_min >= 0.0) || !(t_min < t_max)) {
    throw std::invalid_argument("find_zeros: need 0 <= t_min < t_max");
  }
  if (t_max > kHeightCeiling) {
    throw std::invalid_argument("find_zeros: t_max above height ceiling");
  }

  std::vector<Window> uncertified;

  // Region below g_{-1} holds no zeros (the first ordinate is 14.13...);
  // verify cheaply rather than assume.
  if (t_min < kFirstGram) {
    const double a = std::max(t_min, 1e-3);
    const double b = std::min(t_max, kFirstGram);
    if (b > a) {
      const BlockScan s = scan_interval(a, b, 16);
      if (!s.brackets.empty()) uncertified.push_back({a, b});
    }
    if (t_max <= kFirstGram) {
      return ZeroTable({}, t_min, t_max, ZeroSource::computed);
    }
  }

  const double scan_lo = std::max(t_min, kFirstGram);

  // Gram anchors enclosing [scan_lo, t_max].
  long long n_a = (long long)std::floor(rs_theta(scan_lo) / kPi);
  while (gram_point(n_a) > scan_lo) --n_a;
  n_a = std::max<long long>(n_a, -1);
  long long n_b = (long long)std::ceil(rs_theta(t_max) / kPi);
  while (gram_point(n_b) < t_max) ++n_b;

  // Extend the ends until the anchor Gram points are "good":
  // (-1)^n Z(g_n) > 0 pins N(g_n) = n + 1 at desk heights.
  const auto is_good = [](long long n, double z_at_g) {
    const double s = (n % 2 == 0) ? 1.0 : -1.0;
    return s * z_at_g > 0.0;
  };
  for (int guard = 0; guard < 60; ++guard) {
    if (n_a < 0 || is_good(n_a, hardy_z(gram_point(n_a)))) break;
    --n_a;
  }
  for (int guard = 0; guard < 60; ++guard) {
    if (is_good(n_b, hardy_z(gram_point(n_b)))) break;
    ++n_b;
  }

  const std::size_t n_intervals = (std::size_t)(n_b - n_a);
  std::vector<double> gram(n_intervals + 1);
  for (std::size_t i = 0; i <= n_intervals; ++i) {
    gram[i] = gram_point(n_a + (long long)i);
  }
  std::vector<double> z_at_gram(n_intervals + 1);
  std::vector<BlockScan> scans(n_intervals);
  parallel_chunks(n_intervals, [&](std::size_t i) {
    scans[i] =
        scan_interval(gram[i], gram[i + 1], options.grid_per_gram_interval);
  });
  for (std::size_t i = 0; i <= n_intervals; ++i) {
    z_at_gram[i] = hardy_z(gram[i]);
  }

  std::vector<bool> good(n_intervals + 1);
  for (std::size_t i = 0; i <= n_intervals; ++i) {
    good[i] = is_good(n_a + (long long)i, z_at_gram[i]);
  }
  // Anchor extension above guarantees good endpoints in all ordinary cases;
  // if not, certification below reports the edge blocks.

  std::vector<std::pair<double, double>> brackets;
  std::size_t block_start = 0;
  for (std::size_t i = 1; i <= n_intervals; ++i) {
    if (!good[i] && i != n_intervals) continue;
    const std::size_t block_end = i;  // block spans [block_start, block_end)
    const std::size_t expected = block_end - block_start;
    std::size_t found = 0;
    std::vector<std::pair<double, double>> local;
    for (std::size_t j = block_start; j < block_end; ++j) {
      found += scans[j].brackets.size();
    }
    int density = options.grid_per_gram_interval;
    int rescans = 0;
    while (found != expected && rescans < options.max_rescans) {
      density *= options.rescan_factor;
      found = 0;
      for (std::size_t j = block_start; j < block_end; ++j) {
        scans[j] = scan_interval(gram[j], gram[j + 1], density);
        found += scans[j].brackets.size();
      }
      ++rescans;
    }
    const bool block_certified =
        (found == expected) && good[block_start] && good[block_end];
    if (!block_certified) {
      uncertified.push_back({gram[block_start], gram[block_end]});
    }
    for (std::size_t j = block_start; j < block_end; ++j) {
      local.insert(local.end(), scans[j].brackets.begin(),
                   scans[j].brackets.end());
    }
    brackets.insert(brackets.end(), local.begin(), local.end());
    block_start = block_end;
  }

  std::vector<double> ordinates(brackets.size());
  parallel_chunks(brackets.size(), [&](std::size_t i) {
    const auto [lo, hi] = brackets[i];
    const double z = refine_zero(lo, hardy_z(lo), hi, options.refine_tol);
    ordinates[i] = std::round(z * 1e6) / 1e6;
  });
  std::sort(ordinates.begin(), ordinates.end());

  std::vector<CriticalZero> zeros;
  zeros.reserve(ordinates.size());
  for (double g : ordinates) {
    if (g >= t_min && g <= t_max) zeros.push_back({g, 1});
  }

  ZeroTable table(std::move(zeros), t_min, t_max, ZeroSource::computed);
  for (const Window& w : uncertified) {
    if (w.lo < t_max && w.hi > t_min) {
      table.add_uncertified({std::max(w.lo, t_min), std::min(w.hi, t_max)});
    }
  }
  return table;
}

CountingFunctionValue count_zeros(double big_t, const ZeroTable& table) {
  if (!table.has_height_range() || big_t < table.t_min() ||
      big_t > table.t_max()) {
    throw std::invalid_argument("count_zeros: T outside table height range");
  }
  CountingFunctionValue v;
  v.big_n = table.count_upto(big_t);
  v.smooth_main = smooth_counting_main(big_t);
  v.s_of_t = (double)v.big_n - v.smooth_main;
  return v;
}

// ---------------------------------------------------------------------------
// Import / export
// ---------------------------------------------------------------------------

ZeroTable import_zero_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("import_zero_table: cannot open " + path);
  std::vector<CriticalZero> zeros;
  std::string line;
  std::size_t line_no = 0;
  double prev = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    // Tolerate trailing carriage returns and surrounding blanks.
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
      if (zeros.empty() && in.peek() == EOF) break;
      throw std::runtime_error("import_zero_table: blank line " +
                               std::to_string(line_no) + " in " + path);
    }
    std::size_t e = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(b, e - b + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw std::runtime_error("import_zero_table: parse failure at line " +
                               std::to_string(line_no) + " in " + path);
    }
    if (used != tok.size() || !std::isfinite(v)) {
      throw std::runtime_error("import_zero_table: parse failure at line " +
                               std::to_string(line_no) + " in " + path);
    }
    if (v <= prev) {
      throw std::runtime_error(
          "import_zero_table: monotonicity error at line " +
          std::to_string(line_no) + " in " + path);
    }
    zeros.push_back({v, 1});
    prev = v;
  }
  if (zeros.empty()) {
    // Height range stays undefined-flagged for an empty file.
    return ZeroTable();
  }
  const double lo = zeros.front().ordinate;
  const double hi = zeros.back().ordinate;
  return ZeroTable(std::move(zeros), lo, hi, ZeroSource::imported);
}

void export_zero_table(const ZeroTable& table, const std::string& path) {
  for (const CriticalZero& z : table.zeros()) {
    if (z.multiplicity != 1) {
      // The plain-ordinates format is strictly increasing; a repeated line
      // would not re-import.
      throw std::invalid_argument(
          "export_zero_table: multiplicity > 1 has no file representation");
    }
  }
  {
    std::ofstream out(path);
    if (!out) {
      throw std::runtime_error("export_zero_table: cannot write " + path);
    }
    char buf[64];
    for (const CriticalZero& z : table.zeros()) {
      std::snprintf(buf, sizeof(buf), "%.6f\n", z.ordinate);
      out << buf;
    }
  }
  nlohmann::json sidecar;
  switch (table.source()) {
    case ZeroSource::computed: sidecar["source"] = "computed"; break;
    case ZeroSource::imported: sidecar["source"] = "imported"; break;
    case ZeroSource::synthetic: sidecar["source"] = "synthetic"; break;
  }
  if (table.has_height_range()) {
    sidecar["height_range"] = {table.t_min(), table.t_max()};
  } else {
    sidecar["height_range"] = nullptr;
  }
  long long count = 0;
  for (const CriticalZero& z : table.zeros()) count += z.multiplicity;
  sidecar["count"] = count;
  std::ofstream side(path + ".json");
  if (!side) {
    throw std::runtime_error("export_zero_table: cannot write sidecar for " +
                             path);
  }
  side << sidecar.dump(2) << "\n";
}

}  // namespace zetalab
