#ifndef ZETALAB_ZETA_HPP
#define ZETALAB_ZETA_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace zetalab {

/// Height above which hardy_z refuses to evaluate: the configured method
/// chain (Euler-Maclaurin below kRiemannSiegelSwitch, Riemann-Siegel with
/// four correction terms above) holds the 1e-8 absolute error budget up to
/// here and no further has been validated.
inline constexpr double kHeightCeiling = 1e5;
inline constexpr double kRiemannSiegelSwitch = 400.0;

struct CriticalZero {
  double ordinate;
  int multiplicity = 1;
};

enum class ZeroSource { computed, imported, synthetic };

struct Window {
  double lo;
  double hi;
};

/// Ordered table of critical-line zero ordinates. Ordinates are strictly
/// increasing; multiplicities are >= 1 and only synthetic tables may carry
/// multiplicity > 1 (the finder never claims multiplicities and imported
/// tables are lists of simple ordinates).
class ZeroTable {
 public:
  ZeroTable() = default;
  ZeroTable(std::vector<CriticalZero> zeros, double t_min, double t_max,
            ZeroSource source);

  /// Builds a test-injection table; height range spans the data.
  static ZeroTable synthetic(std::vector<CriticalZero> zeros);

  const std::vector<CriticalZero>& zeros() const { return zeros_; }
  bool empty() const { return zeros_.empty(); }
  std::size_t size() const { return zeros_.size(); }
  ZeroSource source() const { return source_; }
  bool has_height_range() const { return has_range_; }
  double t_min() const;
  double t_max() const;

  const std::vector<Window>& uncertified_windows() const {
    return uncertified_;
  }
  void add_uncertified(Window w) { uncertified_.push_back(w); }
  /// True when [lo, hi] lies inside the height range and meets no
  /// uncertified window.
  bool certified_on(double lo, double hi) const;

  /// Sum of multiplicities over ordinates <= t.
  long long count_upto(double t) const;
  /// Sum of multiplicities over ordinates in (lo, hi].
  long long count_in(double lo, double hi) const;

  /// Ordinates repeated according to multiplicity, restricted to (0, t].
  std::vector<double> expanded_upto(double t) const;
  /// Ordinates repeated according to multiplicity, restricted to (lo, hi].
  std::vector<double> expanded_in(double lo, double hi) const;

 private:
  std::vector<CriticalZero> zeros_;
  std::vector<Window> uncertified_;
  double t_min_ = 0.0;
  double t_max_ = 0.0;
  bool has_range_ = false;
  ZeroSource source_ = ZeroSource::synthetic;
};

struct CountingFunctionValue {
  long long big_n;
  double smooth_main;
  double s_of_t;
};

/// Riemann-Siegel theta: the phase with Z(t) = exp(i theta(t)) zeta(1/2+it).
double rs_theta(double t);
double rs_theta_derivative(double t);

/// zeta(1/2 + it) by Euler-Maclaurin. Works for any 0 <= t <= ceiling but
/// costs O(t); the Z paths below switch to Riemann-Siegel when cheaper.
std::complex<double> zeta_half_line(double t);

/// exp(i theta(t)) * zeta(1/2 + it) as computed internally; real up to
/// rounding, and its real part is Z(t) on the Euler-Maclaurin route.
std::complex<double> rotated_zeta(double t);

/// Hardy Z-function, absolute error <= 1e-8 for t <= kHeightCeiling.
double hardy_z(double t);

/// Z'(t) by central differences (h = 1e-5), cross-checked in tests against
/// Richardson extrapolation.
double hardy_z_derivative(double t);

/// Smooth main term of the zero counting function:
/// (T/2pi) log(T/2pi) - T/2pi + 7/8.
double smooth_counting_main(double big_t);

/// n-th Gram point: the solution of theta(g_n) = n pi, n >= -1.
double gram_point(long long n);

struct FindZerosOptions {
  int grid_per_gram_interval = 4;
  int rescan_factor = 4;
  int max_rescans = 3;
  double refine_tol = 1e-9;  // bracket width before rounding to 1e-6
};

/// Locates all zeros in [t_min, t_max] by sign changes of Z on a
/// Gram-point-seeded grid, refines brackets by bisection, and certifies
/// completeness against the counting function between Gram anchors where
/// (-1)^n Z(g_n) > 0. Windows that cannot be certified after rescans are
/// recorded on the table instead of being guessed at.
ZeroTable find_zeros(double t_min, double t_max,
                     const FindZerosOptions& options = {});

/// Exact multiplicity count over the table up to T, with the Eq.-style
/// smooth main term and the residual s_of_t = big_n - smooth_main.
CountingFunctionValue count_zeros(double big_t, const ZeroTable& table);

/// Reads a plain-ordinates file: UTF-8 text, one decimal ordinate per line,
/// strictly increasing. Parse or monotonicity failures report the line.
ZeroTable import_zero_table(const std::string& path);

/// Writes the plain-ordinates format (6 decimals) plus a JSON sidecar
/// at path + ".json" with {source, height_range, count}.
void export_zero_table(const ZeroTable& table, const std::string& path);

}  // namespace zetalab

#endif
