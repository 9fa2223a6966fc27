#include "zetalab/spacing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zetalab/numerics.hpp"

namespace zetalab {

namespace {

void require_certified(const ZeroTable& table, double lo, double hi,
                       const char* who) {
  if (!table.certified_on(lo, hi)) {
    throw std::invalid_argument(std::string(who) +
                                ": table not certified on requested range");
  }
}

}  // namespace

GapStatistics gap_statistics(const ZeroTable& table, double big_t,
                             bool normalize_by_log_gamma) {
  require_certified(table, table.t_min(), big_t, "gap_statistics");
  GapStatistics out;
  out.big_t = big_t;
  out.min_normalized_gap = std::numeric_limits<double>::infinity();
  out.min_distinct_gap = std::numeric_limits<double>::infinity();
  const double scale_t = std::log(big_t) / kTwoPi;

  // Counting multiplicity: each ordinate of multiplicity m contributes m-1
  // zero-length spacings plus one spacing to the next distinct ordinate.
  const std::vector<double> all = table.expanded_upto(table.t_max());
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (all[i] > big_t) break;
    const double scale =
        normalize_by_log_gamma ? std::log(all[i]) / kTwoPi : scale_t;
    const double g = (all[i + 1] - all[i]) * scale;
    out.normalized_gaps.push_back(g);
    out.min_normalized_gap = std::min(out.min_normalized_gap, g);
  }
  const auto& zs = table.zeros();
  for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
    if (zs[i].ordinate > big_t) break;
    const double scale =
        normalize_by_log_gamma ? std::log(zs[i].ordinate) / kTwoPi : scale_t;
    const double g = (zs[i + 1].ordinate - zs[i].ordinate) * scale;
    out.min_distinct_gap = std::min(out.min_distinct_gap, g);
  }
  return out;
}

double distribution_d(double lambda, double big_t, const ZeroTable& table,
                      bool distinct) {
  if (lambda < 0.0) throw std::invalid_argument("distribution_d: lambda >= 0");
  require_certified(table, table.t_min(), big_t, "distribution_d");
  const double window = kTwoPi * lambda / std::log(big_t);
  const long long big_n = table.count_upto(big_t);
  if (big_n == 0) return 0.0;
  long long hits = 0;
  if (distinct) {
    const auto& zs = table.zeros();
    for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
      if (zs[i].ordinate > big_t) break;
      if (zs[i + 1].ordinate - zs[i].ordinate <= window) ++hits;
    }
  } else {
    const std::vector<double> all = table.expanded_upto(table.t_max());
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i] > big_t) break;
      if (all[i + 1] - all[i] <= window) ++hits;
    }
  }
  return (double)hits / (double)big_n;
}

PairDifferences::PairDifferences(const ZeroTable& table, double big_t,
                                 double cutoff)
    : big_t_(big_t) {
  require_certified(table, table.t_min(), big_t, "PairDifferences");
  const std::vector<double> g = table.expanded_upto(big_t);
  n_ = (long long)g.size();
  // Tail truncation is only taken where the weight tail is provably below
  // 1e-10, which at desk heights (T <= cutoff) means no truncation at all.
  if (big_t > cutoff) {
    throw std::invalid_argument(
        "PairDifferences: T beyond the exact-pair-sum cutoff");
  }
  if (n_ > 30000) {
    throw std::invalid_argument("PairDifferences: pair list too large");
  }
  diffs_.reserve((std::size_t)(n_ * (n_ - 1) / 2));
  for (std::size_t k = 1; k < g.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) diffs_.push_back(g[k] - g[j]);
  }
}

double form_factor(double alpha, const PairDifferences& pairs) {
  const long long n = pairs.zero_count();
  if (n == 0) throw std::invalid_argument("form_factor: empty table");
  const double c = alpha * std::log(pairs.big_t());
  const std::vector<double>& d = pairs.diffs();

  const std::size_t n_chunks = d.size() > 100000 ? 64 : 1;
  std::vector<double> partial(n_chunks, 0.0);
  parallel_chunks(n_chunks, [&](std::size_t chunk) {
    const std::size_t lo = d.size() * chunk / n_chunks;
    const std::size_t hi = d.size() * (chunk + 1) / n_chunks;
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      acc += pair_weight(d[i]) * std::cos(c * d[i]);
    }
    partial[chunk] = acc;
  });
  double cos_sum = 0.0;
  for (double p : partial) cos_sum += p;
  return ((double)n + 2.0 * cos_sum) / (double)n;
}

double form_factor(double alpha, double big_t, const ZeroTable& table) {
  const PairDifferences pairs(table, big_t);
  return form_factor(alpha, pairs);
}

FormFactorComplex form_factor_ordered(double alpha, double big_t,
                                      const ZeroTable& table) {
  require_certified(table, table.t_min(), big_t, "form_factor_ordered");
  const std::vector<double> g = table.expanded_upto(big_t);
  if (g.empty()) {
    throw std::invalid_argument("form_factor_ordered: empty table");
  }
  const double c = alpha * std::log(big_t);
  double re = 0.0, im = 0.0;
  for (double gj : g) {
    for (double gk : g) {
      const double u = gj - gk;
      const double w = pair_weight(u);
      re += w * std::cos(c * u);
      im += w * std::sin(c * u);
    }
  }
  return {re / (double)g.size(), im / (double)g.size()};
}

FormFactorGrid form_factor_grid(const std::vector<double>& alphas,
                                double big_t, const ZeroTable& table) {
  const PairDifferences pairs(table, big_t);
  FormFactorGrid grid;
  grid.alphas = alphas;
  grid.big_t = big_t;
  grid.values.resize(alphas.size());
  // Parallel across alphas; each evaluation runs single-chunk.
  parallel_chunks(alphas.size(), [&](std::size_t i) {
    const double c = alphas[i] * std::log(big_t);
    double acc = 0.0;
    for (double u : pairs.diffs()) acc += pair_weight(u) * std::cos(c * u);
    grid.values[i] =
        ((double)pairs.zero_count() + 2.0 * acc) / (double)pairs.zero_count();
  });
  return grid;
}

ConvolutionCheck convolution_check(const TestFunction& r, double big_t,
                                   const ZeroTable& table, double grid_step) {
  if (!(grid_step > 0.0)) {
    throw std::invalid_argument("convolution_check: bad grid step");
  }
  if (!(r.transform_support > 0.0) ||
      !std::isfinite(r.transform_support)) {
    throw std::invalid_argument(
        "convolution_check: transform support must be finite");
  }
  const PairDifferences pairs(table, big_t);
  const long long n = pairs.zero_count();
  if (n == 0) throw std::invalid_argument("convolution_check: empty table");

  const double scale = std::log(big_t) / kTwoPi;
  double lhs = (double)n * r.value(0.0) * pair_weight(0.0);
  {
    const std::size_t n_chunks = pairs.diffs().size() > 100000 ? 64 : 1;
    std::vector<double> partial(n_chunks, 0.0);
    parallel_chunks(n_chunks, [&](std::size_t chunk) {
      const auto& d = pairs.diffs();
      const std::size_t lo = d.size() * chunk / n_chunks;
      const std::size_t hi = d.size() * (chunk + 1) / n_chunks;
      double acc = 0.0;
      for (std::size_t i = lo; i < hi; ++i) {
        acc += r.value(d[i] * scale) * pair_weight(d[i]);
      }
      partial[chunk] = acc;
    });
    for (double p : partial) lhs += 2.0 * p;
  }

  // F on a fixed grid over the transform support, then composite Simpson.
  const double sup = r.transform_support;
  std::size_t n_intervals = (std::size_t)std::ceil(sup / grid_step);
  if (n_intervals % 2 == 1) ++n_intervals;
  if (n_intervals < 2) n_intervals = 2;
  const double h = sup / (double)n_intervals;
  std::vector<double> g(n_intervals + 1);
  parallel_chunks(n_intervals + 1, [&](std::size_t i) {
    const double a = h * (double)i;
    const double c = a * std::log(big_t);
    double acc = 0.0;
    for (double u : pairs.diffs()) acc += pair_weight(u) * std::cos(c * u);
    const double f = ((double)n + 2.0 * acc) / (double)n;
    g[i] = r.transform(a) * f;
  });
  double integral = g[0] + g[n_intervals];
  for (std::size_t i = 1; i < n_intervals; ++i) {
    integral += g[i] * (i % 2 == 1 ? 4.0 : 2.0);
  }
  integral *= h / 3.0;
  const double rhs = (double)n * 2.0 * integral;  // r_hat F is even

  ConvolutionCheck out;
  out.lhs = lhs;
  out.rhs = rhs;
  out.relative_residual = std::abs(lhs - rhs) / std::abs(lhs);
  return out;
}

SpacingCount n_of_t(double t, double lambda, double big_t,
                    const ZeroTable& table) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("n_of_t: lambda >= 0");
  const double window = kTwoPi * lambda / std::log(big_t);
  return {t, lambda, table.count_in(t, t + window)};
}

namespace {

void require_forward_coverage(const ZeroTable& table, double big_t,
                              double window, const char* who) {
  require_certified(table, table.t_min(), big_t, who);
  if (table.t_max() < big_t + window - 1e-12) {
    throw std::invalid_argument(
        std::string(who) +
        ": table must extend one window beyond T for forward counts");
  }
}

double ipow(double x, int e) {
  double acc = 1.0;
  for (int i = 0; i < e; ++i) acc *= x;
  return acc;
}

}  // namespace

MomentResult moment_sum(int k, double big_t, const ZeroTable& table) {
  if (k < 1 || k > 4) throw std::invalid_argument("moment_sum: 1 <= k <= 4");
  const double window = kTwoPi * (double)k / std::log(big_t);
  require_forward_coverage(table, big_t, window, "moment_sum");
  double sum = 0.0;
  for (double g : table.expanded_upto(big_t)) {
    const long long n = table.count_in(g, g + window);
    sum += ipow((double)n, 2 * k);
  }
  return {sum, sum / (big_t * std::log(big_t))};
}

MomentResult moment_integral(int k, double big_t, const ZeroTable& table) {
  if (k < 1 || k > 4) {
    throw std::invalid_argument("moment_integral: 1 <= k <= 4");
  }
  const double window = kTwoPi * (double)k / std::log(big_t);
  require_forward_coverage(table, big_t, window, "moment_integral");

  // n(t, k) is piecewise constant with breakpoints where a zero enters the
  // window (gamma - window) or leaves it (gamma).
  std::vector<double> cuts;
  cuts.push_back(0.0);
  cuts.push_back(big_t);
  for (const CriticalZero& z : table.zeros()) {
    const double enter = z.ordinate - window;
    if (enter > 0.0 && enter < big_t) cuts.push_back(enter);
    if (z.ordinate > 0.0 && z.ordinate < big_t) cuts.push_back(z.ordinate);
  }
  std::sort(cuts.begin(), cuts.end());
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double len = cuts[i + 1] - cuts[i];
    if (len <= 0.0) continue;
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const long long n = table.count_in(mid, mid + window);
    integral += len * ipow((double)n, 2 * k);
  }
  return {integral, integral / big_t};
}

Prop1Balance proposition1_balance(double lambda, const TestFunction& r,
                                  double big_t, const ZeroTable& table) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("proposition1_balance: lambda > 0");
  }
  require_certified(table, table.t_min(), big_t, "proposition1_balance");
  const double window = kTwoPi * lambda / std::log(big_t);

  Prop1Balance out{0.0, 0.0, 0.0};
  const auto& zs = table.zeros();
  std::size_t count = 0;
  while (count < zs.size() && zs[count].ordinate <= big_t) ++count;
  for (std::size_t i = 0; i < count; ++i) {
    const double m = (double)zs[i].multiplicity;
    out.multiplicity_term += m * (m - 1.0);
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const double d = zs[j].ordinate - zs[i].ordinate;
      if (d > window) break;
      out.close_pair_term +=
          2.0 * (double)zs[i].multiplicity * (double)zs[j].multiplicity;
    }
  }
  out.rhs = c_functional(lambda, r) * (double)table.count_upto(big_t);
  return out;
}

}  // namespace zetalab
