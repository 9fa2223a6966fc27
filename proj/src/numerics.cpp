#include "zetalab/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace zetalab {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = simpson(a, fa, b, fb, fm);
  return adaptive_step(f, a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
}

const GaussLegendreRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on Legendre polynomials, seeded by the Chebyshev
  // approximation to the k-th root.
  for (int k = 0; k < (n + 1) / 2; ++k) {
    long double x = std::cos(kPi * (k + 0.75L) / (n + 0.5L));
    long double pp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L, p1 = x;
      for (int j = 2; j <= n; ++j) {
        long double p2 = ((2.0L * j - 1.0L) * x * p1 - (j - 1.0L) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0L);
      long double dx = p1 / pp;
      x -= dx;
      if (std::abs((double)dx) < 1e-17) break;
    }
    rule.nodes[k] = (double)(-x);
    rule.nodes[n - 1 - k] = (double)x;
    const double w = (double)(2.0L / ((1.0L - x * x) * pp * pp));
    rule.weights[k] = w;
    rule.weights[n - 1 - k] = w;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

BisectionResult bisect_to_target(const std::function<double(double)>& f,
                                 double lo, double hi, double target,
                                 double value_tol, double x_tol) {
  if (!(lo < hi)) throw std::invalid_argument("bisect: empty bracket");
  double flo = f(lo) - target;
  double fhi = f(hi) - target;
  if (flo == 0.0) return {lo, target, 0};
  if (fhi == 0.0) return {hi, target, 0};
  if ((flo > 0) == (fhi > 0)) {
    throw std::invalid_argument("bisect: no sign change in bracket");
  }
  int iters = 0;
  double mid = 0.5 * (lo + hi);
  double fmid = 0.0;
  while (hi - lo > x_tol) {
    mid = 0.5 * (lo + hi);
    fmid = f(mid) - target;
    ++iters;
    if (std::abs(fmid) <= value_tol) return {mid, fmid + target, iters};
    if ((fmid > 0) == (flo > 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
    if (iters > 200) break;
  }
  mid = 0.5 * (lo + hi);
  return {mid, f(mid), iters};
}

void parallel_chunks(std::size_t n_chunks,
                     const std::function<void(std::size_t)>& work) {
  if (n_chunks == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const std::size_t n_threads = std::min<std::size_t>(hw, n_chunks);
  if (n_threads <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) work(c);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr error;
  for (std::size_t t = 0; t < n_threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t c;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (next >= n_chunks || error) return;
          c = next++;
        }
        try {
          work(c);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace zetalab
