#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace qscatter::detail {

//! Golden-section search for the maximum of a unimodal f on [a, b].
template <typename F>
double golden_section_max(const F &f, double a, double b, double tol = 1e-12) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (std::abs(b - a) > tol * (1.0 + std::abs(a) + std::abs(b))) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return std::max({f(a), f(b), fc, fd});
}

//! Maximum of a piecewise-smooth f on [a, b]: locate the best of n+1 samples,
//! then refine by golden section on the bracketing cell pair.
template <typename F>
double maximize_sampled(const F &f, double a, double b, std::size_t n) {
  const double step = (b - a) / static_cast<double>(n);
  std::size_t best_i = 0;
  double best = f(a);
  for (std::size_t i = 1; i <= n; ++i) {
    const double v = f(i == n ? b : a + step * static_cast<double>(i));
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  const double lo = best_i == 0 ? a : a + step * static_cast<double>(best_i - 1);
  const double hi = best_i == n ? b : a + step * static_cast<double>(best_i + 1);
  return std::max(best, golden_section_max(f, lo, hi));
}

} // namespace qscatter::detail
