#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature on finite intervals.
//
// Integrands are evaluated in batches: one call per subinterval with all 15
// nodes, so vectorised integrands (see kernels/cauchy.hpp) see contiguous
// abscissae.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <span>
#include <vector>

namespace rankone {

template <class T>
using BatchIntegrand = std::function<void(std::span<const double> x, std::span<T> fx)>;

struct QuadratureOptions {
  double abs_tol = 1e-9;
  double rel_tol = 0.0;
  std::size_t max_intervals = 20000;
  // Subintervals whose largest sampled |f| exceeds peak_factor times the mean
  // |f| over the whole range are bisected until narrower than
  // min_peak_width * (b - a), whatever their error estimate.
  double peak_factor = 10.0;
  double min_peak_width = 1e-3;
  // Extra partition points (e.g. known singular locations); points outside
  // (a, b) are ignored.
  std::vector<double> breakpoints;
};

template <class T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  std::size_t intervals = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

// Kronrod 15-point abscissae (non-negative half) and weights, with the
// embedded Gauss 7-point weights on the odd-indexed abscissae.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class T>
struct Segment {
  double a;
  double b;
  T value;
  double error;
  double peak;

  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class T>
Segment<T> gk15(const BatchIntegrand<T>& f, double a, double b, std::array<double, 15>& x,
                std::array<T, 15>& fx) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  for (std::size_t j = 0; j < 7; ++j) {
    x[2 * j] = c - h * kXgk[j];
    x[2 * j + 1] = c + h * kXgk[j];
  }
  x[14] = c;
  f(std::span<const double>(x), std::span<T>(fx));
  T kronrod = fx[14] * kWgk[7];
  T gauss = fx[14] * kWg[3];
  double peak = magnitude(fx[14]);
  for (std::size_t j = 0; j < 7; ++j) {
    const T pair = fx[2 * j] + fx[2 * j + 1];
    kronrod += pair * kWgk[j];
    if (j % 2 == 1) gauss += pair * kWg[j / 2];
    peak = std::max({peak, magnitude(fx[2 * j]), magnitude(fx[2 * j + 1])});
  }
  return {a, b, kronrod * h, magnitude((kronrod - gauss) * h), peak};
}

}  // namespace detail

template <class T>
QuadratureResult<T> integrate_batch(const BatchIntegrand<T>& f, double a, double b,
                                    const QuadratureOptions& opts = {}) {
  QuadratureResult<T> res;
  if (!(b > a)) {
    res.converged = true;
    return res;
  }
  std::array<double, 15> x{};
  std::array<T, 15> fx{};

  std::vector<double> cuts{a};
  for (double p : opts.breakpoints)
    if (p > a && p < b) cuts.push_back(p);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<detail::Segment<T>> heap;
  T total{};
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    heap.push_back(detail::gk15(f, cuts[i], cuts[i + 1], x, fx));
    total += heap.back().value;
    total_err += heap.back().error;
    res.evaluations += 15;
  }
  std::make_heap(heap.begin(), heap.end());

  const double width = b - a;
  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * detail::magnitude(total)); };
  auto is_peaked = [&](const detail::Segment<T>& s) {
    const double mean = detail::magnitude(total) / width;
    return s.peak > opts.peak_factor * mean && (s.b - s.a) > opts.min_peak_width * width &&
           s.error > 1e-3 * target();
  };

  // Forced peak refinement: split peaked segments first.
  {
    std::vector<detail::Segment<T>> work(heap.begin(), heap.end()), keep;
    heap.clear();
    while (!work.empty() && work.size() + keep.size() < opts.max_intervals) {
      auto s = work.back();
      work.pop_back();
      if (!is_peaked(s)) {
        keep.push_back(s);
        continue;
      }
      const double mid = 0.5 * (s.a + s.b);
      auto l = detail::gk15(f, s.a, mid, x, fx);
      auto r = detail::gk15(f, mid, s.b, x, fx);
      res.evaluations += 30;
      total += l.value + r.value - s.value;
      total_err += l.error + r.error - s.error;
      work.push_back(l);
      work.push_back(r);
    }
    keep.insert(keep.end(), work.begin(), work.end());
    heap = std::move(keep);
    std::make_heap(heap.begin(), heap.end());
  }

  while (total_err > target() && heap.size() < opts.max_intervals) {
    std::pop_heap(heap.begin(), heap.end());
    const auto s = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (s.a + s.b);
    if (!(mid > s.a && mid < s.b)) {  // cannot subdivide further
      heap.push_back(s);
      std::push_heap(heap.begin(), heap.end());
      break;
    }
    auto l = detail::gk15(f, s.a, mid, x, fx);
    auto r = detail::gk15(f, mid, s.b, x, fx);
    res.evaluations += 30;
    total += l.value + r.value - s.value;
    total_err += l.error + r.error - s.error;
    heap.push_back(l);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(r);
    std::push_heap(heap.begin(), heap.end());
  }

  // Re-sum to shed the drift of incremental updates.
  T sum{};
  double err = 0.0;
  for (const auto& s : heap) {
    sum += s.value;
    err += s.error;
  }
  res.value = sum;
  res.error = err;
  res.intervals = heap.size();
  res.converged = err <= target();
  return res;
}

template <class T, class F>
QuadratureResult<T> integrate(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
  BatchIntegrand<T> batch = [&f](std::span<const double> xs, std::span<T> out) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
  };
  return integrate_batch<T>(batch, a, b, opts);
}

}  // namespace rankone
