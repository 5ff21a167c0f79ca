#include "rankone/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "rankone/error.hpp"
#include "rankone/kernels/cauchy.hpp"

namespace rankone {

namespace {

// \int_a^b rho(t) / (z - t) dt in closed form: rho(t) = rho(z) + (t - z) q(t).
Complex density_transform(const DensityPiece& d, Complex z) {
  const auto& c = d.rho.coeffs;
  if (c.empty()) return 0.0;
  const std::size_t n = c.size() - 1;
  std::vector<Complex> q(n, 0.0);
  Complex carry = c[n];
  for (std::size_t k = n; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + z * carry;
  }
  const Complex rho_z = carry;
  Complex int_q = 0.0;
  Complex acc_b = 0.0, acc_a = 0.0;
  for (std::size_t k = q.size(); k-- > 0;) {
    const Complex ck = q[k] / static_cast<double>(k + 1);
    acc_b = (acc_b + ck) * d.b;
    acc_a = (acc_a + ck) * d.a;
  }
  int_q = acc_b - acc_a;
  return rho_z * std::log((z - d.a) / (z - d.b)) - int_q;
}

double distance_to_support(const RealLineMeasure& nu, Complex z) {
  double dist = std::numeric_limits<double>::infinity();
  for (const auto& a : nu.atoms())
    if (a.w != 0.0) dist = std::min(dist, std::abs(z - a.t));
  for (const auto& d : nu.densities()) {
    if (d.rho.is_zero()) continue;
    const double x = std::clamp(z.real(), d.a, d.b);
    dist = std::min(dist, std::abs(z - x));
  }
  return dist;
}

struct AtomArrays {
  std::vector<double> t, w_re, w_im;

  explicit AtomArrays(const RealLineMeasure& nu) {
    for (const auto& a : nu.atoms()) {
      t.push_back(a.t);
      w_re.push_back(a.w.real());
      w_im.push_back(a.w.imag());
    }
  }

  kernels::CauchyNodes nodes() const { return {t, w_re, w_im}; }
};

}  // namespace

Complex transform(const RealLineMeasure& nu, Complex z, const TransformOptions& opts) {
  if (distance_to_support(nu, z) < opts.tol_support) {
    std::ostringstream os;
    os << "Stieltjes transform evaluated at z = " << z.real() << (z.imag() < 0 ? "" : "+")
       << z.imag() << "i, on the support";
    throw Error(ErrorCode::SingularPoint, os.str());
  }
  Complex f = 0.0;
  for (const auto& a : nu.atoms()) f += a.w / (z - a.t);
  for (const auto& d : nu.densities()) {
    if (opts.method == DensityMethod::ClosedForm) {
      f += density_transform(d, z);
    } else {
      QuadratureOptions qo;
      qo.abs_tol = opts.tol_quad;
      auto r = integrate<Complex>([&](double t) { return d.rho(t) / (z - t); }, d.a, d.b, qo);
      f += r.value;
    }
  }
  return f;
}

void transform_batch(const RealLineMeasure& nu, std::span<const double> x, double y,
                     std::span<Complex> out) {
  const std::size_t m = x.size();
  std::vector<double> zi(m, y), re(m), im(m);
  const AtomArrays atoms(nu);
  kernels::cauchy_sum(atoms.nodes(), kernels::CauchyPoints{x, zi}, kernels::CauchyOut{re, im});
  for (std::size_t k = 0; k < m; ++k) {
    Complex f(re[k], im[k]);
    const Complex z(x[k], y);
    for (const auto& d : nu.densities()) f += density_transform(d, z);
    out[k] = f;
  }
}

LineTransform line_transform(const RealLineMeasure& nu) {
  return [nu](std::span<const double> x, double y, std::span<Complex> out) {
    transform_batch(nu, x, y, out);
  };
}

LineTransform line_transform(std::function<Complex(Complex)> f) {
  return [f = std::move(f)](std::span<const double> x, double y, std::span<Complex> out) {
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = f(Complex(x[k], y));
  };
}

InversionResult invert_interval(const LineTransform& f, double a, double b,
                                const InversionOptions& opts) {
  if (!(a < b)) throw Error(ErrorCode::DomainError, "inversion interval needs a < b");
  if (opts.k_max < 1 || !(opts.y0 > 0.0))
    throw Error(ErrorCode::DomainError, "inversion needs y0 > 0 and k_max >= 1");

  InversionResult res;
  QuadratureOptions qo;
  qo.abs_tol = opts.tol_quad;
  qo.max_intervals = 50000;
  qo.breakpoints = opts.breakpoints;
  double quad_err = 0.0;
  std::vector<Complex> buf;
  for (int k = 0; k <= opts.k_max; ++k) {
    const double y = std::ldexp(opts.y0, -k);
    BatchIntegrand<double> g = [&](std::span<const double> xs, std::span<double> out) {
      buf.resize(xs.size());
      f(xs, y, buf);
      for (std::size_t i = 0; i < xs.size(); ++i) out[i] = -buf[i].imag() / std::numbers::pi;
    };
    const auto q = integrate_batch<double>(g, a, b, qo);
    res.y.push_back(y);
    res.raw.push_back(q.value);
    quad_err = std::max(quad_err, q.error);
  }
  for (std::size_t k = 0; k + 1 < res.raw.size(); ++k)
    res.richardson.push_back(2.0 * res.raw[k + 1] - res.raw[k]);

  const std::size_t last = res.richardson.size() - 1;
  res.estimate = res.richardson[last];
  const double step = last > 0 ? std::abs(res.richardson[last] - res.richardson[last - 1])
                               : std::abs(res.raw[1] - res.raw[0]);
  res.error_estimate = step + 3.0 * quad_err;
  res.converged = res.error_estimate <= opts.convergence_threshold;
  return res;
}

InversionResult invert_interval(const std::function<Complex(Complex)>& f, double a, double b,
                                const InversionOptions& opts) {
  return invert_interval(line_transform(f), a, b, opts);
}

InversionResult invert_measure(const RealLineMeasure& nu, double a, double b,
                               InversionOptions opts) {
  for (const auto& at : nu.atoms()) opts.breakpoints.push_back(at.t);
  for (const auto& d : nu.densities()) {
    opts.breakpoints.push_back(d.a);
    opts.breakpoints.push_back(d.b);
  }
  return invert_interval(line_transform(nu), a, b, opts);
}

const char* to_string(Vanishing v) noexcept {
  switch (v) {
    case Vanishing::Vanishes: return "vanishes";
    case Vanishing::DoesNotVanish: return "does_not_vanish";
    case Vanishing::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

ContinuityProbe probe_continuity(const LineTransform& f, double a, double b,
                                 const DetectorOptions& opts) {
  ContinuityProbe p;
  const std::size_t n = std::max<std::size_t>(opts.probe_points, 1);
  std::vector<double> xs(n);
  for (std::size_t j = 0; j < n; ++j)
    xs[j] = a + (b - a) * (static_cast<double>(j) + 0.5) / static_cast<double>(n);
  std::vector<Complex> f_y(n), f_half(n);
  for (int l = 0; l < opts.probe_levels; ++l) {
    const double y = std::ldexp(opts.probe_y0, -l);
    f(xs, y, f_y);
    f(xs, 0.5 * y, f_half);
    double sup = 0.0;
    for (std::size_t j = 0; j < n; ++j) sup = std::max(sup, std::abs(f_y[j] - f_half[j]));
    p.y.push_back(y);
    p.sup_jump.push_back(sup);
  }
  p.decays = !p.sup_jump.empty() && (p.sup_jump.back() <= opts.decay_ratio * p.sup_jump.front() ||
                                     p.sup_jump.back() <= opts.tol_mass);
  return p;
}

}  // namespace

DetectorReport vanishing_detector(const LineTransform& f_re, const LineTransform& f_im, double a,
                                  double b, const DetectorOptions& opts) {
  if (!(a < b)) throw Error(ErrorCode::DomainError, "detector interval needs a < b");
  DetectorReport rep;
  rep.continuity_re = probe_continuity(f_re, a, b, opts);
  rep.continuity_im = probe_continuity(f_im, a, b, opts);

  const std::size_t parts = std::max<std::size_t>(opts.subintervals, 1);
  bool big_converged = false;
  bool all_small = true;
  for (std::size_t i = 0; i < parts; ++i) {
    const double lo = a + (b - a) * static_cast<double>(i) / static_cast<double>(parts);
    const double hi = a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(parts);
    const auto r = invert_interval(f_re, lo, hi, opts.inversion);
    const auto m = invert_interval(f_im, lo, hi, opts.inversion);
    SubintervalMass sm{lo, hi, r.estimate, m.estimate, std::max(r.error_estimate, m.error_estimate),
                       r.converged && m.converged};
    const double size = std::max(std::abs(sm.re), std::abs(sm.im));
    rep.max_abs_mass = std::max(rep.max_abs_mass, size);
    if (size > opts.tol_mass) {
      all_small = false;
      if (sm.error < 0.5 * size || sm.converged) big_converged = true;
    }
    rep.masses.push_back(sm);
  }
  if (!all_small && big_converged) {
    rep.verdict = Vanishing::DoesNotVanish;
  } else if (all_small && rep.continuity_re.decays && rep.continuity_im.decays) {
    rep.verdict = Vanishing::Vanishes;
  } else {
    rep.verdict = Vanishing::Inconclusive;
  }
  return rep;
}

DetectorReport vanishing_detector(const RealLineMeasure& nu, double a, double b,
                                  const DetectorOptions& opts) {
  DetectorOptions o = opts;
  for (const auto& at : nu.atoms()) o.inversion.breakpoints.push_back(at.t);
  for (const auto& d : nu.densities()) {
    o.inversion.breakpoints.push_back(d.a);
    o.inversion.breakpoints.push_back(d.b);
  }
  return vanishing_detector(line_transform(nu.real_part()), line_transform(nu.imag_part()), a, b, o);
}

namespace {

using Exact = boost::multiprecision::cpp_rational;

Exact exact(double v) { return Exact(v); }

// Exact \int_lo^hi p(t) dt for one real coefficient sequence.
Exact exact_poly_integral(const std::vector<double>& c, const Exact& lo, const Exact& hi) {
  Exact acc_hi = 0, acc_lo = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    const Exact ck = exact(c[k]) / Exact(static_cast<long long>(k + 1));
    acc_hi = (acc_hi + ck) * hi;
    acc_lo = (acc_lo + ck) * lo;
  }
  return acc_hi - acc_lo;
}

}  // namespace

bool is_zero_by_interval_family(const RealLineMeasure& nu, double lo, double hi,
                                std::vector<double> grid) {
  for (double g : grid) {
    if (!(g > lo && g < hi)) {
      std::ostringstream os;
      os << "grid point " << g << " is outside (" << lo << ", " << hi << ")";
      throw Error(ErrorCode::DomainError, os.str());
    }
    for (const auto& a : nu.atoms()) {
      if (a.t == g && a.w != 0.0) {
        std::ostringstream os;
        os << "grid point " << g << " coincides with an atom";
        throw Error(ErrorCode::GridHitsAtom, os.str());
      }
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const Exact alpha = exact(grid[i]);
    const Exact beta = exact(grid[i + 1]);
    Exact re = 0, im = 0;
    for (const auto& a : nu.atoms()) {
      if (a.t > grid[i] && a.t < grid[i + 1]) {
        re += exact(a.w.real());
        im += exact(a.w.imag());
      }
    }
    for (const auto& d : nu.densities()) {
      const Exact l = std::max(alpha, exact(d.a));
      const Exact h = std::min(beta, exact(d.b));
      if (!(h > l)) continue;
      std::vector<double> cr, ci;
      for (const auto& c : d.rho.coeffs) {
        cr.push_back(c.real());
        ci.push_back(c.imag());
      }
      re += exact_poly_integral(cr, l, h);
      im += exact_poly_integral(ci, l, h);
    }
    if (re != 0 || im != 0) return false;
  }
  return true;
}

}  // namespace rankone
