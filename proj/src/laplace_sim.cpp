#include "rankone/laplace_sim.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "rankone/error.hpp"
#include "rankone/gap_params.hpp"
#include "rankone/quadrature.hpp"

namespace rankone {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidModel, what); }

// \int_a^b g(s) ds for smooth g whose exponential factor changes by at most
// e^2 across each Gauss-Legendre panel.
template <class G>
Complex panel_integral(G&& g, double a, double b, double rate) {
  using Gauss = boost::math::quadrature::gauss<double, 16>;
  const auto panels = static_cast<int>(std::ceil(std::abs(rate) * (b - a) / 2.0)) + 1;
  const double h = (b - a) / panels;
  Complex sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double hi = (p + 1 == panels) ? b : lo + h;
    const double re = Gauss::integrate([&](double s) { return g(s).real(); }, lo, hi);
    const double im = Gauss::integrate([&](double s) { return g(s).imag(); }, lo, hi);
    sum += Complex(re, im);
  }
  return sum;
}

double remainder_value(const SpectralModel& m, double t) {
  return m.tempered_amplitude * (1.0 + t) * std::exp(-0.5 * m.d * t) * std::cos(t);
}

}  // namespace

void validate_model(const SpectralModel& model) {
  const int d = model.d;
  if (d < 1) invalid("model needs d >= 1");
  if (!(model.delta > 0.5 * d && model.delta <= d)) invalid("model needs delta in (d/2, d]");
  if (!(model.tempered_amplitude >= 0.0)) invalid("tempered_amplitude must be >= 0");
  std::set<std::vector<std::int64_t>> seen;
  for (const auto& ch : model.channels) {
    if (ch.sigma.n() != d) invalid("channel " + ch.sigma.to_string() + " is not an SO(d) weight");
    if (!seen.insert(ch.sigma.entries()).second)
      invalid("duplicate channel " + ch.sigma.to_string());
    const auto I = interval_I(ch.sigma, d);
    const double hi = std::min(I.right, model.delta);
    auto outside = [&](const std::string& piece) {
      std::ostringstream os;
      os << piece << " of channel " << ch.sigma.to_string() << " leaves (" << I.left << ", " << hi
         << "]";
      throw Error(ErrorCode::SupportOutsideInterval, os.str());
    };
    for (const auto& a : ch.measure.atoms()) {
      if (a.w == 0.0) continue;
      if (!(a.t > I.left && a.t <= hi)) {
        std::ostringstream os;
        os << "atom at " << a.t;
        outside(os.str());
      }
    }
    for (const auto& p : ch.measure.densities()) {
      if (p.rho.is_zero()) continue;
      if (!(hi > I.left) || p.a < I.left || p.b > hi) {
        std::ostringstream os;
        os << "density on [" << p.a << ", " << p.b << "]";
        outside(os.str());
      }
    }
  }
}

Complex correlation(const SpectralModel& model, double t, ModelPart part) {
  Complex f = 0.0;
  if (part != ModelPart::Remainder) {
    const double d = model.d;
    for (const auto& ch : model.channels) {
      for (const auto& a : ch.measure.atoms()) f += a.w * ch.coeff(a.t) * std::exp(-(d - a.t) * t);
      for (const auto& p : ch.measure.densities()) {
        f += panel_integral(
            [&](double s) { return p.rho(s) * ch.coeff(s) * std::exp(-(d - s) * t); }, p.a, p.b, t);
      }
    }
  }
  if (part != ModelPart::Channels) f += remainder_value(model, t);
  return f;
}

LaplaceValue laplace_numeric(const SpectralModel& model, Complex z, const LaplaceOptions& opts,
                             ModelPart part) {
  if (!(opts.t_max > 0.0)) throw Error(ErrorCode::DomainError, "t_max must be positive");
  const double d = model.d;
  const double T = opts.t_max;
  LaplaceValue out;

  auto too_far_left = [&](double beta) {
    std::ostringstream os;
    os << "Re z = " << z.real() << " leaves a non-decaying integrand (rate " << beta << ")";
    throw Error(ErrorCode::DomainError, os.str());
  };
  // Tail: |e^{-(z+delta-d)t} e^{-(d-s)t}| = e^{-(Re z + delta - s) t}.
  if (part != ModelPart::Remainder) {
    for (const auto& ch : model.channels) {
      for (const auto& a : ch.measure.atoms()) {
        const double beta = z.real() + model.delta - a.t;
        if (!(beta > 0.0)) too_far_left(beta);
        out.truncation_bound += std::abs(a.w * ch.coeff(a.t)) * std::exp(-beta * T) / beta;
      }
      for (const auto& p : ch.measure.densities()) {
        const double beta = z.real() + model.delta - p.b;
        if (!(beta > 0.0)) too_far_left(beta);
        const double mass = (p.rho * ch.coeff).max_abs_on(p.a, p.b) * (p.b - p.a);
        out.truncation_bound += mass * std::exp(-beta * T) / beta;
      }
    }
  }
  if (part != ModelPart::Channels && model.tempered_amplitude > 0.0) {
    const double beta = z.real() + model.delta - 0.5 * d;
    if (!(beta > 0.0)) too_far_left(beta);
    out.truncation_bound += model.tempered_amplitude * std::exp(-beta * T) *
                            ((1.0 + T) / beta + 1.0 / (beta * beta));
  }

  const Complex shift = z + model.delta - d;
  QuadratureOptions qo;
  qo.abs_tol = opts.tol_quad;
  qo.max_intervals = 20000;
  BatchIntegrand<Complex> g = [&](std::span<const double> ts, std::span<Complex> fx) {
    for (std::size_t i = 0; i < ts.size(); ++i)
      fx[i] = std::exp(-shift * ts[i]) * correlation(model, ts[i], part);
  };
  const auto r = integrate_batch<Complex>(g, 0.0, T, qo);
  out.value = r.value;
  out.quadrature_error = r.error;
  return out;
}

Complex laplace_closed(const SpectralModel& model, Complex z) {
  const Complex w = z + model.delta;
  Complex total = 0.0;
  for (const auto& ch : model.channels) {
    for (const auto& a : ch.measure.atoms()) {
      if (std::abs(w - a.t) < 1e-300 || w == Complex(a.t, 0.0)) {
        std::ostringstream os;
        os << "z = " << z.real() << "+" << z.imag() << "i hits the pole of the atom at " << a.t;
        throw Error(ErrorCode::SingularPoint, os.str());
      }
      total += ch.coeff(a.t) * a.w / (w - a.t);
    }
    for (const auto& p : ch.measure.densities()) {
      if (w.imag() == 0.0 && w.real() >= p.a && w.real() <= p.b) {
        std::ostringstream os;
        os << "z = " << z.real() << " lies on the cut of the density on [" << p.a << ", " << p.b
           << "]";
        throw Error(ErrorCode::SingularPoint, os.str());
      }
      QuadratureOptions qo;
      qo.abs_tol = 1e-13;
      qo.max_intervals = 20000;
      if (w.real() > p.a && w.real() < p.b) qo.breakpoints.push_back(w.real());
      auto r = integrate<Complex>([&](double s) { return ch.coeff(s) * p.rho(s) / (w - s); }, p.a,
                                  p.b, qo);
      total += r.value;
    }
  }
  return total;
}

RealLineMeasure pushforward_measure(const SpectralModel& model) {
  RealLineMeasure total;
  for (const auto& ch : model.channels) total = total + ch.measure.weighted(ch.coeff);
  return total;
}

Complex residue_at_zero(const SpectralModel& model) {
  Complex r = 0.0;
  for (const auto& ch : model.channels)
    for (const auto& a : ch.measure.atoms())
      if (a.t == model.delta) r += ch.coeff(a.t) * a.w;
  return r;
}

ResidueExtrapolation extrapolate_residue(const SpectralModel& model, double z0, int levels) {
  if (levels < 2 || !(z0 > 0.0))
    throw Error(ErrorCode::DomainError, "residue extrapolation needs z0 > 0 and >= 2 levels");
  ResidueExtrapolation out;
  for (int k = 0; k < levels; ++k) {
    const double z = std::ldexp(z0, -k);
    out.z.push_back(z);
    out.samples.push_back(z * laplace_closed(model, Complex(z, 0.0)));
  }
  // Neville-Richardson tableau for a sequence analytic in z with ratio 1/2.
  std::vector<Complex> row = out.samples;
  Complex prev_best = row.back();
  double factor = 2.0;
  for (int j = 1; j < levels; ++j) {
    std::vector<Complex> next;
    for (std::size_t k = 0; k + 1 < row.size(); ++k)
      next.push_back((factor * row[k + 1] - row[k]) / (factor - 1.0));
    prev_best = row.back();
    row = std::move(next);
    factor *= 2.0;
  }
  out.estimate = row.back();
  out.error_estimate = std::abs(out.estimate - prev_best);
  return out;
}

CompareReport compare_numeric_closed(const SpectralModel& numeric_model,
                                     const SpectralModel& closed_model,
                                     const std::vector<Complex>& grid, const CompareOptions& opts) {
  CompareReport rep;
  rep.pass = true;
  rep.all_honest = true;
  for (const Complex& z : grid) {
    CompareEntry e;
    e.z = z;
    const auto full = laplace_numeric(numeric_model, z, opts.laplace, ModelPart::All);
    LaplaceValue rem{};
    if (numeric_model.tempered_amplitude > 0.0)
      rem = laplace_numeric(numeric_model, z, opts.laplace, ModelPart::Remainder);
    e.numeric = full.value - rem.value;
    e.closed = laplace_closed(closed_model, z);
    e.error = std::abs(e.numeric - e.closed);
    e.truncation_bound = full.truncation_bound + rem.truncation_bound;
    const double quad = full.quadrature_error + rem.quadrature_error;
    e.allowed = opts.tol_compare + e.truncation_bound;
    e.honest = e.error <= e.truncation_bound + quad + 1e-12;
    rep.max_error = std::max(rep.max_error, e.error);
    rep.pass = rep.pass && e.error <= e.allowed;
    rep.all_honest = rep.all_honest && e.honest;
    rep.entries.push_back(e);
  }
  return rep;
}

CompareReport compare_numeric_closed(const SpectralModel& model, const std::vector<Complex>& grid,
                                     const CompareOptions& opts) {
  return compare_numeric_closed(model, model, grid, opts);
}

namespace {

struct ProbeContext {
  const SpectralModel& model;
  Complex residue;

  Complex g(Complex z) const { return laplace_closed(model, z) - residue / z; }

  // Counter-clockwise contour integral of G around [xl, xr] x [-y, y].
  Complex contour(double xl, double xr, double y) const {
    QuadratureOptions qo;
    qo.abs_tol = 1e-10;
    qo.max_intervals = 4000;
    auto horiz = [&](double yy) {
      return integrate<Complex>([&](double x) { return g(Complex(x, yy)); }, xl, xr, qo).value;
    };
    QuadratureOptions qv = qo;
    qv.breakpoints = {0.0};
    auto vert = [&](double xx) {
      return integrate<Complex>([&](double yy) { return g(Complex(xx, yy)); }, -y, y, qv).value *
             Complex(0.0, 1.0);
    };
    return horiz(-y) + vert(xr) - horiz(y) - vert(xl);
  }
};

}  // namespace

PoleProbeReport pole_probe(const SpectralModel& model, double eta, const PoleProbeOptions& opts) {
  const double e0 = eta_0(model.delta, model.d);
  if (!(eta > 0.0 && eta < e0)) {
    std::ostringstream os;
    os << "pole probe needs 0 < eta < eta_0 = " << e0;
    throw Error(ErrorCode::DomainError, os.str());
  }
  if (!(opts.resolution > 0.0) || opts.grid_y.empty())
    throw Error(ErrorCode::DomainError, "pole probe needs a positive resolution and grid_y");

  PoleProbeReport rep;
  rep.residue = residue_at_zero(model);
  const ProbeContext ctx{model, rep.residue};

  // Cells of width h; edges at -eta + (k + 1/2) h, centres at -eta + (k + 1) h.
  const double h = opts.resolution;
  const auto cells = static_cast<std::size_t>(std::floor(2.0 * eta / h + 1e-9)) - 1;
  auto edge = [&](std::size_t k) { return -eta + (static_cast<double>(k) + 0.5) * h; };

  double ymax = 0.0;
  for (double y : opts.grid_y) ymax = std::max(ymax, std::abs(y));
  if (!(ymax > 0.0)) ymax = 10.0 * h;

  for (std::size_t k = 0; k < cells; ++k) {
    const double x = 0.5 * (edge(k) + edge(k + 1));
    for (double y : opts.grid_y) {
      for (double sy : {y, -y}) {
        const Complex z(x, sy);
        if (std::abs(z) < 0.25 * h) continue;  // the subtracted pole itself
        double mag;
        try {
          mag = std::abs(ctx.g(z));
        } catch (const Error&) {
          mag = std::numeric_limits<double>::infinity();
        }
        if (!std::isfinite(mag)) mag = std::numeric_limits<double>::infinity();
        rep.max_abs_g = std::max(rep.max_abs_g, mag);
        if (y == 0.0) break;
      }
    }
  }
  rep.bounded = rep.max_abs_g <= 1.0 / opts.tol_bound;

  auto safe_contour = [&](std::size_t k0, std::size_t k1) {
    try {
      return ctx.contour(edge(k0), edge(k1), ymax);
    } catch (const Error&) {
      return Complex(std::numeric_limits<double>::infinity(), 0.0);
    }
  };
  rep.contour_sum = safe_contour(0, cells);
  rep.contour_vanishes = std::abs(rep.contour_sum) <= opts.tol_contour;

  if (!rep.contour_vanishes) {
    // Bisect along cell boundaries to isolate the cells carrying singularities.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, cells}};
    while (!stack.empty() && rep.singular_cells.size() < opts.max_located) {
      auto [k0, k1] = stack.back();
      stack.pop_back();
      if (k1 - k0 == 1) {
        rep.singular_cells.push_back(0.5 * (edge(k0) + edge(k1)));
        continue;
      }
      const std::size_t mid = (k0 + k1) / 2;
      if (std::abs(safe_contour(mid, k1)) > opts.tol_contour) stack.push_back({mid, k1});
      if (std::abs(safe_contour(k0, mid)) > opts.tol_contour) stack.push_back({k0, mid});
    }
    std::sort(rep.singular_cells.begin(), rep.singular_cells.end());
  }
  rep.pass = rep.bounded && rep.contour_vanishes;
  return rep;
}

RankResult rank_test(const Matrix2c& q, double tol_rank) {
  RankResult r;
  for (const auto& row : q)
    for (const auto& v : row) r.scale = std::max(r.scale, std::abs(v));
  r.abs_det = std::abs(q[0][0] * q[1][1] - q[0][1] * q[1][0]);
  if (r.scale == 0.0) {
    r.rank = 0;
  } else {
    r.rank = r.abs_det <= tol_rank * r.scale * r.scale ? 1 : 2;
  }
  return r;
}

}  // namespace rankone
