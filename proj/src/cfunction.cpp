#include "rankone/cfunction.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rankone/error.hpp"
#include "rankone/ktype_search.hpp"
#include "rankone/parallel.hpp"

namespace rankone {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

GammaRatioExpr cplus_symbolic(const HighestWeight& tau, const HighestWeight& sigma, int d,
                              bool normalize) {
  if (d < 1 || sigma.n() != d || tau.n() != d + 1) {
    std::ostringstream os;
    os << "C_+ needs tau in SO(" << d + 1 << ") and sigma in SO(" << d << "), got "
       << tau.to_string() << " and " << sigma.to_string();
    throw Error(ErrorCode::GroupMismatch, os.str());
  }
  if (!branches_to(tau, sigma)) {
    throw Error(ErrorCode::NotContained,
                sigma.to_string() + " is not contained in " + tau.to_string());
  }

  const Rational half_d(d, 2);
  GammaRatioExpr e;
  const int sigma_terms = d / 2;        // floor(d/2)
  const int tau_terms = (d + 1) / 2;    // ceil(d/2)
  if (d % 2 == 0) {
    e.prefactor = Rational(factorial(d - 1), factorial(d / 2 - 1));
  } else {
    e.prefactor = Rational(factorial((d - 1) / 2));
    e.two_power_alpha = -2;
    e.two_power_beta = d;
    e.numerator.push_back({2, 0});
  }
  for (int j = 1; j <= sigma_terms; ++j) {
    const auto sj = sigma[static_cast<std::size_t>(j - 1)];
    e.numerator.push_back({1, -half_d + j - sj});
    e.numerator.push_back({1, half_d - j + sj});
  }
  for (int j = 1; j <= tau_terms; ++j) {
    const auto tj = tau[static_cast<std::size_t>(j - 1)];
    e.denominator.push_back({1, -half_d + j - tj});
    e.denominator.push_back({1, half_d - j + 1 + tj});
  }
  if (normalize) e.normalize();
  return e;
}

double cor43_scalar(const HighestWeight& tau, const HighestWeight& sigma, double s, int d) {
  if (!(s > 0.5 * d)) {
    std::ostringstream os;
    os << "s = " << s << " must exceed d/2 = " << 0.5 * d;
    throw Error(ErrorCode::DomainError, os.str());
  }
  const auto expr = cplus_symbolic(tau, sigma, d);
  const auto r = evaluate(expr, s);
  if (r.classification == PointClass::Pole) {
    std::ostringstream os;
    os << "C_+(" << tau.to_string() << " : " << sigma.to_string() << "; s) has a pole at s = " << s;
    throw Error(ErrorCode::PoleEncountered, os.str());
  }
  const double ratio = Rational(dimension(tau), dimension(sigma)).convert_to<double>();
  return ratio * r.value;
}

std::vector<double> uniform_s_grid(int d, std::size_t n) {
  std::vector<double> grid(n);
  const double half = 0.5 * d;
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = half + half * static_cast<double>(i + 1) / static_cast<double>(n);
  return grid;
}

ScanReport nonvanishing_scan(const HighestWeight& sigma, int d, const std::vector<double>& grid,
                             const ScanOptions& opts) {
  return nonvanishing_scan(sigma, construct_witness_ktype(sigma, d), d, grid, opts);
}

ScanReport nonvanishing_scan(const HighestWeight& sigma, const HighestWeight& tau, int d,
                             const std::vector<double>& grid, const ScanOptions& opts) {
  for (double s : grid) {
    if (!(s > 0.5 * d && s <= d)) {
      std::ostringstream os;
      os << "scan point s = " << s << " outside (" << 0.5 * d << ", " << d << "]";
      throw Error(ErrorCode::DomainError, os.str());
    }
  }
  const HighestWeight sigma_dual = dual(sigma);
  const GammaRatioExpr expr = cplus_symbolic(tau, sigma_dual, d);
  ScanReport rep{sigma, sigma_dual, tau, std::vector<ScanPoint>(grid.size())};

  const EvaluateOptions eo{opts.tol_pole};
  parallel_for(
      grid.size(),
      [&](std::size_t i) {
        const auto r = evaluate(expr, grid[i], eo);
        rep.points[i] = {grid[i], r.value, r.classification};
      },
      opts.threads);

  rep.min_abs_value = std::numeric_limits<double>::infinity();
  int prev_sign = 0;
  for (const auto& p : rep.points) {
    switch (p.classification) {
      case PointClass::Zero: ++rep.zero_count; rep.min_abs_value = 0.0; continue;
      case PointClass::Pole: ++rep.pole_count; continue;
      case PointClass::Finite: break;
    }
    rep.min_abs_value = std::min(rep.min_abs_value, std::abs(p.value));
    const int sg = (p.value > 0) - (p.value < 0);
    if (sg != 0 && prev_sign != 0 && sg != prev_sign) ++rep.sign_changes;
    if (sg != 0) prev_sign = sg;
  }
  rep.pass = !grid.empty() && rep.zero_count == 0 && rep.pole_count == 0 &&
             rep.min_abs_value > opts.tol_nonvanish;
  return rep;
}

}  // namespace rankone
