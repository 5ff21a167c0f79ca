#include "rankone/gap_params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rankone/error.hpp"

namespace rankone {

namespace {

[[noreturn]] void domain(const std::string& what) { throw Error(ErrorCode::DomainError, what); }

}  // namespace

int ell(const HighestWeight& sigma) {
  const auto& e = sigma.entries();
  for (std::size_t j = e.size(); j-- > 0;)
    if (e[j] > 0) return static_cast<int>(j + 1);
  return 0;
}

HalfOpenInterval interval_I(const HighestWeight& sigma, int d) {
  if (sigma.n() != d) domain("interval_I: sigma must be an SO(d) weight");
  return {0.5 * d, static_cast<double>(d - ell(sigma))};
}

double eta_s(double s, int d) {
  if (!(s > 0.5 * d)) domain("eta_s requires s > d/2");
  return std::min(2.0 * s - d, 1.0);
}

double eta_0(double delta, int d) {
  if (!(delta > 0.5 * d)) domain("eta_0 requires delta > d/2");
  return std::min(delta - 0.5 * d, 1.0);
}

double kappa0(double kappa_gamma) {
  if (!(kappa_gamma > 0.0)) domain("kappa0 requires kappa_gamma > 0");
  return std::min(kappa_gamma, 1.0);
}

double kappa1(double k0, int d) {
  if (!(k0 > 0.0 && k0 <= 1.0)) domain("kappa1 requires kappa0 in (0, 1]");
  if (d < 1) domain("kappa1 requires d >= 1");
  return k0 / (2.0 * (d + 3.0 + k0));
}

double decay_envelope(double s_star, int d, double t) {
  if (!(t >= 0.0)) domain("decay_envelope requires t >= 0");
  if (!(s_star >= 0.5 * d && s_star < d)) domain("decay_envelope requires d/2 <= s_star < d");
  return (1.0 + t) * std::exp(-(d - s_star) * t);
}

GapParameters make_gap_parameters(int d, double delta, double kappa_gamma) {
  if (d < 1) domain("d must be >= 1");
  if (!(delta > 0.5 * d && delta <= d)) domain("delta must lie in (d/2, d]");
  if (!(kappa_gamma > 0.0 && kappa_gamma <= delta - 0.5 * d))
    domain("kappa_gamma must lie in (0, delta - d/2]");
  GapParameters p;
  p.d = d;
  p.delta = delta;
  p.kappa_gamma = kappa_gamma;
  p.kappa0 = kappa0(kappa_gamma);
  p.kappa1 = kappa1(p.kappa0, d);
  p.eta_delta = eta_s(delta, d);
  p.eta0 = eta_0(delta, d);
  return p;
}

SsgVerdict ssg_verdict(const std::vector<SpectralChannel>& spectrum, double delta, int d,
                       const VerdictOptions& opts) {
  if (d < 1 || !(delta > 0.5 * d && delta <= d)) domain("delta must lie in (d/2, d]");
  const double left = 0.5 * d;

  SsgVerdict v;
  v.atom_condition = true;
  bool touches_delta = false;
  bool any_below = false;
  double sup_below = left;

  for (const auto& ch : spectrum) {
    if (ch.sigma.n() != d)
      throw Error(ErrorCode::GroupMismatch, "channel " + ch.sigma.to_string() + " is not an M-type");
    const auto I = interval_I(ch.sigma, d);
    for (const auto& a : ch.measure.atoms()) {
      if (a.w == 0.0) continue;
      if (opts.enforce_support && !I.contains(a.t)) {
        std::ostringstream os;
        os << "atom at " << a.t << " for " << ch.sigma.to_string() << " lies outside I_sigma = ("
           << I.left << ", " << I.right << "]";
        throw Error(ErrorCode::SupportOutsideInterval, os.str());
      }
      if (a.t == delta && !ch.sigma.is_trivial()) {
        v.atom_condition = false;
        v.notes.push_back("non-trivial " + ch.sigma.to_string() + " has an atom at delta");
      }
      if (a.t > left && a.t < delta) {
        any_below = true;
        sup_below = std::max(sup_below, a.t);
      }
    }
    for (const auto& p : ch.measure.densities()) {
      if (p.rho.is_zero()) continue;
      // Endpoints carry no density mass, so [a, b] may touch the open end d/2.
      if (opts.enforce_support && (I.empty() || p.a < I.left || p.b > I.right)) {
        std::ostringstream os;
        os << "density on [" << p.a << ", " << p.b << "] for " << ch.sigma.to_string()
           << " lies outside I_sigma = (" << I.left << ", " << I.right << "]";
        throw Error(ErrorCode::SupportOutsideInterval, os.str());
      }
      if (p.b > left && p.a < delta) {
        if (p.b >= delta) {
          touches_delta = true;
          v.notes.push_back("density of " + ch.sigma.to_string() + " accumulates at delta");
        } else {
          any_below = true;
          sup_below = std::max(sup_below, p.b);
        }
      }
    }
  }

  v.gap_condition = !touches_delta;
  if (v.gap_condition) {
    v.kappa_gamma = any_below ? std::min(delta - sup_below, delta - left) : delta - left;
  }
  v.verdict = v.atom_condition && v.gap_condition;
  if (v.kappa_gamma > 0.0) v.params = make_gap_parameters(d, delta, v.kappa_gamma);
  for (const auto& ch : spectrum) {
    for (auto e : ch.sigma.entries()) {
      if (e < 0) {
        v.notes.push_back(ch.sigma.to_string() +
                          " has a negative coordinate; ell uses strictly positive entries only");
        break;
      }
    }
  }
  return v;
}

}  // namespace rankone
