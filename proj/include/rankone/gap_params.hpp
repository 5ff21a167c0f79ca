#pragma once

// Spectral-gap parameters and decay-rate arithmetic.

#include <optional>
#include <string>
#include <vector>

#include "rankone/compact_duals.hpp"
#include "rankone/measure.hpp"

namespace rankone {

// Largest index j (1-based) with sigma_j > 0; 0 when there is none.
int ell(const HighestWeight& sigma);

// (left, right]; empty when right <= left.
struct HalfOpenInterval {
  double left = 0.0;
  double right = 0.0;

  bool empty() const noexcept { return !(right > left); }
  bool contains(double x) const noexcept { return x > left && x <= right; }
};

// (d/2, d - ell(sigma)].
HalfOpenInterval interval_I(const HighestWeight& sigma, int d);

// min{2s - d, 1}; throws Error{DomainError} for s <= d/2.
double eta_s(double s, int d);
// min{delta - d/2, 1}; throws Error{DomainError} for delta <= d/2.
double eta_0(double delta, int d);
// min{kappa_gamma, 1}; kappa_gamma > 0.
double kappa0(double kappa_gamma);
// kappa0 / (2 (d + 3 + kappa0)); kappa0 in (0, 1].
double kappa1(double kappa0, int d);

// (1 + t) exp(-(d - s_star) t) for t >= 0 and d/2 <= s_star < d.
double decay_envelope(double s_star, int d, double t);

struct GapParameters {
  int d = 0;
  double delta = 0.0;
  double kappa_gamma = 0.0;
  double kappa0 = 0.0;
  double kappa1 = 0.0;
  double eta_delta = 0.0;  // eta_s at s = delta
  double eta0 = 0.0;
};

// Validates d/2 < delta <= d and 0 < kappa_gamma <= delta - d/2.
GapParameters make_gap_parameters(int d, double delta, double kappa_gamma);

struct SpectralChannel {
  HighestWeight sigma;
  RealLineMeasure measure;
};

struct VerdictOptions {
  // Reject measures supported outside their interval I_sigma.
  bool enforce_support = true;
};

struct SsgVerdict {
  bool verdict = false;
  bool atom_condition = false;  // no non-trivial sigma carries an atom at delta
  bool gap_condition = false;   // some eta > 0 leaves (delta - eta, delta) empty
  double kappa_gamma = 0.0;     // 0 when the gap condition fails
  std::optional<GapParameters> params;  // present when kappa_gamma > 0
  std::vector<std::string> notes;
};

// Throws Error{DomainError} for delta outside (d/2, d] and
// Error{SupportOutsideInterval} when a measure leaves I_sigma.
SsgVerdict ssg_verdict(const std::vector<SpectralChannel>& spectrum, double delta, int d,
                       const VerdictOptions& opts = {});

}  // namespace rankone
