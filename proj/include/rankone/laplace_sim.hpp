#pragma once

// Synthetic spectral models: scaled matrix coefficients built from spectral
// measures, their Laplace transforms (numerically and in closed form), the
// pole at z = 0 and the rank obstruction for sesquilinear forms.

#include <array>
#include <complex>
#include <vector>

#include "rankone/compact_duals.hpp"
#include "rankone/measure.hpp"

namespace rankone {

struct ModelChannel {
  HighestWeight sigma;
  RealLineMeasure measure;
  Polynomial coeff;  // main-term coefficient c_sigma(s)
};

struct SpectralModel {
  int d = 2;
  double delta = 1.5;
  double tempered_amplitude = 0.0;
  std::vector<ModelChannel> channels;
};

// Checks d/2 < delta <= d, R >= 0, distinct sigma, and that every measure is
// supported in I_sigma and in (d/2, delta]. Throws Error{InvalidModel |
// SupportOutsideInterval}.
void validate_model(const SpectralModel& model);

enum class ModelPart { All, Channels, Remainder };

// f(t) = sum_sigma \int e^{-(d-s)t} c_sigma(s) dm_sigma(s) + R (1+t) e^{-(d/2)t} cos t
Complex correlation(const SpectralModel& model, double t, ModelPart part = ModelPart::All);

struct LaplaceOptions {
  double t_max = 80.0;
  double tol_quad = 1e-11;
};

struct LaplaceValue {
  Complex value;
  double truncation_bound = 0.0;  // bound on |\int_{T_max}^infty ...|
  double quadrature_error = 0.0;
};

// \int_0^{T_max} e^{-(z + delta - d)t} f(t) dt with an analytic tail bound.
// Throws Error{DomainError} when the integrand does not decay (z too far left).
LaplaceValue laplace_numeric(const SpectralModel& model, Complex z, const LaplaceOptions& opts = {},
                             ModelPart part = ModelPart::All);

// sum_sigma \int c_sigma(s) / (z + delta - s) dm_sigma(s): atoms exactly,
// densities by adaptive quadrature. Throws Error{SingularPoint} on the pole set.
Complex laplace_closed(const SpectralModel& model, Complex z);

// The measure sum_sigma c_sigma dm_sigma, whose Stieltjes transform at
// z + delta is laplace_closed(model, z).
RealLineMeasure pushforward_measure(const SpectralModel& model);

// sum_sigma c_sigma(delta) m_sigma({delta}).
Complex residue_at_zero(const SpectralModel& model);

struct ResidueExtrapolation {
  Complex estimate;
  double error_estimate = 0.0;
  std::vector<double> z;
  std::vector<Complex> samples;  // z * laplace_closed(model, z)
};

// Richardson extrapolation of z F(z) along z = z0 2^-k, k = 0..levels-1.
ResidueExtrapolation extrapolate_residue(const SpectralModel& model, double z0 = 1e-3,
                                         int levels = 8);

struct CompareEntry {
  Complex z;
  Complex numeric;  // channels only: full numeric minus numeric remainder
  Complex closed;
  double error = 0.0;
  double allowed = 0.0;
  double truncation_bound = 0.0;
  bool honest = false;  // error <= truncation bound + quadrature error
};

struct CompareReport {
  std::vector<CompareEntry> entries;
  double max_error = 0.0;
  bool pass = false;
  bool all_honest = false;
};

struct CompareOptions {
  LaplaceOptions laplace;
  double tol_compare = 1e-6;
};

CompareReport compare_numeric_closed(const SpectralModel& numeric_model,
                                     const SpectralModel& closed_model,
                                     const std::vector<Complex>& grid,
                                     const CompareOptions& opts = {});
CompareReport compare_numeric_closed(const SpectralModel& model, const std::vector<Complex>& grid,
                                     const CompareOptions& opts = {});

struct PoleProbeOptions {
  std::vector<double> grid_y{0.0, 1e-3, 1e-2, 5e-2};
  double resolution = 1e-3;
  double tol_bound = 1e-6;  // |G| > 1/tol_bound counts as unbounded
  double tol_contour = 1e-6;
  std::size_t max_located = 64;
};

struct PoleProbeReport {
  Complex residue;
  double max_abs_g = 0.0;
  bool bounded = false;
  Complex contour_sum;
  bool contour_vanishes = false;
  std::vector<double> singular_cells;  // centres of cells whose contour sum fails
  bool pass = false;
};

// G(z) = laplace_closed(z) - residue/z on Re z in (-eta, eta).
// Throws Error{DomainError} unless 0 < eta < eta_0(delta, d).
PoleProbeReport pole_probe(const SpectralModel& model, double eta,
                           const PoleProbeOptions& opts = {});

using Matrix2c = std::array<std::array<Complex, 2>, 2>;

struct RankResult {
  int rank = 0;
  double abs_det = 0.0;
  double scale = 0.0;
};

// rank <= 1 iff |det| <= tol_rank * scale^2 with scale = max |q_ij|.
RankResult rank_test(const Matrix2c& q, double tol_rank = 1e-10);

}  // namespace rankone
