#pragma once

// Stieltjes transforms F(z) = \int dnu(t) / (z - t) of finite measures, their
// numerical inversion on intervals, and vanishing tests on open intervals.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rankone/measure.hpp"
#include "rankone/quadrature.hpp"

namespace rankone {

enum class DensityMethod { ClosedForm, Quadrature };

struct TransformOptions {
  // z closer than this to the support is rejected.
  double tol_support = 1e-12;
  DensityMethod method = DensityMethod::ClosedForm;
  double tol_quad = 1e-12;
};

// Throws Error{SingularPoint} when z is within tol_support of the support.
Complex transform(const RealLineMeasure& nu, Complex z, const TransformOptions& opts = {});

// F(x_k + i y) for every x_k; no support check (callers stay off the axis).
void transform_batch(const RealLineMeasure& nu, std::span<const double> x, double y,
                     std::span<Complex> out);

// Boundary-values probe: F evaluated along horizontal lines x + i y.
using LineTransform = std::function<void(std::span<const double> x, double y, std::span<Complex> out)>;

LineTransform line_transform(const RealLineMeasure& nu);
LineTransform line_transform(std::function<Complex(Complex)> f);

struct InversionOptions {
  double y0 = 0.5;
  int k_max = 12;
  double tol_quad = 1e-9;
  // Estimates whose error estimate exceeds this are flagged low-confidence.
  double convergence_threshold = 1e-4;
  std::vector<double> breakpoints;
};

struct InversionResult {
  double estimate = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  std::vector<double> y;           // y_k = y0 * 2^-k
  std::vector<double> raw;         // -(1/pi) \int_a^b Im F(x + i y_k) dx
  std::vector<double> richardson;  // 2 raw[k+1] - raw[k]
};

// Estimates (nu([a,b)) + nu((a,b])) / 2 from F = transform(nu, .).
InversionResult invert_interval(const LineTransform& f, double a, double b,
                                const InversionOptions& opts = {});
InversionResult invert_interval(const std::function<Complex(Complex)>& f, double a, double b,
                                const InversionOptions& opts = {});
// Same, with breakpoints at the atoms and density endpoints of nu.
InversionResult invert_measure(const RealLineMeasure& nu, double a, double b,
                               InversionOptions opts = {});

enum class Vanishing { Vanishes, DoesNotVanish, Inconclusive };

const char* to_string(Vanishing v) noexcept;

struct DetectorOptions {
  std::size_t subintervals = 8;
  std::size_t probe_points = 201;
  double tol_mass = 1e-5;
  // Continuity indicators count as decaying when the last is below this
  // fraction of the first.
  double decay_ratio = 0.5;
  double probe_y0 = 0.25;
  int probe_levels = 10;
  InversionOptions inversion;
};

struct ContinuityProbe {
  std::vector<double> y;
  std::vector<double> sup_jump;  // sup_x |F(x + i y) - F(x + i y/2)|
  bool decays = false;
};

struct SubintervalMass {
  double a = 0.0;
  double b = 0.0;
  double re = 0.0;  // inverted from F_re
  double im = 0.0;  // inverted from F_im
  double error = 0.0;
  bool converged = false;
};

struct DetectorReport {
  Vanishing verdict = Vanishing::Inconclusive;
  ContinuityProbe continuity_re;
  ContinuityProbe continuity_im;
  std::vector<SubintervalMass> masses;
  double max_abs_mass = 0.0;
};

// F_re, F_im are the transforms of the real and imaginary parts of nu.
DetectorReport vanishing_detector(const LineTransform& f_re, const LineTransform& f_im, double a,
                                  double b, const DetectorOptions& opts = {});
DetectorReport vanishing_detector(const RealLineMeasure& nu, double a, double b,
                                  const DetectorOptions& opts = {});

// nu([alpha, beta]) == 0 for every pair of consecutive grid points, evaluated
// in exact rational arithmetic. Grid points must lie in (lo, hi) and avoid
// the atoms of nu. Throws Error{GridHitsAtom | DomainError}.
bool is_zero_by_interval_family(const RealLineMeasure& nu, double lo, double hi,
                                std::vector<double> grid);

}  // namespace rankone
