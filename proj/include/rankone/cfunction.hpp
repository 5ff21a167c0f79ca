#pragma once

// Scalars C_+(tau : sigma; s) of the Harish-Chandra C-function of SO(d+1,1)
// on the sigma-isotypic part of a K-type tau, as explicit Gamma ratios.

#include <cstddef>
#include <vector>

#include "rankone/compact_duals.hpp"
#include "rankone/gamma_ratio.hpp"

namespace rankone {

// tau is an SO(d+1) weight containing the SO(d) weight sigma.
// Throws Error{NotContained | GroupMismatch}.
GammaRatioExpr cplus_symbolic(const HighestWeight& tau, const HighestWeight& sigma, int d,
                              bool normalize = true);

// dim(tau)/dim(sigma) * C_+(tau : sigma; s), for s > d/2.
// Throws Error{DomainError} for s <= d/2 and Error{PoleEncountered} at a pole.
double cor43_scalar(const HighestWeight& tau, const HighestWeight& sigma, double s, int d);

// n points d/2 + (d/2) * i/n, i = 1..n, covering (d/2, d].
std::vector<double> uniform_s_grid(int d, std::size_t n);

struct ScanPoint {
  double s = 0.0;
  double value = 0.0;
  PointClass classification = PointClass::Finite;
};

struct ScanReport {
  HighestWeight sigma;
  HighestWeight sigma_dual;
  HighestWeight tau;
  std::vector<ScanPoint> points;
  double min_abs_value = 0.0;
  std::size_t zero_count = 0;
  std::size_t pole_count = 0;
  std::size_t sign_changes = 0;
  bool pass = false;
};

struct ScanOptions {
  double tol_pole = 1e-9;
  double tol_nonvanish = 1e-12;
  unsigned threads = 0;  // 0: default worker count
};

// Evaluates C_+(tau : sigma*; s) on the grid with tau the witness K-type.
ScanReport nonvanishing_scan(const HighestWeight& sigma, int d, const std::vector<double>& grid,
                             const ScanOptions& opts = {});

// Same, with an explicitly chosen tau (must contain dual(sigma)).
ScanReport nonvanishing_scan(const HighestWeight& sigma, const HighestWeight& tau, int d,
                             const std::vector<double>& grid, const ScanOptions& opts = {});

}  // namespace rankone
