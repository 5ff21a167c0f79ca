#pragma once

// Compactly supported complex Borel measures on the real line: finitely many
// atoms plus piecewise-polynomial densities.

#include <complex>
#include <vector>

namespace rankone {

using Complex = std::complex<double>;

// p(t) = sum_k coeffs[k] * t^k
struct Polynomial {
  std::vector<Complex> coeffs;

  Complex operator()(double t) const;
  Complex operator()(Complex z) const;
  Polynomial operator*(const Polynomial& o) const;
  bool is_zero() const;
  double max_abs_on(double a, double b) const;  // crude bound via |c_k| max|t|^k
  bool is_real() const;
};

struct Atom {
  double t = 0.0;
  Complex w;
};

struct DensityPiece {
  double a = 0.0;
  double b = 0.0;
  Polynomial rho;
};

struct Endpoint {
  double x;
  bool closed;
};

class RealLineMeasure {
 public:
  RealLineMeasure() = default;
  // Throws Error{InvalidModel} for duplicate atom locations, non-finite data
  // or degenerate density intervals (b <= a).
  RealLineMeasure(std::vector<Atom> atoms, std::vector<DensityPiece> densities);

  static RealLineMeasure dirac(double t, Complex w = 1.0);
  static RealLineMeasure uniform(double a, double b, Complex height = 1.0);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::vector<DensityPiece>& densities() const noexcept { return densities_; }

  bool empty() const noexcept { return atoms_.empty() && densities_.empty(); }
  bool is_real() const;

  // Mass of the interval with the given endpoint conventions (exact up to
  // double rounding of the polynomial antiderivative).
  Complex mass(Endpoint lo, Endpoint hi) const;
  Complex mass_closed(double lo, double hi) const { return mass({lo, true}, {hi, true}); }

  // Upper bound on the total variation |nu|(R).
  double total_variation_bound() const;

  // Closed hull of the support of the non-zero pieces; returns false if empty.
  bool support_hull(double& lo, double& hi) const;

  RealLineMeasure real_part() const;
  RealLineMeasure imag_part() const;
  // c(t) dnu(t)
  RealLineMeasure weighted(const Polynomial& c) const;
  RealLineMeasure operator+(const RealLineMeasure& o) const;
  RealLineMeasure scaled(Complex k) const;

 private:
  std::vector<Atom> atoms_;
  std::vector<DensityPiece> densities_;
};

}  // namespace rankone
