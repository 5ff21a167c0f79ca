#include "rankone/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "rankone/error.hpp"

namespace rankone {

Complex Polynomial::operator()(double t) const {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (coeffs.empty() || o.coeffs.empty()) return {};
  Polynomial out{std::vector<Complex>(coeffs.size() + o.coeffs.size() - 1, 0.0)};
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs.size(); ++j) out.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  return out;
}

bool Polynomial::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Complex c) { return c == 0.0; });
}

bool Polynomial::is_real() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Complex c) { return c.imag() == 0.0; });
}

double Polynomial::max_abs_on(double a, double b) const {
  const double r = std::max(std::abs(a), std::abs(b));
  double bound = 0.0, p = 1.0;
  for (const auto& c : coeffs) {
    bound += std::abs(c) * p;
    p *= r;
  }
  return bound;
}

namespace {

// Integral of p over [lo, hi] via the exact antiderivative.
Complex integrate_poly(const Polynomial& p, double lo, double hi) {
  Complex acc_hi = 0.0, acc_lo = 0.0;
  for (std::size_t k = p.coeffs.size(); k-- > 0;) {
    const Complex c = p.coeffs[k] / static_cast<double>(k + 1);
    acc_hi = (acc_hi + c) * hi;
    acc_lo = (acc_lo + c) * lo;
  }
  // Horner above evaluates sum c_k x^{k+1} as ((c_n x + c_{n-1}) x + ...) x.
  return acc_hi - acc_lo;
}

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

RealLineMeasure::RealLineMeasure(std::vector<Atom> atoms, std::vector<DensityPiece> densities)
    : atoms_(std::move(atoms)), densities_(std::move(densities)) {
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& x, const Atom& y) { return x.t < y.t; });
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!std::isfinite(atoms_[i].t) || !finite(atoms_[i].w))
      throw Error(ErrorCode::InvalidModel, "atom with non-finite location or weight");
    if (i > 0 && atoms_[i].t == atoms_[i - 1].t) {
      std::ostringstream os;
      os << "duplicate atom location t = " << atoms_[i].t;
      throw Error(ErrorCode::InvalidModel, os.str());
    }
  }
  for (const auto& d : densities_) {
    if (!std::isfinite(d.a) || !std::isfinite(d.b) || !(d.b > d.a)) {
      std::ostringstream os;
      os << "density interval [" << d.a << ", " << d.b << "] is degenerate";
      throw Error(ErrorCode::InvalidModel, os.str());
    }
    for (const auto& c : d.rho.coeffs)
      if (!finite(c)) throw Error(ErrorCode::InvalidModel, "non-finite density coefficient");
  }
}

RealLineMeasure RealLineMeasure::dirac(double t, Complex w) { return RealLineMeasure({{t, w}}, {}); }

RealLineMeasure RealLineMeasure::uniform(double a, double b, Complex height) {
  return RealLineMeasure({}, {{a, b, Polynomial{{height}}}});
}

bool RealLineMeasure::is_real() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.w.imag() == 0.0; }) &&
         std::all_of(densities_.begin(), densities_.end(),
                     [](const DensityPiece& d) { return d.rho.is_real(); });
}

Complex RealLineMeasure::mass(Endpoint lo, Endpoint hi) const {
  Complex m = 0.0;
  for (const auto& a : atoms_) {
    const bool above = lo.closed ? a.t >= lo.x : a.t > lo.x;
    const bool below = hi.closed ? a.t <= hi.x : a.t < hi.x;
    if (above && below) m += a.w;
  }
  for (const auto& d : densities_) {
    const double l = std::max(d.a, lo.x);
    const double h = std::min(d.b, hi.x);
    if (h > l) m += integrate_poly(d.rho, l, h);
  }
  return m;
}

double RealLineMeasure::total_variation_bound() const {
  double tv = 0.0;
  for (const auto& a : atoms_) tv += std::abs(a.w);
  for (const auto& d : densities_) tv += d.rho.max_abs_on(d.a, d.b) * (d.b - d.a);
  return tv;
}

bool RealLineMeasure::support_hull(double& lo, double& hi) const {
  bool any = false;
  auto extend = [&](double l, double h) {
    lo = any ? std::min(lo, l) : l;
    hi = any ? std::max(hi, h) : h;
    any = true;
  };
  for (const auto& a : atoms_)
    if (a.w != 0.0) extend(a.t, a.t);
  for (const auto& d : densities_)
    if (!d.rho.is_zero()) extend(d.a, d.b);
  return any;
}

RealLineMeasure RealLineMeasure::real_part() const {
  std::vector<Atom> atoms;
  std::vector<DensityPiece> dens;
  for (const auto& a : atoms_) atoms.push_back({a.t, a.w.real()});
  for (const auto& d : densities_) {
    DensityPiece p{d.a, d.b, {}};
    for (const auto& c : d.rho.coeffs) p.rho.coeffs.push_back(c.real());
    dens.push_back(std::move(p));
  }
  return RealLineMeasure(std::move(atoms), std::move(dens));
}

RealLineMeasure RealLineMeasure::imag_part() const {
  std::vector<Atom> atoms;
  std::vector<DensityPiece> dens;
  for (const auto& a : atoms_) atoms.push_back({a.t, a.w.imag()});
  for (const auto& d : densities_) {
    DensityPiece p{d.a, d.b, {}};
    for (const auto& c : d.rho.coeffs) p.rho.coeffs.push_back(c.imag());
    dens.push_back(std::move(p));
  }
  return RealLineMeasure(std::move(atoms), std::move(dens));
}

RealLineMeasure RealLineMeasure::weighted(const Polynomial& c) const {
  std::vector<Atom> atoms;
  std::vector<DensityPiece> dens;
  for (const auto& a : atoms_) atoms.push_back({a.t, a.w * c(a.t)});
  for (const auto& d : densities_) dens.push_back({d.a, d.b, d.rho * c});
  return RealLineMeasure(std::move(atoms), std::move(dens));
}

RealLineMeasure RealLineMeasure::operator+(const RealLineMeasure& o) const {
  std::map<double, Complex> merged;
  for (const auto& a : atoms_) merged[a.t] += a.w;
  for (const auto& a : o.atoms_) merged[a.t] += a.w;
  std::vector<Atom> atoms;
  for (const auto& [t, w] : merged) atoms.push_back({t, w});
  std::vector<DensityPiece> dens = densities_;
  dens.insert(dens.end(), o.densities_.begin(), o.densities_.end());
  return RealLineMeasure(std::move(atoms), std::move(dens));
}

RealLineMeasure RealLineMeasure::scaled(Complex k) const {
  std::vector<Atom> atoms;
  std::vector<DensityPiece> dens;
  for (const auto& a : atoms_) atoms.push_back({a.t, a.w * k});
  for (const auto& d : densities_) dens.push_back({d.a, d.b, d.rho * Polynomial{{k}}});
  return RealLineMeasure(std::move(atoms), std::move(dens));
}

}  // namespace rankone
