#include "rankone/gamma_ratio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rankone/error.hpp"

namespace rankone {

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string factor_str(const GammaFactor& f) {
  std::ostringstream os;
  os << "Gamma(" << (f.u == 1 ? "" : std::to_string(f.u)) << "s";
  if (f.a > 0) os << "+" << f.a;
  else if (f.a < 0) os << "-" << Rational(-f.a);
  os << ")";
  return os.str();
}

std::string product_str(const std::vector<GammaFactor>& fs) {
  if (fs.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += "*";
    out += factor_str(fs[i]);
  }
  return out;
}

}  // namespace

const char* to_string(PointClass c) noexcept {
  switch (c) {
    case PointClass::Finite: return "finite";
    case PointClass::Zero: return "zero";
    case PointClass::Pole: return "pole";
  }
  return "unknown";
}

GammaRatioExpr& GammaRatioExpr::normalize() {
  std::sort(numerator.begin(), numerator.end());
  std::sort(denominator.begin(), denominator.end());
  std::vector<GammaFactor> num, den;
  std::set_difference(numerator.begin(), numerator.end(), denominator.begin(), denominator.end(),
                      std::back_inserter(num));
  std::set_difference(denominator.begin(), denominator.end(), numerator.begin(), numerator.end(),
                      std::back_inserter(den));
  numerator = std::move(num);
  denominator = std::move(den);
  return *this;
}

bool GammaRatioExpr::is_normalized() const {
  if (!std::is_sorted(numerator.begin(), numerator.end()) ||
      !std::is_sorted(denominator.begin(), denominator.end()))
    return false;
  for (const auto& f : numerator)
    if (std::binary_search(denominator.begin(), denominator.end(), f)) return false;
  return true;
}

std::string GammaRatioExpr::to_string() const {
  std::ostringstream os;
  os << rational_str(prefactor);
  if (two_power_alpha != 0 || two_power_beta != 0)
    os << " * 2^(" << rational_str(two_power_alpha) << "*s + " << rational_str(two_power_beta) << ")";
  os << " * [" << product_str(numerator) << "] / [" << product_str(denominator) << "]";
  return os.str();
}

double log_abs_gamma(double x, int& sign) {
  sign = 1;
  return ::lgamma_r(x, &sign);
}

GammaEvaluation evaluate(const GammaRatioExpr& expr, double s, const EvaluateOptions& opts) {
  if (expr.prefactor == 0) return {0.0, PointClass::Zero, 0};

  double log_mag = std::log(std::abs(expr.prefactor.convert_to<double>())) +
                   (expr.two_power_alpha.convert_to<double>() * s +
                    expr.two_power_beta.convert_to<double>()) *
                       std::numbers::ln2;
  int sign = expr.prefactor < 0 ? -1 : 1;
  int singular_num = 0;
  int singular_den = 0;

  // Near a pole -n, Gamma(u*s + a) ~ (-1)^n / (n! * u * (s - s0)); when the
  // singular counts balance the (s - s0) powers cancel and only these
  // residue coefficients survive.
  auto accumulate = [&](const GammaFactor& f, int direction) {
    const double x = f.u * s + f.a.convert_to<double>();
    const double k = std::nearbyint(x);
    if (k <= 0.0 && std::abs(x - k) < opts.tol_pole) {
      (direction > 0 ? singular_num : singular_den) += 1;
      const double n = -k;
      const double log_res = -std::lgamma(n + 1.0) - std::log(static_cast<double>(f.u));
      log_mag += direction * log_res;
      if (static_cast<long long>(n) % 2 != 0) sign = -sign;
      return;
    }
    int sg = 1;
    log_mag += direction * log_abs_gamma(x, sg);
    sign *= sg;
  };
  for (const auto& f : expr.numerator) accumulate(f, +1);
  for (const auto& f : expr.denominator) accumulate(f, -1);

  const int net = singular_num - singular_den;
  if (net > 0) return {std::numeric_limits<double>::infinity(), PointClass::Pole, net};
  if (net < 0) return {0.0, PointClass::Zero, net};
  if (log_mag > std::log(std::numeric_limits<double>::max())) {
    std::ostringstream os;
    os << "|value| = exp(" << log_mag << ") overflows at s = " << s;
    throw Error(ErrorCode::Overflow, os.str());
  }
  return {sign * std::exp(log_mag), PointClass::Finite, 0};
}

}  // namespace rankone
