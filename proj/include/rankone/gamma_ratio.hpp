#pragma once

// Symbolic products of Gamma factors
//
//   q * 2^(alpha*s + beta) * prod Gamma(u_i*s + a_i) / prod Gamma(v_k*s + b_k)
//
// with exact rational q, alpha, beta, a_i, b_k, evaluated pointwise in the log
// domain with sign tracking and explicit pole/zero bookkeeping.

#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rankone {

using Rational = boost::multiprecision::cpp_rational;

struct GammaFactor {
  int u = 1;   // coefficient of s, 1 or 2
  Rational a;  // constant offset

  friend auto operator<=>(const GammaFactor& x, const GammaFactor& y) {
    if (auto c = x.u <=> y.u; c != 0) return c;
    if (x.a < y.a) return std::strong_ordering::less;
    if (y.a < x.a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const GammaFactor& x, const GammaFactor& y) {
    return x.u == y.u && x.a == y.a;
  }
};

struct GammaRatioExpr {
  Rational prefactor = 1;
  Rational two_power_alpha = 0;
  Rational two_power_beta = 0;
  std::vector<GammaFactor> numerator;
  std::vector<GammaFactor> denominator;

  // Sorts both factor lists and cancels identical (u, a) pairs.
  GammaRatioExpr& normalize();
  bool is_normalized() const;

  std::string to_string() const;
};

enum class PointClass { Finite, Zero, Pole };

const char* to_string(PointClass c) noexcept;

struct GammaEvaluation {
  double value = 0.0;
  PointClass classification = PointClass::Finite;
  // (#singular numerator factors) - (#singular denominator factors).
  int net_order = 0;
};

struct EvaluateOptions {
  // A Gamma argument closer than this to a non-positive integer is singular.
  double tol_pole = 1e-9;
};

// Throws Error{Overflow} when |value| leaves the double range.
GammaEvaluation evaluate(const GammaRatioExpr& expr, double s, const EvaluateOptions& opts = {});

// log|Gamma(x)| and sign(Gamma(x)) for x not a pole.
double log_abs_gamma(double x, int& sign);

}  // namespace rankone
