#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "rankone/quadrature.hpp"

using namespace rankone;

TEST_CASE("polynomials up to degree 29 integrate exactly on one panel") {
  for (int k = 0; k <= 29; ++k) {
    const auto r = integrate<double>([k](double x) { return std::pow(x, k); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
    CHECK(r.converged);
  }
}

TEST_CASE("smooth and peaked integrands") {
  auto r = integrate<double>([](double x) { return std::exp(x); }, -1.0, 2.0);
  CHECK(r.value == doctest::Approx(std::exp(2.0) - std::exp(-1.0)).epsilon(1e-13));

  // Lorentzian of width 1e-4: the peak refinement rule must find it.
  const double y = 1e-4;
  QuadratureOptions o;
  o.abs_tol = 1e-10;
  r = integrate<double>([y](double x) { return y / (x * x + y * y); }, -1.0, 1.0, o);
  CHECK(r.value == doctest::Approx(2.0 * std::atan(1.0 / y)).epsilon(1e-9));
  CHECK(r.converged);
}

TEST_CASE("breakpoints and complex values") {
  QuadratureOptions o;
  o.breakpoints = {0.3};
  auto r = integrate<double>([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, o);
  CHECK(r.value == doctest::Approx(0.045 + 0.245).epsilon(1e-14));
  CHECK(r.intervals >= 2);

  const auto c = integrate<std::complex<double>>(
      [](double x) { return std::exp(std::complex<double>(0, x)); }, 0.0, std::numbers::pi);
  CHECK(c.value.real() == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(c.value.imag() == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("degenerate interval and error estimate honesty") {
  auto r = integrate<double>([](double) { return 1.0; }, 1.0, 1.0);
  CHECK(r.value == 0.0);
  r = integrate<double>([](double x) { return std::sqrt(x); }, 0.0, 1.0);
  CHECK(std::abs(r.value - 2.0 / 3.0) <= std::max(r.error, 1e-12));
}

TEST_CASE("batch integrand sees all nodes of a panel at once") {
  std::size_t calls = 0;
  BatchIntegrand<double> f = [&](std::span<const double> x, std::span<double> fx) {
    ++calls;
    CHECK(x.size() == 15);
    for (std::size_t i = 0; i < x.size(); ++i) fx[i] = x[i] * x[i];
  };
  const auto r = integrate_batch<double>(f, 0.0, 3.0);
  CHECK(r.value == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(r.evaluations == 15 * calls);
}
