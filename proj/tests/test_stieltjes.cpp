#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rankone/error.hpp"
#include "rankone/quadrature.hpp"
#include "rankone/stieltjes.hpp"

using namespace rankone;
using namespace std::complex_literals;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::ParseError;
}

RealLineMeasure linear(double a, double b, Complex c0, Complex c1) {
  return RealLineMeasure({}, {{a, b, Polynomial{{c0, c1}}}});
}

// Counter-clockwise contour integral of f around [x0,x1] x [y0,y1].
Complex contour(const std::function<Complex(Complex)>& f, double x0, double x1, double y0, double y1) {
  QuadratureOptions o;
  o.abs_tol = 1e-12;
  auto side = [&](Complex p, Complex q) {
    return integrate<Complex>([&](double u) { return f(p + u * (q - p)) * (q - p); }, 0.0, 1.0, o).value;
  };
  const Complex a(x0, y0), b(x1, y0), c(x1, y1), d(x0, y1);
  return side(a, b) + side(b, c) + side(c, d) + side(d, a);
}

}  // namespace

TEST_CASE("transform examples") {
  CHECK(std::abs(transform(RealLineMeasure::dirac(0.0), 1i) - Complex(0, -1)) < 1e-15);
  CHECK(std::abs(transform(RealLineMeasure::uniform(0.0, 1.0), 2.0) - std::log(2.0)) < 1e-14);

  const auto n1 = RealLineMeasure::dirac(0.3, Complex(1, 2)) + linear(0.0, 1.0, 0.5, -1.0);
  const auto n2 = RealLineMeasure::uniform(-1.0, 0.2, 1i) + RealLineMeasure::dirac(0.7, -0.4);
  for (Complex z : {Complex(2.0, 0.0), Complex(0.5, 0.1), Complex(-0.2, -0.7)})
    CHECK(std::abs(transform(n1 + n2, z) - transform(n1, z) - transform(n2, z)) < 1e-13);
}

TEST_CASE("transform rejects points on the support") {
  CHECK(code_of([] { transform(RealLineMeasure::dirac(0.5), 0.5); }) == ErrorCode::SingularPoint);
  CHECK(code_of([] { transform(RealLineMeasure::uniform(0.0, 1.0), 0.4); }) == ErrorCode::SingularPoint);
  CHECK(code_of([] { transform(RealLineMeasure::uniform(0.0, 1.0), 1.0); }) == ErrorCode::SingularPoint);
  CHECK(std::isfinite(transform(RealLineMeasure::uniform(0.0, 1.0), Complex(0.4, 1e-6)).real()));
}

TEST_CASE("closed-form densities agree with quadrature") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TransformOptions quad;
  quad.method = DensityMethod::Quadrature;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Complex> coeffs;
    for (int k = 0; k <= trial % 5; ++k) coeffs.emplace_back(u(rng), u(rng));
    const double a = u(rng), b = a + 0.2 + std::abs(u(rng));
    RealLineMeasure nu({}, {{a, b, Polynomial{coeffs}}});
    for (Complex z : {Complex(b + 0.5, 0.0), Complex(0.5 * (a + b), 0.05), Complex(a, -0.3)}) {
      const Complex c = transform(nu, z);
      const Complex q = transform(nu, z, quad);
      CHECK(std::abs(c - q) < 1e-9);
    }
  }
}

TEST_CASE("conjugate symmetry for real measures") {
  const auto nu = RealLineMeasure::dirac(0.2, 0.7) + linear(-1.0, 0.5, 1.0, 2.0) + RealLineMeasure::dirac(1.5, -1.0);
  REQUIRE(nu.is_real());
  for (Complex z : {Complex(0.1, 0.3), Complex(-2.0, 1e-3), Complex(3.0, 0.0), Complex(0.7, 2.0)})
    CHECK(std::abs(transform(nu, std::conj(z)) - std::conj(transform(nu, z))) < 1e-14);
}

TEST_CASE("contour integrals vanish away from the support") {
  const auto nu = RealLineMeasure::dirac(0.2, Complex(0.7, -0.1)) + linear(-1.0, 0.5, 1.0, 2.0);
  auto f = [&](Complex z) { return transform(nu, z); };
  CHECK(std::abs(contour(f, -2.0, 2.0, 0.05, 1.0)) < 1e-9);
  CHECK(std::abs(contour(f, -2.0, 2.0, -1.0, -0.05)) < 1e-9);
  CHECK(std::abs(contour(f, 0.6, 3.0, -1.0, 1.0)) < 1e-9);
  // Enclosing the atom alone picks up 2 pi i w.
  const auto atom = RealLineMeasure::dirac(0.2, Complex(0.7, -0.1));
  auto g = [&](Complex z) { return transform(atom, z); };
  CHECK(std::abs(contour(g, 0.0, 0.4, -0.2, 0.2) - 2.0 * std::numbers::pi * 1i * Complex(0.7, -0.1)) < 1e-9);
}

TEST_CASE("inversion examples") {
  auto r = invert_interval([](Complex z) { return 1.0 / z; }, -1.0, 1.0);
  CHECK(r.estimate == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.converged);
  CHECK(r.raw.size() == 13);
  // At finite y the raw value is (2/pi) arctan(1/y).
  CHECK(r.raw[0] == doctest::Approx(2.0 / std::numbers::pi * std::atan(2.0)).epsilon(1e-8));

  r = invert_measure(RealLineMeasure::uniform(0.0, 1.0), 0.2, 0.5);
  CHECK(std::abs(r.estimate - 0.3) < 1e-6);

  r = invert_measure(RealLineMeasure::dirac(0.2), 0.2, 0.9);
  CHECK(std::abs(r.estimate - 0.5) < 1e-3);
  r = invert_measure(RealLineMeasure::dirac(0.9, 3.0), 0.2, 0.9);
  CHECK(std::abs(r.estimate - 1.5) < 3e-3);
}

TEST_CASE("inversion is linear") {
  const auto n1 = RealLineMeasure::dirac(0.4, 0.8) + linear(0.0, 1.0, 1.0, -0.5);
  const auto n2 = RealLineMeasure::uniform(0.3, 2.0, -2.0);
  const auto a = invert_measure(n1, 0.1, 0.7);
  const auto b = invert_measure(n2, 0.1, 0.7);
  const auto ab = invert_measure(n1 + n2, 0.1, 0.7);
  CHECK(std::abs(ab.estimate - a.estimate - b.estimate) <=
        ab.error_estimate + a.error_estimate + b.error_estimate + 1e-9);
}

TEST_CASE("round trip on a small corpus") {
  const std::vector<RealLineMeasure> corpus{
      RealLineMeasure::dirac(0.5),
      RealLineMeasure::uniform(0.0, 1.0, 2.0),
      linear(-0.5, 1.5, 0.2, 0.7),
      RealLineMeasure::dirac(0.1, -1.0) + RealLineMeasure::dirac(0.8, 0.25) + linear(0.0, 0.6, 1.0, 1.0),
  };
  for (const auto& nu : corpus) {
    for (auto [a, b] : {std::pair{-0.25, 0.35}, std::pair{0.05, 1.05}, std::pair{0.3, 2.0}}) {
      const double exact = nu.mass_closed(a, b).real();
      CHECK(std::abs(invert_measure(nu, a, b).estimate - exact) < 1e-3);
    }
  }
}

TEST_CASE("inversion of complex measures goes through real and imaginary parts") {
  const auto nu = RealLineMeasure::dirac(0.5, Complex(0.3, -0.8)) + RealLineMeasure::uniform(0.0, 1.0, 1i);
  const double re = invert_measure(nu.real_part(), 0.2, 0.7).estimate;
  const double im = invert_measure(nu.imag_part(), 0.2, 0.7).estimate;
  CHECK(re == doctest::Approx(0.3).epsilon(1e-4));
  CHECK(im == doctest::Approx(-0.8 + 0.5).epsilon(1e-4));
}

TEST_CASE("half-mass endpoint rule") {
  for (double w : {1.0, -2.5, 0.125}) {
    const auto left = invert_measure(RealLineMeasure::dirac(-0.3, w), -0.3, 0.4);
    const auto right = invert_measure(RealLineMeasure::dirac(0.4, w), -0.3, 0.4);
    CHECK(std::abs(left.estimate - w / 2) < 1e-3 * std::max(1.0, std::abs(w)));
    CHECK(std::abs(right.estimate - w / 2) < 1e-3 * std::max(1.0, std::abs(w)));
  }
}

TEST_CASE("vanishing detector examples") {
  auto r = vanishing_detector(RealLineMeasure::dirac(2.0), 0.0, 1.0);
  CHECK(r.verdict == Vanishing::Vanishes);
  CHECK(r.continuity_re.decays);

  r = vanishing_detector(RealLineMeasure::uniform(0.0, 1.0), 0.3, 0.6);
  CHECK(r.verdict == Vanishing::DoesNotVanish);
  double total = 0.0;
  for (const auto& m : r.masses) total += m.re;
  CHECK(total == doctest::Approx(0.3).epsilon(1e-4));

  r = vanishing_detector(RealLineMeasure::dirac(0.5), 0.0, 1.0);
  CHECK(r.verdict == Vanishing::DoesNotVanish);
  CHECK_FALSE(r.continuity_re.decays);

  r = vanishing_detector(RealLineMeasure::dirac(0.5, 1i), 0.0, 1.0);
  CHECK(r.verdict == Vanishing::DoesNotVanish);
  CHECK_FALSE(r.continuity_im.decays);
  CHECK(r.continuity_re.decays);

  r = vanishing_detector(RealLineMeasure{}, -1.0, 1.0);
  CHECK(r.verdict == Vanishing::Vanishes);
}

TEST_CASE("interval family examples") {
  CHECK(is_zero_by_interval_family(RealLineMeasure{}, 0.0, 1.0, {0.1, 0.5, 0.9}));
  RealLineMeasure pm({}, {{0.0, 0.5, Polynomial{{1.0}}}, {0.5, 1.0, Polynomial{{-1.0}}}});
  CHECK(pm.mass_closed(0.0, 1.0) == Complex(0.0));
  CHECK_FALSE(is_zero_by_interval_family(pm, -0.1, 1.1, {0.0, 0.4, 1.0}));
  CHECK(is_zero_by_interval_family(pm, -0.1, 1.1, {0.0, 1.0}));
  CHECK(is_zero_by_interval_family(RealLineMeasure::dirac(2.0), 0.0, 1.0, {0.25, 0.5, 0.75}));
  CHECK_FALSE(is_zero_by_interval_family(RealLineMeasure::dirac(0.6), 0.0, 1.0, {0.25, 0.5, 0.75}));

  CHECK(code_of([] { is_zero_by_interval_family(RealLineMeasure::dirac(0.5), 0.0, 1.0, {0.25, 0.5}); }) ==
        ErrorCode::GridHitsAtom);
  CHECK(code_of([] { is_zero_by_interval_family(RealLineMeasure{}, 0.0, 1.0, {1.5}); }) == ErrorCode::DomainError);
}

TEST_CASE("measure masses") {
  const auto nu = RealLineMeasure::dirac(0.5, 2.0) + linear(0.0, 1.0, 0.0, 2.0);
  CHECK(std::abs(nu.mass_closed(0.0, 1.0) - 3.0) < 1e-15);
  CHECK(std::abs(nu.mass({0.0, true}, {0.5, false}) - 0.25) < 1e-15);
  CHECK(std::abs(nu.mass({0.5, true}, {1.0, true}) - 2.75) < 1e-15);
  CHECK(nu.total_variation_bound() >= 3.0);
  double lo = 0, hi = 0;
  REQUIRE(nu.support_hull(lo, hi));
  CHECK(lo == 0.0);
  CHECK(hi == 1.0);
  CHECK_THROWS_AS(RealLineMeasure({{0.1, 1.0}, {0.1, 2.0}}, {}), Error);
  CHECK_THROWS_AS(RealLineMeasure({}, {{1.0, 1.0, Polynomial{{1.0}}}}), Error);
}
