#include <doctest.h>

#include <bit>
#include <complex>
#include <random>

#include "rankone/kernels/cauchy.hpp"

using namespace rankone::kernels;

namespace {

struct Case {
  std::vector<double> t, wr, wi, zr, zi;
};

Case random_case(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> y(1e-6, 2.0);
  Case c;
  for (std::size_t i = 0; i < n; ++i) {
    c.t.push_back(u(rng));
    c.wr.push_back(u(rng));
    c.wi.push_back(u(rng));
  }
  for (std::size_t k = 0; k < m; ++k) {
    c.zr.push_back(u(rng));
    c.zi.push_back(k % 3 == 0 ? -y(rng) : y(rng));
  }
  return c;
}

void run(Isa isa, const Case& c, std::vector<double>& re, std::vector<double>& im) {
  re.assign(c.zr.size(), -1.0);
  im.assign(c.zr.size(), -1.0);
  cauchy_sum(isa, {c.t, c.wr, c.wi}, {c.zr, c.zi}, {re, im});
}

}  // namespace

TEST_CASE("scalar reference matches the direct complex sum") {
  std::mt19937_64 rng(7);
  const auto c = random_case(rng, 9, 13);
  std::vector<double> re, im;
  run(Isa::Scalar, c, re, im);
  for (std::size_t k = 0; k < c.zr.size(); ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < c.t.size(); ++i)
      acc += std::complex<double>(c.wr[i], c.wi[i]) / (std::complex<double>(c.zr[k], c.zi[k]) - c.t[i]);
    CHECK(re[k] == doctest::Approx(acc.real()).epsilon(1e-12));
    CHECK(im[k] == doctest::Approx(acc.imag()).epsilon(1e-12));
  }
}

TEST_CASE("every available variant is bit-identical to the scalar reference") {
  std::mt19937_64 rng(12345);
  for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
    if (!isa_available(isa)) {
      MESSAGE("variant not available on this host: " << to_string(isa));
      continue;
    }
    for (std::size_t n : {0u, 1u, 3u, 16u, 57u}) {
      for (std::size_t m : {0u, 1u, 3u, 4u, 5u, 15u, 64u, 103u}) {
        const auto c = random_case(rng, n, m);
        std::vector<double> r0, i0, r1, i1;
        run(Isa::Scalar, c, r0, i0);
        run(isa, c, r1, i1);
        for (std::size_t k = 0; k < m; ++k) {
          CHECK(std::bit_cast<std::uint64_t>(r0[k]) == std::bit_cast<std::uint64_t>(r1[k]));
          CHECK(std::bit_cast<std::uint64_t>(i0[k]) == std::bit_cast<std::uint64_t>(i1[k]));
        }
      }
    }
  }
}

TEST_CASE("forced dispatch and fallback") {
  force_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  force_isa(Isa::Avx2);
  CHECK(active_isa() == (isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar));
  force_isa(std::nullopt);
  CHECK(isa_available(Isa::Scalar));
  CHECK(to_string(Isa::Scalar) == "scalar");
}
