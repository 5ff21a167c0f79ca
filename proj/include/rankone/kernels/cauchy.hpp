#pragma once

// Batched Cauchy sums  out[k] = sum_i w_i / (z_k - t_i)  over real nodes t_i
// with complex weights w_i, evaluated at complex points z_k.
//
// The scalar kernel is the reference. Vector variants walk the nodes in the
// same order with the same operations (no contraction), so every variant is
// bit-identical to the reference.

#include <optional>
#include <span>
#include <string_view>

namespace rankone::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

struct CauchyNodes {
  std::span<const double> t;
  std::span<const double> w_re;
  std::span<const double> w_im;
};

struct CauchyPoints {
  std::span<const double> z_re;
  std::span<const double> z_im;
};

struct CauchyOut {
  std::span<double> re;
  std::span<double> im;
};

void cauchy_sum_scalar(const CauchyNodes& nodes, const CauchyPoints& z, CauchyOut out) noexcept;
#if defined(RANKONE_HAVE_AVX2_KERNELS) || defined(RANKONE_DECLARE_ALL_KERNELS)
void cauchy_sum_avx2(const CauchyNodes& nodes, const CauchyPoints& z, CauchyOut out) noexcept;
#endif

// True if the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

// The variant cauchy_sum() dispatches to. Defaults to the best available;
// RANKONE_KERNEL=scalar in the environment pins the reference.
Isa active_isa() noexcept;

// Overrides dispatch (nullopt restores the default). Unavailable requests fall
// back to Scalar. Not synchronised with concurrent cauchy_sum() calls.
void force_isa(std::optional<Isa> isa) noexcept;

void cauchy_sum(const CauchyNodes& nodes, const CauchyPoints& z, CauchyOut out) noexcept;

// Explicit variant, for equivalence tests. Falls back to Scalar when `isa`
// is unavailable.
void cauchy_sum(Isa isa, const CauchyNodes& nodes, const CauchyPoints& z, CauchyOut out) noexcept;

}  // namespace rankone::kernels
