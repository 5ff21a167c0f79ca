#include <atomic>
#include <cstdlib>
#include <cstring>

#include "rankone/kernels/cauchy.hpp"

namespace rankone::kernels {

namespace {

Isa detect_default() noexcept {
  if (const char* env = std::getenv("RANKONE_KERNEL"); env && std::strcmp(env, "scalar") == 0)
    return Isa::Scalar;
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<int>& forced() noexcept {
  static std::atomic<int> v{-1};
  return v;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(RANKONE_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept {
  const int f = forced().load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Isa>(f);
  static const Isa best = detect_default();
  return best;
}

void force_isa(std::optional<Isa> isa) noexcept {
  if (!isa) {
    forced().store(-1, std::memory_order_relaxed);
    return;
  }
  forced().store(static_cast<int>(isa_available(*isa) ? *isa : Isa::Scalar),
                 std::memory_order_relaxed);
}

void cauchy_sum(Isa isa, const CauchyNodes& nodes, const CauchyPoints& z, CauchyOut out) noexcept {
  switch (isa_available(isa) ? isa : Isa::Scalar) {
#if defined(RANKONE_HAVE_AVX2_KERNELS)
    case Isa::Avx2: cauchy_sum_avx2(nodes, z, out); return;
#endif
    default: cauchy_sum_scalar(nodes, z, out); return;
  }
}

void cauchy_sum(const CauchyNodes& nodes, const CauchyPoints& z, CauchyOut out) noexcept {
  cauchy_sum(active_isa(), nodes, z, out);
}

}  // namespace rankone::kernels
