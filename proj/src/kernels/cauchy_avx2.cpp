#include <immintrin.h>

#include "rankone/kernels/cauchy.hpp"

namespace rankone::kernels {

// Four evaluation points per lane group; nodes broadcast one at a time so the
// accumulation order matches cauchy_sum_scalar exactly.
void cauchy_sum_avx2(const CauchyNodes& nodes, const CauchyPoints& z, CauchyOut out) noexcept {
  const std::size_t n = nodes.t.size();
  const std::size_t m = z.z_re.size();
  std::size_t k = 0;
  for (; k + 4 <= m; k += 4) {
    const __m256d zr = _mm256_loadu_pd(z.z_re.data() + k);
    const __m256d zi = _mm256_loadu_pd(z.z_im.data() + k);
    const __m256d dy2 = _mm256_mul_pd(zi, zi);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n; ++i) {
      const __m256d t = _mm256_broadcast_sd(nodes.t.data() + i);
      const __m256d wr = _mm256_broadcast_sd(nodes.w_re.data() + i);
      const __m256d wi = _mm256_broadcast_sd(nodes.w_im.data() + i);
      const __m256d dx = _mm256_sub_pd(zr, t);
      const __m256d r = _mm256_add_pd(_mm256_mul_pd(dx, dx), dy2);
      const __m256d a = _mm256_mul_pd(wr, dx);
      const __m256d b = _mm256_mul_pd(wi, zi);
      const __m256d c = _mm256_mul_pd(wi, dx);
      const __m256d e = _mm256_mul_pd(wr, zi);
      acc_re = _mm256_add_pd(acc_re, _mm256_div_pd(_mm256_add_pd(a, b), r));
      acc_im = _mm256_add_pd(acc_im, _mm256_div_pd(_mm256_sub_pd(c, e), r));
    }
    _mm256_storeu_pd(out.re.data() + k, acc_re);
    _mm256_storeu_pd(out.im.data() + k, acc_im);
  }
  if (k < m) {
    const CauchyPoints tail{z.z_re.subspan(k), z.z_im.subspan(k)};
    cauchy_sum_scalar(nodes, tail, CauchyOut{out.re.subspan(k), out.im.subspan(k)});
  }
}

}  // namespace rankone::kernels
