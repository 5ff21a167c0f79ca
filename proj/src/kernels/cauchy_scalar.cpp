#include "rankone/kernels/cauchy.hpp"

namespace rankone::kernels {

void cauchy_sum_scalar(const CauchyNodes& nodes, const CauchyPoints& z, CauchyOut out) noexcept {
  const std::size_t n = nodes.t.size();
  for (std::size_t k = 0; k < z.z_re.size(); ++k) {
    const double zr = z.z_re[k];
    const double zi = z.z_im[k];
    double acc_re = 0.0;
    double acc_im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      // w / (z - t) = w * conj(z - t) / |z - t|^2
      const double dx = zr - nodes.t[i];
      const double dx2 = dx * dx;
      const double dy2 = zi * zi;
      const double r = dx2 + dy2;
      const double a = nodes.w_re[i] * dx;
      const double b = nodes.w_im[i] * zi;
      const double c = nodes.w_im[i] * dx;
      const double e = nodes.w_re[i] * zi;
      acc_re = acc_re + (a + b) / r;
      acc_im = acc_im + (c - e) / r;
    }
    out.re[k] = acc_re;
    out.im[k] = acc_im;
  }
}

}  // namespace rankone::kernels
