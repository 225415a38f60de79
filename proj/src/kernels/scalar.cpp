#include "kernels_impl.hpp"

namespace bellab::kernels::detail {

std::int64_t dot_pm1_scalar(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void lhv_signs_scalar(const double* cos_l, const double* sin_l, double cos_t, double sin_t, std::int8_t sign,
                      std::int8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double c = cos_l[i] * cos_t + sin_l[i] * sin_t;
    out[i] = c >= 0.0 ? sign : static_cast<std::int8_t>(-sign);
  }
}

void conditional_flip_scalar(const std::int8_t* a, const double* u, double p, std::int8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = u[i] < p ? static_cast<std::int8_t>(-a[i]) : a[i];
}

}  // namespace bellab::kernels::detail
