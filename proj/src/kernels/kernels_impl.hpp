#pragma once

#include <cstddef>
#include <cstdint>

namespace bellab::kernels::detail {

std::int64_t dot_pm1_scalar(const std::int8_t* a, const std::int8_t* b, std::size_t n);
void lhv_signs_scalar(const double* cos_l, const double* sin_l, double cos_t, double sin_t, std::int8_t sign,
                      std::int8_t* out, std::size_t n);
void conditional_flip_scalar(const std::int8_t* a, const double* u, double p, std::int8_t* out, std::size_t n);

#if BELLAB_HAVE_AVX2
std::int64_t dot_pm1_avx2(const std::int8_t* a, const std::int8_t* b, std::size_t n);
void lhv_signs_avx2(const double* cos_l, const double* sin_l, double cos_t, double sin_t, std::int8_t sign,
                    std::int8_t* out, std::size_t n);
void conditional_flip_avx2(const std::int8_t* a, const double* u, double p, std::int8_t* out, std::size_t n);
#endif

}  // namespace bellab::kernels::detail
