// Compiled with -mavx2; only reached through the dispatcher after a CPUID check.

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <cstring>

#include "kernels_impl.hpp"

namespace bellab::kernels::detail {

namespace {

// 4-bit mask -> four bytes, byte k = bit k ? hit : miss.
constexpr std::array<std::uint32_t, 16> make_byte_lut(std::uint8_t hit, std::uint8_t miss) {
  std::array<std::uint32_t, 16> lut{};
  for (unsigned m = 0; m < 16; ++m) {
    std::uint32_t w = 0;
    for (unsigned k = 0; k < 4; ++k) w |= static_cast<std::uint32_t>((m >> k) & 1u ? hit : miss) << (8 * k);
    lut[m] = w;
  }
  return lut;
}

constexpr auto kPlusIfSet = make_byte_lut(0x01, 0xFF);
constexpr auto kMinusIfSet = make_byte_lut(0xFF, 0x01);

inline std::int64_t hsum_epi32(__m256i v) {
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  std::int64_t s = 0;
  for (std::int32_t x : lanes) s += x;
  return s;
}

}  // namespace

std::int64_t dot_pm1_avx2(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
  const __m256i ones8 = _mm256_set1_epi8(1);
  const __m256i ones16 = _mm256_set1_epi16(1);
  __m256i acc32 = _mm256_setzero_si256();

  // Each maddubs lane is in [-2, 2]; flushing every 16000 steps keeps the
  // int16 accumulators below 32767.
  constexpr std::size_t kFlush = 16000;
  std::size_t i = 0;
  const std::size_t vec_end = n - n % 32;
  while (i < vec_end) {
    const std::size_t chunk_end = std::min(vec_end, i + 32 * kFlush);
    __m256i acc16 = _mm256_setzero_si256();
    for (; i < chunk_end; i += 32) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      const __m256i prod = _mm256_sign_epi8(va, vb);
      acc16 = _mm256_add_epi16(acc16, _mm256_maddubs_epi16(ones8, prod));
    }
    acc32 = _mm256_add_epi32(acc32, _mm256_madd_epi16(acc16, ones16));
  }
  std::int64_t s = hsum_epi32(acc32);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void lhv_signs_avx2(const double* cos_l, const double* sin_l, double cos_t, double sin_t, std::int8_t sign,
                    std::int8_t* out, std::size_t n) {
  const __m256d ct = _mm256_set1_pd(cos_t);
  const __m256d st = _mm256_set1_pd(sin_t);
  const __m256d zero = _mm256_setzero_pd();
  const auto& lut = sign > 0 ? kPlusIfSet : kMinusIfSet;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d c = _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(cos_l + i), ct),
                                    _mm256_mul_pd(_mm256_loadu_pd(sin_l + i), st));
    const int m = _mm256_movemask_pd(_mm256_cmp_pd(c, zero, _CMP_GE_OQ));
    std::memcpy(out + i, &lut[static_cast<unsigned>(m)], 4);
  }
  lhv_signs_scalar(cos_l + i, sin_l + i, cos_t, sin_t, sign, out + i, n - i);
}

void conditional_flip_avx2(const std::int8_t* a, const double* u, double p, std::int8_t* out, std::size_t n) {
  const __m256d vp = _mm256_set1_pd(p);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    std::uint32_t words[4];
    for (int k = 0; k < 4; ++k) {
      const int m = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(u + i + 4 * k), vp, _CMP_LT_OQ));
      words[k] = kMinusIfSet[static_cast<unsigned>(m)];
    }
    const __m128i mult = _mm_loadu_si128(reinterpret_cast<const __m128i*>(words));
    const __m128i va = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), _mm_sign_epi8(va, mult));
  }
  conditional_flip_scalar(a + i, u + i, p, out + i, n - i);
}

}  // namespace bellab::kernels::detail
