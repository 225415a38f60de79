#pragma once

// Data-parallel inner loops over ±1 sequences. Every kernel has a portable
// scalar reference and, where the build and CPU allow it, an AVX2 variant.
// The active table is picked once at first use; set BELLAB_KERNEL to
// "scalar" or "avx2" to force a variant.
//
// All variants must produce bit-identical results. The floating-point
// kernels use only IEEE mul/add/compare in a fixed order (no FMA
// contraction), so this holds exactly.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bellab::kernels {

struct KernelTable {
  std::string_view name;

  // sum_i a[i] * b[i] for a, b in {-1,+1}.
  std::int64_t (*dot_pm1)(const std::int8_t* a, const std::int8_t* b, std::size_t n);

  // out[i] = sign * (cos_l[i]*cos_t + sin_l[i]*sin_t >= 0 ? +1 : -1)
  void (*lhv_signs)(const double* cos_l, const double* sin_l, double cos_t, double sin_t, std::int8_t sign,
                    std::int8_t* out, std::size_t n);

  // out[i] = u[i] < p ? -a[i] : a[i]
  void (*conditional_flip)(const std::int8_t* a, const double* u, double p, std::int8_t* out, std::size_t n);
};

const KernelTable& scalar() noexcept;
/// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const KernelTable* avx2() noexcept;
/// All variants usable on this machine, scalar first.
std::vector<const KernelTable*> available();
const KernelTable& active();

std::int64_t dot_pm1(std::span<const std::int8_t> a, std::span<const std::int8_t> b);
void lhv_signs(std::span<const double> cos_l, std::span<const double> sin_l, double cos_t, double sin_t,
               std::int8_t sign, std::span<std::int8_t> out);
void conditional_flip(std::span<const std::int8_t> a, std::span<const double> u, double p,
                      std::span<std::int8_t> out);

}  // namespace bellab::kernels
