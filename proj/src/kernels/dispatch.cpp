#include <cstdlib>
#include <string>

#include "bellab/core.hpp"
#include "bellab/kernels.hpp"
#include "kernels_impl.hpp"

namespace bellab::kernels {

namespace {

const KernelTable kScalar{"scalar", &detail::dot_pm1_scalar, &detail::lhv_signs_scalar,
                          &detail::conditional_flip_scalar};

#if BELLAB_HAVE_AVX2
const KernelTable kAvx2{"avx2", &detail::dot_pm1_avx2, &detail::lhv_signs_avx2, &detail::conditional_flip_avx2};

bool cpu_has_avx2() noexcept {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

const KernelTable& select() {
  const char* env = std::getenv("BELLAB_KERNEL");
  const std::string wanted = env ? env : "auto";
  if (wanted == "scalar") return kScalar;
  if (wanted == "avx2") {
    if (const KernelTable* k = avx2()) return *k;
    throw ConfigError("BELLAB_KERNEL=avx2 requested but AVX2 is unavailable");
  }
  if (wanted != "auto") throw ConfigError("unknown BELLAB_KERNEL value: " + wanted);
  if (const KernelTable* k = avx2()) return *k;
  return kScalar;
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw DomainError("kernel operands differ in length");
}

}  // namespace

const KernelTable& scalar() noexcept { return kScalar; }

const KernelTable* avx2() noexcept {
#if BELLAB_HAVE_AVX2
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

std::vector<const KernelTable*> available() {
  std::vector<const KernelTable*> out{&kScalar};
  if (const KernelTable* k = avx2()) out.push_back(k);
  return out;
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

std::int64_t dot_pm1(std::span<const std::int8_t> a, std::span<const std::int8_t> b) {
  require_same_size(a.size(), b.size());
  return active().dot_pm1(a.data(), b.data(), a.size());
}

void lhv_signs(std::span<const double> cos_l, std::span<const double> sin_l, double cos_t, double sin_t,
               std::int8_t sign, std::span<std::int8_t> out) {
  require_same_size(cos_l.size(), sin_l.size());
  require_same_size(cos_l.size(), out.size());
  active().lhv_signs(cos_l.data(), sin_l.data(), cos_t, sin_t, sign, out.data(), out.size());
}

void conditional_flip(std::span<const std::int8_t> a, std::span<const double> u, double p,
                      std::span<std::int8_t> out) {
  require_same_size(a.size(), u.size());
  require_same_size(a.size(), out.size());
  active().conditional_flip(a.data(), u.data(), p, out.data(), out.size());
}

}  // namespace bellab::kernels
