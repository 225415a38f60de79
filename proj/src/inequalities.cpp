#include "bellab/inequalities.hpp"

#include <cmath>
#include <cstdlib>

#include "bellab/kernels.hpp"

namespace bellab::inequalities {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) throw DomainError("sequences differ in length");
}

void require_correlation(double c) {
  if (!(c >= -1.0 && c <= 1.0)) throw DomainError("correlation must lie in [-1, 1]");
}

}  // namespace

SicaV3 sica_v3_check(std::span<const std::int8_t> x, std::span<const std::int8_t> y, std::span<const std::int8_t> z) {
  require_same_length(x.size(), y.size());
  require_same_length(x.size(), z.size());
  if (x.empty()) throw DomainError("sica_v3_check: empty sequences");
  SicaV3 r;
  r.n = static_cast<std::int64_t>(x.size());
  r.sum_xy = kernels::dot_pm1(x, y);
  r.sum_xz = kernels::dot_pm1(x, z);
  r.sum_yz = kernels::dot_pm1(y, z);
  r.slack_numerator = (r.n - r.sum_yz) - std::llabs(r.sum_xy - r.sum_xz);
  return r;
}

SicaV3 sica_v3_check(const OutcomeSequence& x, const OutcomeSequence& y, const OutcomeSequence& z) {
  return sica_v3_check(x.values(), y.values(), z.values());
}

SicaV4 sica_v4_check(std::span<const std::int8_t> w, std::span<const std::int8_t> x, std::span<const std::int8_t> y,
                     std::span<const std::int8_t> z) {
  require_same_length(w.size(), x.size());
  require_same_length(w.size(), y.size());
  require_same_length(w.size(), z.size());
  if (w.empty()) throw DomainError("sica_v4_check: empty sequences");
  SicaV4 r;
  r.n = static_cast<std::int64_t>(w.size());
  r.sum_xy = kernels::dot_pm1(x, y);
  r.sum_xz = kernels::dot_pm1(x, z);
  r.sum_wy = kernels::dot_pm1(w, y);
  r.sum_wz = kernels::dot_pm1(w, z);
  r.margin_numerator = 2 * r.n - (std::llabs(r.sum_xy + r.sum_xz) + std::llabs(r.sum_wy - r.sum_wz));
  return r;
}

SicaV4 sica_v4_check(const OutcomeSequence& w, const OutcomeSequence& x, const OutcomeSequence& y,
                     const OutcomeSequence& z) {
  return sica_v4_check(w.values(), x.values(), y.values(), z.values());
}

V3Report eval_v3(double c_xy, double c_xz, double c_yz) {
  require_correlation(c_xy);
  require_correlation(c_xz);
  require_correlation(c_yz);
  V3Report r{c_xy, c_xz, c_yz};
  r.lhs = std::abs(c_xy - c_xz);
  r.rhs = 1.0 - c_yz;
  r.slack = r.rhs - r.lhs;
  r.violated = r.slack < 0.0;
  return r;
}

V4Report eval_v4(double c1, double c2, double c3, double c4) {
  for (double c : {c1, c2, c3, c4}) require_correlation(c);
  V4Report r{c1, c2, c3, c4};
  r.s = std::abs(c1 + c2) + std::abs(c3 - c4);
  r.violated = r.s > 2.0;
  return r;
}

std::vector<V3Report> v3_role_assignments(double c12, double c13, double c23) {
  // (x, y, z) index triples; corr(i, j) looks up the symmetric pair.
  const double c[3][3] = {{1.0, c12, c13}, {c12, 1.0, c23}, {c13, c23, 1.0}};
  constexpr int roles[3][3] = {{0, 1, 2}, {1, 0, 2}, {2, 0, 1}};
  std::vector<V3Report> out;
  for (const auto& r : roles) {
    for (double zsign : {1.0, -1.0}) {
      const int x = r[0], y = r[1], z = r[2];
      out.push_back(eval_v3(c[x][y], zsign * c[x][z], zsign * c[y][z]));
    }
  }
  return out;
}

}  // namespace bellab::inequalities
