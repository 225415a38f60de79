#include <cmath>

#include "bellab/relativity.hpp"

namespace bellab::relativity {

std::string_view to_string(NoCorrelationVerdict v) noexcept {
  return v == NoCorrelationVerdict::Consistent ? "CONSISTENT" : "WITNESS-OF-EACP-VIOLATION";
}

namespace {

Block same_side_block(Angle theta_e, Angle theta_e_prime, Angle theta_p, std::size_t n) {
  Block b;
  b.count = n;
  b.axes.set(AxisSymbol::E, theta_e).set(AxisSymbol::EPrime, theta_e_prime).set(AxisSymbol::P, theta_p);
  return b;
}

std::size_t agreements(std::span<const std::int8_t> a, std::span<const std::int8_t> b) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) k += a[i] == b[i];
  return k;
}

}  // namespace

NoCorrelationReport no_correlation_check(const realism::CounterfactualModel& model, Angle theta_e,
                                         Angle theta_e_prime, Angle theta_p, std::size_t n, std::uint64_t seed,
                                         double tolerance) {
  if (n == 0) throw DomainError("no_correlation_check: n must be positive");
  if (!model.supports(AxisSymbol::EPrime)) throw ModelError("model cannot produce E'");

  const auto block = model.generate_block(same_side_block(theta_e, theta_e_prime, theta_p, n), seed);
  NoCorrelationReport r;
  r.estimate = correlate(block.at(AxisSymbol::E), block.at(AxisSymbol::EPrime));
  r.orthogonal = orthogonal(theta_e, theta_e_prime);
  r.tolerance = tolerance > 0.0 ? tolerance : 4.0 / std::sqrt(static_cast<double>(n));
  const bool ok = std::abs(r.estimate.mean()) <= r.tolerance && r.estimate.straddles_zero();
  r.verdict = ok ? NoCorrelationVerdict::Consistent : NoCorrelationVerdict::WitnessOfEacpViolation;
  return r;
}

MirrorSymmetryReport mirror_symmetry_check(const realism::CounterfactualModel& model, Angle theta_e,
                                           Angle theta_e_prime, Angle theta_p, std::size_t n, std::uint64_t seed) {
  const Angle reversed = theta_e_prime + Angle(kPi);
  const auto primed = model.generate_block(same_side_block(theta_e, theta_e_prime, theta_p, n), seed);
  const auto double_primed = model.generate_block(same_side_block(theta_e, reversed, theta_p, n), seed);
  return {n, agreements(primed.at(AxisSymbol::E).values(), primed.at(AxisSymbol::EPrime).values()),
          agreements(double_primed.at(AxisSymbol::E).values(), double_primed.at(AxisSymbol::EPrime).values())};
}

}  // namespace bellab::relativity
