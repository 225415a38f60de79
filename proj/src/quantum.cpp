#include "bellab/quantum.hpp"

#include <cmath>

#include "bellab/kernels.hpp"
#include "bellab/rng.hpp"

namespace bellab::quantum {

namespace {

// Probability that Bob's value is the negation of Alice's.
double anti_probability(Angle theta_a, Angle theta_b) {
  return (1.0 + std::cos((theta_b - theta_a).radians())) / 2.0;
}

}  // namespace

double twisted_malus(Angle theta_a, Angle theta_b) { return -std::cos((theta_a - theta_b).radians()); }

std::pair<Outcome, Outcome> sample_pair_at(const SingletSource& source, std::uint64_t pair_index, Angle theta_a,
                                           Angle theta_b) {
  const Outcome a(rng::fair_sign(source.seed(), rng::Stream::SourceSign, pair_index));
  const double u = rng::uniform(source.seed(), rng::Stream::JointFlip, pair_index);
  return {a, sample_prepared(collapse(a, theta_a), theta_b, u)};
}

std::pair<Outcome, Outcome> sample_pair(SingletSource& source, Angle theta_a, Angle theta_b) {
  return sample_pair_at(source, source.next_index(), theta_a, theta_b);
}

PreparedState collapse(Outcome p_outcome, Angle p_axis) { return {p_axis, -p_outcome}; }

double agreement_probability(const PreparedState& state, Angle theta) {
  return (1.0 + std::cos((theta - state.axis_angle).radians())) / 2.0;
}

Outcome sample_prepared(const PreparedState& state, Angle theta, double u) {
  return u < agreement_probability(state, theta) ? state.sign : -state.sign;
}

Outcome sample_prepared(const PreparedState& state, Angle theta, SingletSource& source) {
  return sample_prepared(state, theta, rng::uniform(source.seed(), rng::Stream::Prepared, source.next_index()));
}

PairBatch sample_pairs(const SingletSource& source, std::uint64_t first_pair, std::size_t n, Angle theta_a,
                       Angle theta_b) {
  std::vector<std::int8_t> a(n), b(n);
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = static_cast<std::int8_t>(rng::fair_sign(source.seed(), rng::Stream::SourceSign, first_pair + i));
    u[i] = rng::uniform(source.seed(), rng::Stream::JointFlip, first_pair + i);
  }
  kernels::conditional_flip(a, u, anti_probability(theta_a, theta_b), b);
  return {OutcomeSequence({theta_a, Side::Alice}, std::move(a), Provenance::Measured),
          OutcomeSequence({theta_b, Side::Bob}, std::move(b), Provenance::Measured)};
}

std::vector<std::int8_t> sample_prepared_batch(std::span<const std::int8_t> state_signs, Angle state_axis,
                                               Angle theta, std::span<const double> u) {
  // u < q ? s : -s  ==  conditional_flip(-s, u, q)
  std::vector<std::int8_t> neg(state_signs.size()), out(state_signs.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = static_cast<std::int8_t>(-state_signs[i]);
  const double q = (1.0 + std::cos((theta - state_axis).radians())) / 2.0;
  kernels::conditional_flip(neg, u, q, out);
  return out;
}

}  // namespace bellab::quantum
