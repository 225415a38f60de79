#pragma once

// Quantum predictions and sampling for the spin-1/2 singlet.
//
// Joint law used for a pair measured along thetaA (Alice) and thetaB (Bob):
//   P(a, b) = (1 - a*b*cos(thetaA - thetaB)) / 4,
// i.e. a fair a, then b = -a with probability (1 + cos)/2. This is exactly
// "measure a, collapse the partner to |-a> along thetaA, measure it along
// thetaB", and the implementation draws it that way so the two routes agree
// draw for draw.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bellab/core.hpp"

namespace bellab::quantum {

/// <A, B> for a singlet pair: -cos(thetaA - thetaB).
double twisted_malus(Angle theta_a, Angle theta_b);

/// Seeded pair emitter. Randomness for pair i depends only on (seed, i);
/// the counter just hands out fresh indices for sequential use.
class SingletSource {
 public:
  explicit SingletSource(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t pair_counter() const noexcept { return counter_; }
  std::uint64_t next_index() noexcept { return counter_++; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Pure one-particle state |sign> along axis_angle.
struct PreparedState {
  Angle axis_angle;
  Outcome sign;
};

std::pair<Outcome, Outcome> sample_pair_at(const SingletSource& source, std::uint64_t pair_index, Angle theta_a,
                                           Angle theta_b);
std::pair<Outcome, Outcome> sample_pair(SingletSource& source, Angle theta_a, Angle theta_b);

/// Partner state after observing `p_outcome` along `p_axis`.
PreparedState collapse(Outcome p_outcome, Angle p_axis);

/// Probability that measuring `state` along `theta` returns state.sign:
/// (1 + cos(theta - axis)) / 2.
double agreement_probability(const PreparedState& state, Angle theta);

/// Born-rule draw from a uniform `u` in [0, 1): state.sign when
/// u < agreement_probability, else -state.sign.
Outcome sample_prepared(const PreparedState& state, Angle theta, double u);
Outcome sample_prepared(const PreparedState& state, Angle theta, SingletSource& source);

/// Alice's and Bob's sequences for pairs [first_pair, first_pair + n).
struct PairBatch {
  OutcomeSequence alice;
  OutcomeSequence bob;
};
PairBatch sample_pairs(const SingletSource& source, std::uint64_t first_pair, std::size_t n, Angle theta_a,
                       Angle theta_b);

/// Vectorized sample_prepared for states sharing one axis.
std::vector<std::int8_t> sample_prepared_batch(std::span<const std::int8_t> state_signs, Angle state_axis,
                                               Angle theta, std::span<const double> u);

}  // namespace bellab::quantum
