#pragma once

// Shared value types for the Bell-test laboratory: planar axis angles,
// ±1 outcomes, outcome sequences, blocks and correlation statistics.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bellab/errors.hpp"

namespace bellab {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// An angle in radians, always normalized to (-pi, pi].
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : radians_(normalize(radians)) {}

  static double normalize(double radians);

  double radians() const noexcept { return radians_; }

  friend Angle operator-(Angle a, Angle b) { return Angle(a.radians_ - b.radians_); }
  friend Angle operator+(Angle a, Angle b) { return Angle(a.radians_ + b.radians_); }
  friend bool operator==(Angle, Angle) = default;

 private:
  double radians_ = 0.0;
};

enum class Side : std::uint8_t { Alice, Bob };

constexpr Side opposite(Side s) noexcept { return s == Side::Alice ? Side::Bob : Side::Alice; }
std::string_view to_string(Side s) noexcept;

struct OrientedAxis {
  Angle angle;
  Side side = Side::Alice;

  friend bool operator==(const OrientedAxis&, const OrientedAxis&) = default;
};

/// Signed angle from `a1` to `a2`, normalized to (-pi, pi].
Angle angle_between(const OrientedAxis& a1, const OrientedAxis& a2);

/// A normalized spin projection, -1 or +1.
class Outcome {
 public:
  constexpr Outcome() = default;
  explicit Outcome(int value);

  static constexpr Outcome plus() noexcept { return Outcome(Raw{1}); }
  static constexpr Outcome minus() noexcept { return Outcome(Raw{-1}); }

  constexpr int value() const noexcept { return value_; }
  constexpr Outcome operator-() const noexcept { return Outcome(Raw{static_cast<std::int8_t>(-value_)}); }
  friend constexpr bool operator==(Outcome, Outcome) = default;

 private:
  struct Raw {
    std::int8_t v;
  };
  constexpr explicit Outcome(Raw r) : value_(r.v) {}
  std::int8_t value_ = 1;
};

enum class Provenance : std::uint8_t { Measured, Counterfactual };

/// The four observables of a V3/V4 experiment. E and E' live on Alice's
/// side, P and P' on Bob's.
enum class AxisSymbol : std::uint8_t { E = 0, EPrime = 1, P = 2, PPrime = 3 };

inline constexpr std::array<AxisSymbol, 4> kAllAxisSymbols{AxisSymbol::E, AxisSymbol::EPrime, AxisSymbol::P,
                                                           AxisSymbol::PPrime};

constexpr Side side_of(AxisSymbol s) noexcept {
  return (s == AxisSymbol::E || s == AxisSymbol::EPrime) ? Side::Alice : Side::Bob;
}
std::string_view to_string(AxisSymbol s) noexcept;
std::optional<AxisSymbol> parse_axis_symbol(std::string_view name) noexcept;

/// Angles of the configured axes, any subset of {E, E', P, P'}.
class AxisConfig {
 public:
  AxisConfig() = default;

  AxisConfig& set(AxisSymbol s, Angle a) {
    angles_[index(s)] = a;
    return *this;
  }
  AxisConfig& set(AxisSymbol s, double radians) { return set(s, Angle(radians)); }

  bool has(AxisSymbol s) const noexcept { return angles_[index(s)].has_value(); }
  std::optional<Angle> find(AxisSymbol s) const noexcept { return angles_[index(s)]; }
  /// Throws DomainError when the axis is not configured.
  Angle at(AxisSymbol s) const;
  OrientedAxis axis(AxisSymbol s) const { return {at(s), side_of(s)}; }

  std::vector<AxisSymbol> symbols() const;

  friend bool operator==(const AxisConfig&, const AxisConfig&) = default;

 private:
  static constexpr std::size_t index(AxisSymbol s) noexcept { return static_cast<std::size_t>(s); }
  std::array<std::optional<Angle>, 4> angles_{};
};

/// A finite run of ±1 values along one axis. Values are stored as int8 so
/// they can be fed straight into the vector kernels.
class OutcomeSequence {
 public:
  OutcomeSequence() = default;
  OutcomeSequence(OrientedAxis axis, std::vector<std::int8_t> values, Provenance provenance);

  const OrientedAxis& axis() const noexcept { return axis_; }
  Provenance provenance() const noexcept { return provenance_; }
  std::span<const std::int8_t> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  Outcome operator[](std::size_t i) const { return Outcome(values_[i]); }

  OutcomeSequence negated() const;

  friend bool operator==(const OutcomeSequence&, const OutcomeSequence&) = default;

 private:
  OrientedAxis axis_{};
  std::vector<std::int8_t> values_;
  Provenance provenance_ = Provenance::Measured;
};

/// Same values negated, moved to the opposite side at the same angle.
OutcomeSequence mirror(const OutcomeSequence& q);

/// A run of consecutive pairs I_k during which no axis changes.
struct Block {
  std::size_t index = 0;       // k
  std::uint64_t first_pair = 0;  // global index of the first pair in the block
  std::size_t count = 1;       // N_k
  AxisConfig axes;
};

/// Burn-in used for the running extrema: ceil(sqrt(n)).
std::size_t default_burn_in(std::size_t n) noexcept;

/// Running estimate of <u,v>. The sum of products is kept as an integer so
/// merging is exact. running_min_mean / running_max_mean bracket the partial
/// means (1/k) sum_{i<=k} u_i v_i for k > burn_in, and always include the
/// final mean.
struct CorrelationEstimate {
  std::uint64_t n = 0;
  std::int64_t sum_products = 0;
  double running_min_mean = 0.0;
  double running_max_mean = 0.0;
  std::uint64_t burn_in = 0;

  double mean() const noexcept { return n == 0 ? 0.0 : static_cast<double>(sum_products) / static_cast<double>(n); }
  bool empty() const noexcept { return n == 0; }
  /// True when the tracked partial means take both signs (or touch zero).
  bool straddles_zero() const noexcept { return running_min_mean <= 0.0 && running_max_mean >= 0.0; }
};

CorrelationEstimate correlate(const OutcomeSequence& u, const OutcomeSequence& v);
CorrelationEstimate correlate(std::span<const std::int8_t> u, std::span<const std::int8_t> v);

/// Combines estimates over consecutive index ranges (e1 first). Counts and
/// sums are exact; the extrema are widened so they bound the extrema of the
/// concatenated sequence.
CorrelationEstimate merge(const CorrelationEstimate& e1, const CorrelationEstimate& e2);

class Probability {
 public:
  explicit Probability(double p);
  double value() const noexcept { return p_; }

 private:
  double p_;
};

/// p = (1 + c) / 2, the probability that the two values agree.
Probability corr_to_prob(double c);
double prob_to_corr(Probability p);

}  // namespace bellab
