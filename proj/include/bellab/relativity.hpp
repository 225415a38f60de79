#pragma once

// 1+1 dimensional events in natural units (c = 1), boosts, X-Y observers,
// and the engine deciding which correlations exist under a hypothesis set.

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellab/core.hpp"
#include "bellab/realism.hpp"

namespace bellab::relativity {

struct SpacetimeEvent {
  double x = 0.0;
  double t = 0.0;
};

enum class IntervalType : std::uint8_t { Spacelike, Timelike, Lightlike };
std::string_view to_string(IntervalType k) noexcept;

/// Sign of dx^2 - dt^2.
IntervalType interval_type(const SpacetimeEvent& e1, const SpacetimeEvent& e2);

class Boost {
 public:
  /// Throws DomainError unless |beta| < 1.
  explicit Boost(double beta);

  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return 1.0 / std::sqrt(1.0 - beta_ * beta_); }
  double time_of(const SpacetimeEvent& e) const noexcept { return gamma() * (e.t - beta_ * e.x); }
  double position_of(const SpacetimeEvent& e) const noexcept { return gamma() * (e.x - beta_ * e.t); }

 private:
  double beta_;
};

enum class TimeOrder : std::int8_t { FirstEarlier = -1, Simultaneous = 0, SecondEarlier = 1 };

/// Order of e1 relative to e2 for the boosted observer.
TimeOrder boosted_order(const SpacetimeEvent& e1, const SpacetimeEvent& e2, const Boost& b);

/// E-P: measurements at E precede those at P for every pair; P-E the reverse.
enum class ObserverKind : std::uint8_t { EP, PE };

struct MeasurementPair {
  SpacetimeEvent at_e;
  SpacetimeEvent at_p;
};

/// A boost realizing the requested order for every pair of the schedule:
/// the midpoint of the admissible open interval of beta. Throws DomainError
/// if some pair is not spacelike or the constraints leave no observer.
Boost find_observer(std::span<const MeasurementPair> schedule, ObserverKind desired);
Boost find_observer(const SpacetimeEvent& at_e, const SpacetimeEvent& at_p, ObserverKind desired);

// --- hypotheses and definability -------------------------------------------

enum class Hypothesis : std::uint8_t {
  QM = 1u << 0,
  WeakRealism = 1u << 1,
  Locality = 1u << 2,
  EACP = 1u << 3,
  FWP = 1u << 4,
};

/// Always contains QM.
class HypothesisSet {
 public:
  HypothesisSet() = default;
  HypothesisSet(std::initializer_list<Hypothesis> hs);

  /// Comma separated names: QM, WR (or WeakRealism), Locality, EACP, FWP.
  static HypothesisSet parse(std::string_view text);

  bool contains(Hypothesis h) const noexcept { return bits_ & static_cast<std::uint8_t>(h); }
  HypothesisSet with(Hypothesis h) const noexcept;
  HypothesisSet without(Hypothesis h) const noexcept;
  /// EACP is implied by Locality.
  bool effective_eacp() const noexcept { return contains(Hypothesis::EACP) || contains(Hypothesis::Locality); }
  std::string to_string() const;

  friend bool operator==(HypothesisSet, HypothesisSet) = default;

 private:
  std::uint8_t bits_ = static_cast<std::uint8_t>(Hypothesis::QM);
};

enum class CorrelationSymbol : std::uint8_t { EP, EPPrime, EPrimeP, EPrimePPrime, EEPrime, PPPrime };

inline constexpr std::array<CorrelationSymbol, 6> kAllCorrelationSymbols{
    CorrelationSymbol::EP,          CorrelationSymbol::EPPrime, CorrelationSymbol::EPrimeP,
    CorrelationSymbol::EPrimePPrime, CorrelationSymbol::EEPrime, CorrelationSymbol::PPPrime};

std::string_view to_string(CorrelationSymbol s) noexcept;
std::pair<AxisSymbol, AxisSymbol> operands(CorrelationSymbol s) noexcept;

enum class Status : std::uint8_t { Defined, ZeroByNoCorrelation, Bounded, Undefined };
std::string_view to_string(Status s) noexcept;

/// `value` is set for Defined and ZeroByNoCorrelation. The bounds state
/// liminf <= liminf_at_most and limsup >= limsup_at_least for the partial
/// means: (v, v) when Defined, (0, 0) under the no-correlation lemma, and
/// the vacuous (1, -1) when the value exists but nothing is known about it.
struct CorrelationStatus {
  CorrelationSymbol symbol = CorrelationSymbol::EP;
  Status status = Status::Undefined;
  double value = std::numeric_limits<double>::quiet_NaN();
  double liminf_at_most = std::numeric_limits<double>::quiet_NaN();
  double limsup_at_least = std::numeric_limits<double>::quiet_NaN();
  std::string_view justification;

  /// A number an inequality may be evaluated with.
  bool usable() const noexcept { return status == Status::Defined || status == Status::ZeroByNoCorrelation; }
};

/// Orthogonality test used by the no-correlation gate: |cos(a - b)| <= 1e-12.
bool orthogonal(Angle a, Angle b) noexcept;

/// Status of one correlation. Depends only on h and the two operand angles.
CorrelationStatus correlation_status(HypothesisSet h, CorrelationSymbol s, Angle first, Angle second);

/// Statuses for `symbols` (all six by default). Throws DomainError when an
/// operand angle is missing.
std::vector<CorrelationStatus> definable_correlations(HypothesisSet h, const AxisConfig& angles);
std::vector<CorrelationStatus> definable_correlations(HypothesisSet h, const AxisConfig& angles,
                                                      std::span<const CorrelationSymbol> symbols);

// --- no-correlation check ---------------------------------------------------

enum class NoCorrelationVerdict : std::uint8_t { Consistent, WitnessOfEacpViolation };
std::string_view to_string(NoCorrelationVerdict v) noexcept;

struct NoCorrelationReport {
  CorrelationEstimate estimate;  // <E, E'>
  bool orthogonal = false;       // false means the run is outside the lemma's hypothesis
  double tolerance = 0.0;
  NoCorrelationVerdict verdict = NoCorrelationVerdict::Consistent;
};

/// Generates one block with E, E', P and estimates <E, E'>. Consistent iff
/// |mean| <= tolerance and the tracked partial means straddle zero.
/// tolerance <= 0 selects 4/sqrt(n).
NoCorrelationReport no_correlation_check(const realism::CounterfactualModel& model, Angle theta_e,
                                         Angle theta_e_prime, Angle theta_p, std::size_t n, std::uint64_t seed,
                                         double tolerance = 0.0);

/// Agreement counts of E with E' and with E'' (E' reversed) over the same pairs.
struct MirrorSymmetryReport {
  std::size_t n = 0;
  std::size_t agree_e_prime = 0;
  std::size_t agree_e_double_prime = 0;
};

MirrorSymmetryReport mirror_symmetry_check(const realism::CounterfactualModel& model, Angle theta_e,
                                           Angle theta_e_prime, Angle theta_p, std::size_t n, std::uint64_t seed);

}  // namespace bellab::relativity
