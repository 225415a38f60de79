#include <algorithm>
#include <cmath>

#include "bellab/relativity.hpp"

namespace bellab::relativity {

std::string_view to_string(IntervalType k) noexcept {
  switch (k) {
    case IntervalType::Spacelike:
      return "spacelike";
    case IntervalType::Timelike:
      return "timelike";
    case IntervalType::Lightlike:
      return "lightlike";
  }
  return "?";
}

IntervalType interval_type(const SpacetimeEvent& e1, const SpacetimeEvent& e2) {
  const double dx = e2.x - e1.x;
  const double dt = e2.t - e1.t;
  const double s = dx * dx - dt * dt;
  if (s > 0.0) return IntervalType::Spacelike;
  if (s < 0.0) return IntervalType::Timelike;
  return IntervalType::Lightlike;
}

Boost::Boost(double beta) : beta_(beta) {
  if (!(std::abs(beta) < 1.0)) throw DomainError("boost velocity must satisfy |beta| < 1");
}

TimeOrder boosted_order(const SpacetimeEvent& e1, const SpacetimeEvent& e2, const Boost& b) {
  const double d = b.time_of(e2) - b.time_of(e1);
  if (d > 0.0) return TimeOrder::FirstEarlier;
  if (d < 0.0) return TimeOrder::SecondEarlier;
  return TimeOrder::Simultaneous;
}

Boost find_observer(std::span<const MeasurementPair> schedule, ObserverKind desired) {
  if (schedule.empty()) throw DomainError("find_observer: empty schedule");
  double lo = -1.0, hi = 1.0;
  for (const auto& pair : schedule) {
    if (interval_type(pair.at_e, pair.at_p) != IntervalType::Spacelike)
      throw DomainError("find_observer: events are not spacelike separated; their order is frame invariant");
    // E before P  <=>  beta * dx < dt
    const double dx = pair.at_p.x - pair.at_e.x;
    const double dt = pair.at_p.t - pair.at_e.t;
    const double r = dt / dx;
    const bool below = (dx > 0.0) == (desired == ObserverKind::EP);
    if (below)
      hi = std::min(hi, r);
    else
      lo = std::max(lo, r);
  }
  if (!(lo < hi)) throw DomainError("find_observer: no single observer orders every pair as requested");
  return Boost(0.5 * (lo + hi));
}

Boost find_observer(const SpacetimeEvent& at_e, const SpacetimeEvent& at_p, ObserverKind desired) {
  const MeasurementPair one{at_e, at_p};
  return find_observer(std::span<const MeasurementPair>(&one, 1), desired);
}

}  // namespace bellab::relativity
