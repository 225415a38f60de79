#include "bellab/core.hpp"

#include <algorithm>
#include <cmath>

namespace bellab {

double Angle::normalize(double radians) {
  if (!std::isfinite(radians)) throw DomainError("angle must be finite");
  double r = std::remainder(radians, kTwoPi);
  if (r <= -kPi) r = kPi;
  return r;
}

std::string_view to_string(Side s) noexcept { return s == Side::Alice ? "Alice" : "Bob"; }

Angle angle_between(const OrientedAxis& a1, const OrientedAxis& a2) { return a2.angle - a1.angle; }

Outcome::Outcome(int value) : value_(static_cast<std::int8_t>(value)) {
  if (value != 1 && value != -1) throw DomainError("outcome must be -1 or +1");
}

std::string_view to_string(AxisSymbol s) noexcept {
  switch (s) {
    case AxisSymbol::E:
      return "E";
    case AxisSymbol::EPrime:
      return "E'";
    case AxisSymbol::P:
      return "P";
    case AxisSymbol::PPrime:
      return "P'";
  }
  return "?";
}

std::optional<AxisSymbol> parse_axis_symbol(std::string_view name) noexcept {
  for (AxisSymbol s : kAllAxisSymbols)
    if (to_string(s) == name) return s;
  if (name == "Ep") return AxisSymbol::EPrime;
  if (name == "Pp") return AxisSymbol::PPrime;
  return std::nullopt;
}

Angle AxisConfig::at(AxisSymbol s) const {
  const auto& a = angles_[index(s)];
  if (!a) throw DomainError("axis " + std::string(to_string(s)) + " is not configured");
  return *a;
}

std::vector<AxisSymbol> AxisConfig::symbols() const {
  std::vector<AxisSymbol> out;
  for (AxisSymbol s : kAllAxisSymbols)
    if (has(s)) out.push_back(s);
  return out;
}

OutcomeSequence::OutcomeSequence(OrientedAxis axis, std::vector<std::int8_t> values, Provenance provenance)
    : axis_(axis), values_(std::move(values)), provenance_(provenance) {
  for (std::int8_t v : values_)
    if (v != 1 && v != -1) throw DomainError("outcome sequence values must be -1 or +1");
}

OutcomeSequence OutcomeSequence::negated() const {
  OutcomeSequence out = *this;
  for (auto& v : out.values_) v = static_cast<std::int8_t>(-v);
  return out;
}

OutcomeSequence mirror(const OutcomeSequence& q) {
  OutcomeSequence out = q.negated();
  return OutcomeSequence({q.axis().angle, opposite(q.axis().side)},
                         std::vector<std::int8_t>(out.values().begin(), out.values().end()), q.provenance());
}

std::size_t default_burn_in(std::size_t n) noexcept {
  auto b = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  // guard against sqrt rounding on perfect squares
  while (b > 0 && (b - 1) * (b - 1) >= n) --b;
  while (b * b < n) ++b;
  return b;
}

CorrelationEstimate correlate(std::span<const std::int8_t> u, std::span<const std::int8_t> v) {
  if (u.size() != v.size()) throw DomainError("correlate: sequences differ in length");
  if (u.empty()) throw DomainError("correlate: empty sequences");

  const std::size_t n = u.size();
  const std::size_t burn = default_burn_in(n);
  CorrelationEstimate e;
  e.n = n;
  e.burn_in = burn;

  // The prefix scan is inherently sequential; it stays scalar.
  std::int64_t s = 0;
  double lo = 1.0, hi = -1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    s += u[k - 1] * v[k - 1];
    if (k > burn) {
      const double m = static_cast<double>(s) / static_cast<double>(k);
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
  }
  e.sum_products = s;
  const double final_mean = e.mean();
  e.running_min_mean = std::min(lo, final_mean);
  e.running_max_mean = std::max(hi, final_mean);
  return e;
}

CorrelationEstimate correlate(const OutcomeSequence& u, const OutcomeSequence& v) {
  return correlate(u.values(), v.values());
}

CorrelationEstimate merge(const CorrelationEstimate& e1, const CorrelationEstimate& e2) {
  if (e2.empty()) return e1;
  if (e1.empty()) return e2;

  CorrelationEstimate out;
  out.n = e1.n + e2.n;
  out.sum_products = e1.sum_products + e2.sum_products;
  out.burn_in = default_burn_in(out.n);

  const double n1 = static_cast<double>(e1.n);
  const double s1 = static_cast<double>(e1.sum_products);
  const double m1 = e1.mean();

  // Past e2's burn-in, a concatenated partial mean is a convex combination
  // of m1 and one of e2's tracked partial means.
  double lo = std::min({e1.running_min_mean, m1, e2.running_min_mean});
  double hi = std::max({e1.running_max_mean, m1, e2.running_max_mean});

  // Inside e2's burn-in only |partial sum| <= j is known. The bounds
  // (s1 - j)/(n1 + j) and (s1 + j)/(n1 + j) are monotone in j, so their
  // extremes sit at j = burn_in of e2.
  if (e1.n + e2.burn_in > out.burn_in) {
    const double j = static_cast<double>(e2.burn_in);
    lo = std::min(lo, (s1 - j) / (n1 + j));
    hi = std::max(hi, (s1 + j) / (n1 + j));
  }
  out.running_min_mean = lo;
  out.running_max_mean = hi;
  return out;
}

Probability::Probability(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability must lie in [0, 1]");
}

Probability corr_to_prob(double c) {
  if (!(c >= -1.0 && c <= 1.0)) throw DomainError("correlation must lie in [-1, 1]");
  return Probability((1.0 + c) / 2.0);
}

double prob_to_corr(Probability p) { return 2.0 * p.value() - 1.0; }

}  // namespace bellab
