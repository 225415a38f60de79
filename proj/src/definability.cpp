#include <cmath>
#include <sstream>

#include "bellab/relativity.hpp"

namespace bellab::relativity {

namespace {

constexpr std::uint8_t bit(Hypothesis h) { return static_cast<std::uint8_t>(h); }

struct NamedHypothesis {
  Hypothesis h;
  std::string_view name;
};
constexpr NamedHypothesis kNames[] = {{Hypothesis::QM, "QM"},
                                      {Hypothesis::WeakRealism, "WR"},
                                      {Hypothesis::Locality, "Locality"},
                                      {Hypothesis::EACP, "EACP"},
                                      {Hypothesis::FWP, "FWP"}};

// Justification tags.
constexpr std::string_view kTwistedMalus = "twisted-malus";
constexpr std::string_view kTwistedMalusEacp = "twisted-malus-under-eacp";
constexpr std::string_view kLocalityMirror = "locality-anti-correlation";
constexpr std::string_view kNoCorrelation = "no-correlation-lemma";
constexpr std::string_view kMeasuredOnly = "no-realism-measured-only";
constexpr std::string_view kNoLocality = "undefined-without-locality";
constexpr std::string_view kExistsOnly = "weak-realism-existence-only";

bool same_side(CorrelationSymbol s) {
  return s == CorrelationSymbol::EEPrime || s == CorrelationSymbol::PPPrime;
}

CorrelationStatus defined(CorrelationSymbol s, double v, std::string_view why) {
  return {s, Status::Defined, v, v, v, why};
}

CorrelationStatus undefined(CorrelationSymbol s, std::string_view why) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return {s, Status::Undefined, nan, nan, nan, why};
}

CorrelationStatus bounded(CorrelationSymbol s, std::string_view why) {
  return {s, Status::Bounded, std::numeric_limits<double>::quiet_NaN(), 1.0, -1.0, why};
}

}  // namespace

HypothesisSet::HypothesisSet(std::initializer_list<Hypothesis> hs) {
  for (Hypothesis h : hs) bits_ |= bit(h);
}

HypothesisSet HypothesisSet::parse(std::string_view text) {
  HypothesisSet out;
  std::string item;
  std::istringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t{}");
    const auto e = item.find_last_not_of(" \t{}");
    if (b == std::string::npos) continue;
    const std::string name = item.substr(b, e - b + 1);
    bool found = false;
    for (const auto& n : kNames) {
      if (name == n.name || (n.h == Hypothesis::WeakRealism && name == "WeakRealism")) {
        out.bits_ |= bit(n.h);
        found = true;
      }
    }
    if (!found) throw ConfigError("unknown hypothesis: " + name);
  }
  return out;
}

HypothesisSet HypothesisSet::with(Hypothesis h) const noexcept {
  HypothesisSet out = *this;
  out.bits_ |= bit(h);
  return out;
}

HypothesisSet HypothesisSet::without(Hypothesis h) const noexcept {
  HypothesisSet out = *this;
  if (h != Hypothesis::QM) out.bits_ &= static_cast<std::uint8_t>(~bit(h));
  return out;
}

std::string HypothesisSet::to_string() const {
  std::string out = "{";
  for (const auto& n : kNames) {
    if (!contains(n.h)) continue;
    if (out.size() > 1) out += ", ";
    out += n.name;
  }
  return out + "}";
}

std::string_view to_string(CorrelationSymbol s) noexcept {
  switch (s) {
    case CorrelationSymbol::EP:
      return "<E,P>";
    case CorrelationSymbol::EPPrime:
      return "<E,P'>";
    case CorrelationSymbol::EPrimeP:
      return "<E',P>";
    case CorrelationSymbol::EPrimePPrime:
      return "<E',P'>";
    case CorrelationSymbol::EEPrime:
      return "<E,E'>";
    case CorrelationSymbol::PPPrime:
      return "<P,P'>";
  }
  return "?";
}

std::pair<AxisSymbol, AxisSymbol> operands(CorrelationSymbol s) noexcept {
  using A = AxisSymbol;
  switch (s) {
    case CorrelationSymbol::EP:
      return {A::E, A::P};
    case CorrelationSymbol::EPPrime:
      return {A::E, A::PPrime};
    case CorrelationSymbol::EPrimeP:
      return {A::EPrime, A::P};
    case CorrelationSymbol::EPrimePPrime:
      return {A::EPrime, A::PPrime};
    case CorrelationSymbol::EEPrime:
      return {A::E, A::EPrime};
    case CorrelationSymbol::PPPrime:
      return {A::P, A::PPrime};
  }
  return {A::E, A::P};
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Defined:
      return "Defined";
    case Status::ZeroByNoCorrelation:
      return "ZeroByNoCorrelation";
    case Status::Bounded:
      return "Bounded";
    case Status::Undefined:
      return "Undefined";
  }
  return "?";
}

bool orthogonal(Angle a, Angle b) noexcept { return std::abs(std::cos((a - b).radians())) <= 1e-12; }

CorrelationStatus correlation_status(HypothesisSet h, CorrelationSymbol s, Angle first, Angle second) {
  const double c = std::cos((first - second).radians());
  const bool wr = h.contains(Hypothesis::WeakRealism);
  const bool locality = h.contains(Hypothesis::Locality);

  // The measured pair is always covered by quantum mechanics.
  if (s == CorrelationSymbol::EP) return defined(s, -c, kTwistedMalus);
  // Without realism unmeasured values do not exist.
  if (!wr) return undefined(s, kMeasuredOnly);

  if (locality) {
    if (same_side(s)) return defined(s, c, kLocalityMirror);
    if (s == CorrelationSymbol::EPrimePPrime) return defined(s, -c, kLocalityMirror);
    return defined(s, -c, kTwistedMalus);
  }

  if (s == CorrelationSymbol::EPrimePPrime) return undefined(s, kNoLocality);

  if (h.effective_eacp()) {
    if (same_side(s)) {
      if (h.contains(Hypothesis::FWP) && orthogonal(first, second))
        return {s, Status::ZeroByNoCorrelation, 0.0, 0.0, 0.0, kNoCorrelation};
      return bounded(s, kExistsOnly);
    }
    return defined(s, -c, kTwistedMalusEacp);
  }
  return bounded(s, kExistsOnly);
}

std::vector<CorrelationStatus> definable_correlations(HypothesisSet h, const AxisConfig& angles,
                                                      std::span<const CorrelationSymbol> symbols) {
  std::vector<CorrelationStatus> out;
  out.reserve(symbols.size());
  for (CorrelationSymbol s : symbols) {
    const auto [a, b] = operands(s);
    if (!angles.has(a) || !angles.has(b))
      throw DomainError("missing angle for " + std::string(to_string(s)));
    out.push_back(correlation_status(h, s, angles.at(a), angles.at(b)));
  }
  return out;
}

std::vector<CorrelationStatus> definable_correlations(HypothesisSet h, const AxisConfig& angles) {
  return definable_correlations(h, angles, kAllCorrelationSymbols);
}

}  // namespace bellab::relativity
