#pragma once

// Finite-N identities and asymptotic inequalities over ±1 sequences.
//
// Role mapping (fixed):
//   V3: x = E, y = P, z = E'     |<x,y> - <x,z>| <= 1 - <y,z>
//   V4: x = E, y = P, w = E', z = P'
//       |<x,y> + <x,z>| + |<w,y> - <w,z>| <= 2

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bellab/core.hpp"
#include "bellab/relativity.hpp"

namespace bellab::inequalities {

/// Exact V3 identity at finite N, in integer numerators over n.
struct SicaV3 {
  std::int64_t n = 0;
  std::int64_t sum_xy = 0, sum_xz = 0, sum_yz = 0;
  /// (n - sum_yz) - |sum_xy - sum_xz|, never negative for real sequences.
  std::int64_t slack_numerator = 0;
  double slack() const noexcept { return static_cast<double>(slack_numerator) / static_cast<double>(n); }
};

/// Exact V4 identity at finite N.
struct SicaV4 {
  std::int64_t n = 0;
  std::int64_t sum_xy = 0, sum_xz = 0, sum_wy = 0, sum_wz = 0;
  /// 2n - (|sum_xy + sum_xz| + |sum_wy - sum_wz|), never negative.
  std::int64_t margin_numerator = 0;
  double margin() const noexcept { return static_cast<double>(margin_numerator) / static_cast<double>(n); }
};

SicaV3 sica_v3_check(const OutcomeSequence& x, const OutcomeSequence& y, const OutcomeSequence& z);
SicaV3 sica_v3_check(std::span<const std::int8_t> x, std::span<const std::int8_t> y, std::span<const std::int8_t> z);
SicaV4 sica_v4_check(const OutcomeSequence& w, const OutcomeSequence& x, const OutcomeSequence& y,
                     const OutcomeSequence& z);
SicaV4 sica_v4_check(std::span<const std::int8_t> w, std::span<const std::int8_t> x, std::span<const std::int8_t> y,
                     std::span<const std::int8_t> z);

struct V3Report {
  double c_xy = 0, c_xz = 0, c_yz = 0;
  double lhs = 0, rhs = 0, slack = 0;
  bool violated = false;  // slack < 0
};

struct V4Report {
  double c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  double s = 0;
  bool violated = false;  // s > 2
};

/// Throws DomainError for inputs outside [-1, 1].
V3Report eval_v3(double c_xy, double c_xz, double c_yz);
V4Report eval_v4(double c1, double c2, double c3, double c4);

/// V3 evaluated under every role assignment of three sequences with
/// pairwise correlations (c12, c13, c23): each choice of x, with and
/// without negating z. Together these cover all four facets of the local
/// polytope for three ±1 variables.
std::vector<V3Report> v3_role_assignments(double c12, double c13, double c23);

// --- local polytope feasibility ------------------------------------------

struct FeasibilityResult {
  bool feasible = false;
  /// Probabilities of the 2^k deterministic atoms. Atom bit j set means
  /// variable j takes -1. Empty when infeasible.
  std::vector<double> witness;
  /// Largest violation over the Bell-type facets (positive iff outside).
  double max_violation = 0.0;
};

inline constexpr double kFeasibilityTolerance = 1e-9;

/// Is there a distribution over {±1}^3 with these pairwise correlations?
FeasibilityResult feasible_triple(double c_xy, double c_xz, double c_yz);

/// Is there a distribution over (E, E', P, P') in {±1}^4 matching the four
/// cross-side correlations (c1..c4 in V4 order)?
FeasibilityResult feasible_chsh(double c1, double c2, double c3, double c4);

/// Pairwise correlation of variables (i, j) under an atom distribution over {±1}^k.
double witness_correlation(const std::vector<double>& witness, int i, int j);

// --- falsification search -------------------------------------------------

enum class BellVersion : std::uint8_t { V3, V4 };

/// Value source for the search. The status of <X,Y> must depend only on
/// the two operand angles, which lets the search tabulate it per angle pair.
struct CorrelationSource {
  relativity::HypothesisSet hypotheses;
  relativity::CorrelationStatus operator()(relativity::CorrelationSymbol s, Angle a, Angle b) const {
    return relativity::correlation_status(hypotheses, s, a, b);
  }
};

struct SearchOptions {
  double grid_step = kPi / 180.0;
  int refine_factor = 10;
  /// V3 only: restrict to theta_E' = theta_E +- pi/2.
  bool orthogonal_same_side = false;
};

struct SearchResult {
  bool found = false;
  std::string reason;  // set when !found
  AxisConfig angles;
  double violation = 0.0;  // V3: -slack, V4: S - 2
  std::optional<V3Report> v3;
  std::optional<V4Report> v4;
};

/// Grid search over configurations (one angle pinned at 0, since the
/// correlations only depend on differences) followed by a local refinement
/// at grid_step / refine_factor around the best point.
SearchResult falsification_search(BellVersion version, const CorrelationSource& source,
                                   const SearchOptions& options = {});

}  // namespace bellab::inequalities
