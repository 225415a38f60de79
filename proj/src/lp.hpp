#pragma once

// Small dense phase-one simplex: find x >= 0 with A x = b.

#include <vector>

namespace bellab::inequalities::detail {

struct PhaseOneResult {
  bool feasible = false;
  std::vector<double> x;
  double infeasibility = 0.0;  // optimal sum of artificial variables
};

/// Bland's rule, so it terminates on degenerate problems. Intended for the
/// handful of rows and at most a few dozen columns of the polytope tests.
PhaseOneResult phase_one(const std::vector<std::vector<double>>& a, const std::vector<double>& b, double tolerance);

}  // namespace bellab::inequalities::detail
