#include <algorithm>
#include <array>
#include <limits>
#include <cmath>

#include "bellab/inequalities.hpp"
#include "lp.hpp"

namespace bellab::inequalities {

namespace {

struct PairTarget {
  int i;
  int j;
  double target;
};

int atom_value(std::size_t atom, int var) { return (atom >> var) & 1u ? -1 : 1; }

FeasibilityResult solve_membership(int vars, const std::vector<PairTarget>& targets, double max_violation) {
  for (const auto& t : targets)
    if (!std::isfinite(t.target)) throw DomainError("correlation targets must be finite");

  const std::size_t atoms = std::size_t{1} << vars;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  a.emplace_back(atoms, 1.0);
  b.push_back(1.0);
  for (const auto& t : targets) {
    std::vector<double> row(atoms);
    for (std::size_t k = 0; k < atoms; ++k) row[k] = atom_value(k, t.i) * atom_value(k, t.j);
    a.push_back(std::move(row));
    b.push_back(t.target);
  }

  FeasibilityResult out;
  out.max_violation = max_violation;
  const auto lp = detail::phase_one(a, b, kFeasibilityTolerance);
  if (!lp.feasible) return out;

  std::vector<double> p = lp.x;
  double total = 0.0;
  for (double& v : p) {
    v = std::max(v, 0.0);
    total += v;
  }
  if (total <= 0.0) return out;
  for (double& v : p) v /= total;

  for (const auto& t : targets)
    if (std::abs(witness_correlation(p, t.i, t.j) - t.target) > kFeasibilityTolerance) return out;

  out.feasible = true;
  out.witness = std::move(p);
  return out;
}

}  // namespace

double witness_correlation(const std::vector<double>& witness, int i, int j) {
  double c = 0.0;
  for (std::size_t k = 0; k < witness.size(); ++k) c += witness[k] * atom_value(k, i) * atom_value(k, j);
  return c;
}

FeasibilityResult feasible_triple(double c_xy, double c_xz, double c_yz) {
  double worst = -std::numeric_limits<double>::infinity();
  if (std::isfinite(c_xy) && std::isfinite(c_xz) && std::isfinite(c_yz)) {
    // facets 1 + s1 c_xy + s2 c_xz + s3 c_yz >= 0 with s1 s2 s3 = +1
    for (const auto& s : {std::array{1, 1, 1}, std::array{1, -1, -1}, std::array{-1, 1, -1}, std::array{-1, -1, 1}})
      worst = std::max(worst, -(1.0 + s[0] * c_xy + s[1] * c_xz + s[2] * c_yz));
  }
  return solve_membership(3, {{0, 1, c_xy}, {0, 2, c_xz}, {1, 2, c_yz}}, worst);
}

FeasibilityResult feasible_chsh(double c1, double c2, double c3, double c4) {
  // Variables: 0 = E, 1 = E', 2 = P, 3 = P'.
  const double c[4] = {c1, c2, c3, c4};
  double worst = -std::numeric_limits<double>::infinity();
  for (int minus = 0; minus < 4; ++minus) {
    double s = 0.0;
    for (int k = 0; k < 4; ++k) s += (k == minus ? -1.0 : 1.0) * c[k];
    worst = std::max({worst, s - 2.0, -s - 2.0});
  }
  for (double v : c) worst = std::max(worst, std::abs(v) - 1.0);
  return solve_membership(4, {{0, 2, c1}, {0, 3, c2}, {1, 2, c3}, {1, 3, c4}}, worst);
}

}  // namespace bellab::inequalities
