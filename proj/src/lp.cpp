#include "lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bellab::inequalities::detail {

PhaseOneResult phase_one(const std::vector<std::vector<double>>& a, const std::vector<double>& b, double tolerance) {
  const std::size_t m = a.size();
  if (m == 0 || b.size() != m) throw std::invalid_argument("phase_one: shape mismatch");
  const std::size_t n = a.front().size();
  const std::size_t cols = n + m;  // originals then artificials
  constexpr double eps = 1e-12;

  // Tableau rows hold B^-1 [A | I] and the rhs.
  std::vector<std::vector<double>> t(m, std::vector<double>(cols + 1, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("phase_one: ragged matrix");
    const double s = b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a[i][j];
    t[i][n + i] = 1.0;
    t[i][cols] = s * b[i];
    basis[i] = n + i;
  }

  auto cost = [n](std::size_t j) { return j >= n ? 1.0 : 0.0; };

  const std::size_t max_iter = 50 * (cols + m);
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    // Bland: first column with negative reduced cost.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      double r = cost(j);
      for (std::size_t i = 0; i < m; ++i) r -= cost(basis[i]) * t[i][j];
      if (r < -eps) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= eps) continue;
      const double ratio = t[i][cols] / t[i][enter];
      if (ratio < best - eps || (std::abs(ratio - best) <= eps && leave < m && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen with a bounded phase-one objective

    const double piv = t[leave][enter];
    for (double& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  PhaseOneResult out;
  out.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n)
      out.x[basis[i]] = t[i][cols];
    else
      out.infeasibility += t[i][cols];
  }
  out.feasible = out.infeasibility <= tolerance;
  return out;
}

}  // namespace bellab::inequalities::detail
