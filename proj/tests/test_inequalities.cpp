#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "bellab/inequalities.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bellab;
using namespace bellab::inequalities;
using relativity::Hypothesis;
using relativity::HypothesisSet;

namespace {

long long dot(const std::vector<std::int8_t>& a, const std::vector<std::int8_t>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Barycentric coordinates of c in the tetrahedron with vertices
// (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1). The vertex vectors are
// mutually orthogonal up to the all-ones offset, which gives lambda_k
// = (1 + v_k . c) / 4 directly.
std::array<double, 4> barycentric(double a, double b, double c) {
  static constexpr int v[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::array<double, 4> l{};
  for (int k = 0; k < 4; ++k) l[k] = (1.0 + v[k][0] * a + v[k][1] * b + v[k][2] * c) / 4.0;
  return l;
}

// Fine: the CHSH polytope is cut out by the eight |CHSH form| <= 2 and |c| <= 1.
double fine_margin(const std::array<double, 4>& c) {
  double worst = 1.0;
  for (double x : c) worst = std::min(worst, 1.0 - std::abs(x));
  for (int minus = 0; minus < 4; ++minus) {
    double s = 0.0;
    for (int k = 0; k < 4; ++k) s += (k == minus ? -1.0 : 1.0) * c[k];
    worst = std::min(worst, 2.0 - std::abs(s));
  }
  return worst;
}

void check_witness(const FeasibilityResult& r, const std::vector<std::tuple<int, int, double>>& targets) {
  REQUIRE(r.feasible);
  double total = 0.0;
  for (double p : r.witness) {
    CHECK(p >= 0.0);
    total += p;
  }
  CHECK(std::abs(total - 1.0) <= 1e-9);
  for (auto [i, j, t] : targets) CHECK(std::abs(witness_correlation(r.witness, i, j) - t) <= 1e-9);
}

}  // namespace

TEST_CASE("pointwise identities hold for every sign assignment") {
  for (int bits = 0; bits < 16; ++bits) {
    const int w = bits & 1 ? -1 : 1, x = bits & 2 ? -1 : 1, y = bits & 4 ? -1 : 1, z = bits & 8 ? -1 : 1;
    CHECK(std::abs(x * y - x * z) == 1 - y * z);
    CHECK(std::abs(x * y + x * z) + std::abs(w * y - w * z) == 2);
  }
}

TEST_CASE("sica checks match independent integer sums and are never negative") {
  std::mt19937_64 g(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + g() % 256;
    const auto w = test::random_pm1(g, n), x = test::random_pm1(g, n), y = test::random_pm1(g, n),
               z = test::random_pm1(g, n);
    const auto v3 = sica_v3_check(x, y, z);
    CHECK(v3.sum_xy == dot(x, y));
    CHECK(v3.sum_xz == dot(x, z));
    CHECK(v3.sum_yz == dot(y, z));
    CHECK(v3.slack_numerator == static_cast<long long>(n) - dot(y, z) - std::llabs(dot(x, y) - dot(x, z)));
    CHECK(v3.slack_numerator >= 0);
    const auto v4 = sica_v4_check(w, x, y, z);
    CHECK(v4.margin_numerator ==
          2 * static_cast<long long>(n) - std::llabs(dot(x, y) + dot(x, z)) - std::llabs(dot(w, y) - dot(w, z)));
    CHECK(v4.margin_numerator >= 0);
  }
}

TEST_CASE("sica checks take sequences and reject bad shapes") {
  const auto x = test::sequence(AxisSymbol::E, 0.0, {1, 1, -1});
  const auto y = test::sequence(AxisSymbol::P, 0.0, {1, -1, -1});
  const auto z = test::sequence(AxisSymbol::EPrime, 0.0, {-1, -1, -1});
  const auto r = sica_v3_check(x, y, z);
  CHECK(r.n == 3);
  CHECK(r.slack_numerator >= 0);
  const auto short_seq = test::sequence(AxisSymbol::P, 0.0, {1});
  CHECK_THROWS_AS(sica_v3_check(x, short_seq, z), DomainError);
  CHECK_THROWS_AS(sica_v3_check(std::span<const std::int8_t>{}, {}, {}), DomainError);
}

TEST_CASE("eval_v3 and eval_v4 examples") {
  const double r2 = std::sqrt(2.0) / 2.0;
  const auto v3 = eval_v3(r2, 0.0, r2);
  CHECK(v3.violated);
  CHECK(v3.lhs == doctest::Approx(r2));
  CHECK(v3.rhs == doctest::Approx(1.0 - r2));
  CHECK(-v3.slack == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
  CHECK_FALSE(eval_v3(0.5, 0.5, 0.0).violated);
  const auto v4 = eval_v4(-r2, -r2, -r2, r2);
  CHECK(v4.violated);
  CHECK(v4.s == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(eval_v4(1.0, 1.0, 1.0, 1.0).violated);
  CHECK_THROWS_AS(eval_v3(1.1, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(eval_v4(0.0, 0.0, std::nan(""), 0.0), DomainError);
}

TEST_CASE("V3 is V4 with w = y") {
  std::mt19937_64 g(32);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = test::uniform(g, -1, 1), b = test::uniform(g, -1, 1), c = test::uniform(g, -1, 1);
    const auto v3 = eval_v3(a, b, c);
    const auto v4 = eval_v4(1.0, c, a, b);
    CHECK(v4.s - 2.0 == doctest::Approx(-v3.slack).epsilon(1e-12));
    CHECK(v3.violated == v4.violated);
  }
}

TEST_CASE("(sqrt2/2, sqrt2/2, 0) is infeasible, (0.5, 0.5, 0) is feasible") {
  const double r2 = std::sqrt(2.0) / 2.0;
  const auto bad = feasible_triple(r2, r2, 0.0);
  CHECK_FALSE(bad.feasible);
  CHECK(bad.witness.empty());
  CHECK(bad.max_violation == doctest::Approx(std::sqrt(2.0) - 1.0));
  const auto good = feasible_triple(0.5, 0.5, 0.0);
  check_witness(good, {{0, 1, 0.5}, {0, 2, 0.5}, {1, 2, 0.0}});
  CHECK(good.max_violation <= 0.0);
}

TEST_CASE("triple feasibility agrees with the barycentric oracle") {
  std::mt19937_64 g(33);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = test::uniform(g, -1, 1), b = test::uniform(g, -1, 1), c = test::uniform(g, -1, 1);
    const auto l = barycentric(a, b, c);
    const double m = *std::min_element(l.begin(), l.end());
    if (std::abs(m) < 1e-7) continue;
    ++checked;
    const auto r = feasible_triple(a, b, c);
    CHECK(r.feasible == (m > 0.0));
    if (r.feasible) check_witness(r, {{0, 1, a}, {0, 2, b}, {1, 2, c}});
  }
  CHECK(checked > 990);
}

TEST_CASE("CHSH feasibility agrees with Fine's inequalities") {
  std::mt19937_64 g(34);
  int checked = 0, feasible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<double, 4> c{};
    for (auto& x : c) x = test::uniform(g, -1, 1);
    const double m = fine_margin(c);
    if (std::abs(m) < 1e-7) continue;
    ++checked;
    const auto r = feasible_chsh(c[0], c[1], c[2], c[3]);
    CHECK(r.feasible == (m > 0.0));
    if (r.feasible) {
      ++feasible;
      check_witness(r, {{0, 2, c[0]}, {0, 3, c[1]}, {1, 2, c[2]}, {1, 3, c[3]}});
    }
  }
  CHECK(checked > 990);
  CHECK(feasible > 0);
  CHECK(feasible < checked);
  const double r2 = std::sqrt(2.0) / 2.0;
  CHECK_FALSE(feasible_chsh(-r2, -r2, -r2, r2).feasible);
}

TEST_CASE("role assignments cover exactly the local polytope") {
  std::mt19937_64 g(35);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = test::uniform(g, -1, 1), b = test::uniform(g, -1, 1), c = test::uniform(g, -1, 1);
    const auto l = barycentric(a, b, c);
    if (std::abs(*std::min_element(l.begin(), l.end())) < 1e-9) continue;
    const auto reports = v3_role_assignments(a, b, c);
    CHECK(reports.size() == 6);
    const bool any_violated = std::any_of(reports.begin(), reports.end(), [](auto& r) { return r.violated; });
    CHECK(any_violated == !feasible_triple(a, b, c).feasible);
  }
}

TEST_CASE("V4 search under locality finds the Tsirelson value") {
  const CorrelationSource src{HypothesisSet{Hypothesis::WeakRealism, Hypothesis::Locality}};
  const auto r = falsification_search(BellVersion::V4, src);
  REQUIRE(r.found);
  REQUIRE(r.v4.has_value());
  CHECK(std::abs(r.v4->s - 2.0 * std::sqrt(2.0)) < 1e-6);
  CHECK(r.violation == doctest::Approx(2.0 * std::sqrt(2.0) - 2.0));
}

TEST_CASE("V3 search under EACP with orthogonal same-side axes") {
  const CorrelationSource src{HypothesisSet{Hypothesis::WeakRealism, Hypothesis::EACP, Hypothesis::FWP}};
  SearchOptions opt;
  opt.orthogonal_same_side = true;
  const auto r = falsification_search(BellVersion::V3, src, opt);
  REQUIRE(r.found);
  CHECK(std::abs(r.violation - (std::sqrt(2.0) - 1.0)) < 1e-6);
  // Without FWP the orthogonal pair is only bounded, so nothing can be evaluated.
  const CorrelationSource no_fwp{HypothesisSet{Hypothesis::WeakRealism, Hypothesis::EACP}};
  const auto empty = falsification_search(BellVersion::V3, no_fwp, opt);
  CHECK_FALSE(empty.found);
  CHECK(empty.reason.find("<E,E'>") != std::string::npos);
}

TEST_CASE("V4 search is empty without locality") {
  const CorrelationSource src{HypothesisSet{Hypothesis::WeakRealism, Hypothesis::EACP}};
  const auto r = falsification_search(BellVersion::V4, src);
  CHECK_FALSE(r.found);
  CHECK(r.reason.find("<E',P'> undefined") != std::string::npos);
  CHECK_THROWS_AS(falsification_search(BellVersion::V4, src, SearchOptions{0.0}), DomainError);
}
