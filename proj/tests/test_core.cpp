#include <cmath>
#include <limits>
#include <random>

#include "bellab/core.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bellab;

TEST_CASE("angles normalize to (-pi, pi]") {
  CHECK(Angle(3.0 * kPi).radians() == doctest::Approx(kPi));
  CHECK(Angle(-kPi).radians() == doctest::Approx(kPi));
  CHECK(Angle(kPi).radians() == doctest::Approx(kPi));
  CHECK(Angle(-3.0 * kPi / 4.0).radians() == doctest::Approx(-3.0 * kPi / 4.0));
  CHECK(Angle(5.0 * kPi / 2.0).radians() == doctest::Approx(kPi / 2.0));
  CHECK_THROWS_AS(Angle(std::nan("")), DomainError);
  CHECK_THROWS_AS(Angle{std::numeric_limits<double>::infinity()}, DomainError);
}

TEST_CASE("normalization stays in range for random inputs") {
  std::mt19937_64 g(11);
  for (int i = 0; i < 10000; ++i) {
    const double x = test::uniform(g, -1e4, 1e4);
    const double r = Angle(x).radians();
    CHECK(r > -kPi);
    CHECK(r <= kPi);
    // same point on the circle
    CHECK(std::cos(r) == doctest::Approx(std::cos(x)).epsilon(1e-9));
    CHECK(std::sin(r) == doctest::Approx(std::sin(x)).epsilon(1e-9));
  }
}

TEST_CASE("angle_between is the difference of second minus first") {
  const OrientedAxis e{Angle(3.0 * kPi / 4.0), Side::Alice};
  const OrientedAxis p{Angle(0.0), Side::Bob};
  CHECK(angle_between(e, p).radians() == doctest::Approx(-3.0 * kPi / 4.0));
}

TEST_CASE("outcomes are +-1 only") {
  CHECK(Outcome(1).value() == 1);
  CHECK((-Outcome(1)).value() == -1);
  CHECK_THROWS_AS(Outcome(0), DomainError);
  CHECK_THROWS_AS(Outcome(2), DomainError);
  CHECK_THROWS_AS(OutcomeSequence({Angle(0.0), Side::Alice}, {1, 0, -1}, Provenance::Measured), DomainError);
}

TEST_CASE("axis symbols") {
  CHECK(side_of(AxisSymbol::E) == Side::Alice);
  CHECK(side_of(AxisSymbol::EPrime) == Side::Alice);
  CHECK(side_of(AxisSymbol::P) == Side::Bob);
  CHECK(side_of(AxisSymbol::PPrime) == Side::Bob);
  for (auto s : kAllAxisSymbols) CHECK(parse_axis_symbol(to_string(s)) == s);
  CHECK(parse_axis_symbol("Ep") == AxisSymbol::EPrime);
  CHECK_FALSE(parse_axis_symbol("Q").has_value());
  AxisConfig cfg;
  CHECK_THROWS_AS(cfg.at(AxisSymbol::E), DomainError);
}

TEST_CASE("correlate examples") {
  const auto a = test::sequence(AxisSymbol::E, 0.0, {1, 1, -1, -1});
  const auto b = test::sequence(AxisSymbol::P, 0.0, {1, -1, -1, 1});
  CHECK(correlate(a, a).mean() == 1.0);
  CHECK(correlate(a, a.negated()).mean() == -1.0);
  CHECK(correlate(a, b).mean() == 0.0);
  CHECK(correlate(a, b).sum_products == 0);
  const auto c = test::sequence(AxisSymbol::P, 0.0, {1, 1});
  CHECK_THROWS_AS(correlate(a, c), DomainError);
  CHECK_THROWS_AS(correlate(std::span<const std::int8_t>{}, std::span<const std::int8_t>{}), DomainError);
}

TEST_CASE("running extrema bracket the partial means after burn-in") {
  std::mt19937_64 g(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + g() % 2000;
    const auto u = test::random_pm1(g, n), v = test::random_pm1(g, n);
    const auto est = correlate(std::span<const std::int8_t>(u), std::span<const std::int8_t>(v));
    const std::size_t burn = default_burn_in(n);
    CHECK(est.burn_in == burn);
    CHECK(burn == static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))));
    double lo = test::naive_correlation(u, v), hi = lo;
    long long s = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      s += u[k - 1] * v[k - 1];
      if (k > burn) {
        lo = std::min(lo, static_cast<double>(s) / k);
        hi = std::max(hi, static_cast<double>(s) / k);
      }
    }
    CHECK(est.mean() == doctest::Approx(test::naive_correlation(u, v)));
    CHECK(est.running_min_mean == doctest::Approx(lo));
    CHECK(est.running_max_mean == doctest::Approx(hi));
  }
}

TEST_CASE("merge equals correlating the concatenation") {
  std::mt19937_64 g(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n1 = 1 + g() % 500, n2 = 1 + g() % 500;
    auto u1 = test::random_pm1(g, n1), v1 = test::random_pm1(g, n1);
    auto u2 = test::random_pm1(g, n2), v2 = test::random_pm1(g, n2);
    const auto e1 = correlate(std::span<const std::int8_t>(u1), std::span<const std::int8_t>(v1));
    const auto e2 = correlate(std::span<const std::int8_t>(u2), std::span<const std::int8_t>(v2));
    auto u = u1, v = v1;
    u.insert(u.end(), u2.begin(), u2.end());
    v.insert(v.end(), v2.begin(), v2.end());
    const auto whole = correlate(std::span<const std::int8_t>(u), std::span<const std::int8_t>(v));
    const auto m = merge(e1, e2);
    CHECK(m.n == whole.n);
    CHECK(m.sum_products == whole.sum_products);
    CHECK(m.mean() == whole.mean());
    // Widened extrema contain the exact ones.
    CHECK(m.running_min_mean <= whole.running_min_mean + 1e-15);
    CHECK(m.running_max_mean >= whole.running_max_mean - 1e-15);
  }
}

TEST_CASE("merge with an empty estimate is the identity") {
  const auto a = test::sequence(AxisSymbol::E, 0.0, {1, -1, 1});
  const auto e = correlate(a, a);
  const auto m = merge(e, CorrelationEstimate{});
  CHECK(m.n == e.n);
  CHECK(m.sum_products == e.sum_products);
  const auto m2 = merge(CorrelationEstimate{}, e);
  CHECK(m2.sum_products == e.sum_products);
}

TEST_CASE("probability and correlation round trip") {
  CHECK(corr_to_prob(0.0).value() == 0.5);
  CHECK(corr_to_prob(1.0).value() == 1.0);
  CHECK(corr_to_prob(-1.0).value() == 0.0);
  CHECK_THROWS_AS(corr_to_prob(1.5), DomainError);
  CHECK_THROWS_AS(Probability(-0.1), DomainError);
  std::mt19937_64 g(3);
  for (int i = 0; i < 1000; ++i) {
    const double c = test::uniform(g, -1.0, 1.0);
    CHECK(prob_to_corr(corr_to_prob(c)) == doctest::Approx(c).epsilon(1e-15));
  }
}

TEST_CASE("mirror negates and switches side") {
  const auto q = test::sequence(AxisSymbol::P, 0.3, {1, -1, -1});
  const auto m = mirror(q);
  CHECK(m.axis().side == Side::Alice);
  CHECK(m.axis().angle == q.axis().angle);
  for (std::size_t i = 0; i < q.size(); ++i) CHECK(m.values()[i] == -q.values()[i]);
  CHECK(mirror(m) == q);
}
