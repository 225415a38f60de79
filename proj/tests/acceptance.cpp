// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bellab/inequalities.hpp"
#include "bellab/relativity.hpp"
#include "bellab/scenario.hpp"

using namespace bellab;
namespace sc = bellab::scenario;
using relativity::CorrelationSymbol;
using relativity::Hypothesis;
using relativity::HypothesisSet;
using relativity::Status;

namespace {

const double kSqrt2 = std::sqrt(2.0);

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

const sc::ResultRow* find_row(const sc::ScenarioResult& r, std::string_view symbol) {
  for (const auto& x : r.rows)
    if (x.symbol == symbol) return &x;
  return nullptr;
}

double value_of(const sc::ScenarioResult& r, std::string_view symbol) {
  const auto* x = find_row(r, symbol);
  return x ? x->value : std::nan("");
}

sc::ScenarioConfig scenario(std::string name, std::uint64_t seed = 1) {
  sc::ScenarioConfig c;
  c.scenario = std::move(name);
  c.seed = seed;
  return c;
}

std::vector<std::int8_t> random_pm1(std::mt19937_64& g, std::size_t n) {
  std::vector<std::int8_t> v(n);
  for (auto& x : v) x = (g() >> 63) ? 1 : -1;
  return v;
}

long long dot(const std::vector<std::int8_t>& a, const std::vector<std::int8_t>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// 1. V3 under {WR, EACP, FWP}: exact triple, violation, Monte Carlo cross-check, runtime.
Check criterion_1() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const auto r = sc::run(scenario("v3-eacp"));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double r2 = kSqrt2 / 2.0;
  c.require(r.hypotheses == HypothesisSet({Hypothesis::WeakRealism, Hypothesis::EACP, Hypothesis::FWP}),
            "default hypotheses");
  c.require(std::abs(value_of(r, "<E,P>") - r2) <= 1e-12, "<E,P> = sqrt2/2");
  c.require(std::abs(value_of(r, "<E',P>") - r2) <= 1e-12, "<E',P> = sqrt2/2");
  c.require(value_of(r, "<E,E'>") == 0.0, "<E,E'> = 0");
  c.require(find_row(r, "V3") && find_row(r, "V3")->status == "violated", "V3 violated");
  c.require(std::abs(value_of(r, "V3") - (kSqrt2 - 1.0)) <= 1e-12, "excess sqrt2 - 1");
  c.require(r.verdict.find("√2 ≤ 1 FALSE — inequality falsified") != std::string::npos, "verdict text");
  c.require(r.n_pairs == 1'000'000 && r.model == "collapse-sequential", "N = 10^6 collapse-sequential");
  c.require(std::abs(value_of(r, "mc:<E,P>") - r2) <= 0.01, "MC <P,E>");
  c.require(std::abs(value_of(r, "mc:<E',P>") - r2) <= 0.01, "MC <P,E'>");
  c.require(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  return c;
}

// 2. CHSH under {WR, Locality}.
Check criterion_2() {
  Check c;
  const auto r = sc::run(scenario("v4-chsh"));
  c.require(std::abs(value_of(r, "V4") - 2.0 * kSqrt2) <= 1e-12, "analytic S");
  c.require(r.n_pairs == 1'000'000, "N = 10^6");
  c.require(std::abs(value_of(r, "mc:V4") - 2.0 * kSqrt2) <= 0.01, "Monte Carlo S");
  return c;
}

// 3. Finite-N identities on 10^4 random triples and quadruples.
Check criterion_3() {
  Check c;
  std::mt19937_64 g(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + g() % 256;
    const auto w = random_pm1(g, n), x = random_pm1(g, n), y = random_pm1(g, n), z = random_pm1(g, n);
    const auto v3 = inequalities::sica_v3_check(x, y, z);
    const auto v4 = inequalities::sica_v4_check(w, x, y, z);
    const long long want3 = static_cast<long long>(n) - dot(y, z) - std::llabs(dot(x, y) - dot(x, z));
    const long long want4 =
        2 * static_cast<long long>(n) - std::llabs(dot(x, y) + dot(x, z)) - std::llabs(dot(w, y) - dot(w, z));
    c.require(v3.slack_numerator == want3 && v3.slack_numerator >= 0, "V3 identity, trial " + std::to_string(trial));
    c.require(v4.margin_numerator == want4 && v4.margin_numerator >= 0, "V4 identity, trial " + std::to_string(trial));
  }
  return c;
}

// 4. LHV sweep over a pi/90 grid for 10 seeds, two-point function at N = 10^6.
Check criterion_4() {
  Check c;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto cfg = scenario("lhv-sweep", seed);
    cfg.grid_step = kPi / 90.0;
    const auto r = sc::run(cfg);
    const std::string s = " (seed " + std::to_string(seed) + ")";
    c.require(value_of(r, "configurations") == 180.0 * 180.0, "grid size" + s);
    c.require(value_of(r, "sica:V3") == 0.0, "V3 violations" + s);
    c.require(value_of(r, "sica:V4") == 0.0, "V4 violations" + s);
    const double tol = 4.0 / std::sqrt(1e6);
    for (const auto& row : r.rows) {
      if (row.symbol.rfind("mc:", 0) != 0) continue;
      c.require(row.n == 1'000'000, "two-point N" + s);
      c.require(std::abs(row.value - row.lo) <= tol, row.symbol + s);
    }
  }
  return c;
}

// 5. No-correlation lemma for lhv-sign; collapse-sequential flagged.
Check criterion_5() {
  Check c;
  auto cfg = scenario("no-correlation");
  const auto lhv = sc::run(cfg);
  const auto* e = find_row(lhv, "mc:<E,E'>");
  c.require(e && std::abs(e->value) <= 0.01, "lhv |<E,E'>| <= 0.01");
  c.require(e && e->n == 1'000'000, "lhv N");
  c.require(e && e->lo <= 0.0 && e->hi >= 0.0, "partial-sum extrema straddle 0");
  c.require(lhv.verdict.rfind("CONSISTENT", 0) == 0, "lhv verdict");
  c.require(find_row(lhv, "orthogonal") && find_row(lhv, "orthogonal")->status == "true", "orthogonal axes");

  cfg.model = "collapse-sequential";
  const auto col = sc::run(cfg);
  c.require(std::abs(value_of(col, "mc:<E,E'>") - 0.5) <= 0.01, "collapse <E,E'> = 0.5");
  c.require(col.verdict.rfind("WITNESS-OF-EACP-VIOLATION", 0) == 0, "collapse flagged");
  return c;
}

// Brute-force hull membership: c is in the convex hull of the four vertices
// iff it lies on the inner side of the plane through every vertex triple.
bool in_hull_brute_force(const std::array<double, 3>& c) {
  static constexpr double v[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (int skip = 0; skip < 4; ++skip) {
    int idx[3], k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) idx[k++] = i;
    double a[3], b[3];
    for (int d = 0; d < 3; ++d) {
      a[d] = v[idx[1]][d] - v[idx[0]][d];
      b[d] = v[idx[2]][d] - v[idx[0]][d];
    }
    const double nrm[3] = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    auto side = [&](const double* p) {
      double s = 0.0;
      for (int d = 0; d < 3; ++d) s += nrm[d] * (p[d] - v[idx[0]][d]);
      return s;
    };
    if (side(c.data()) * side(v[skip]) < 0.0) return false;
  }
  return true;
}

// 6. Feasibility solver.
Check criterion_6() {
  Check c;
  const double r2 = kSqrt2 / 2.0;
  c.require(!inequalities::feasible_triple(r2, r2, 0.0).feasible, "(sqrt2/2, sqrt2/2, 0) infeasible");
  const auto good = inequalities::feasible_triple(0.5, 0.5, 0.0);
  c.require(good.feasible, "(0.5, 0.5, 0) feasible");
  if (good.feasible) {
    double total = 0.0;
    for (double p : good.witness) {
      c.require(p >= 0.0, "atom >= 0");
      total += p;
    }
    c.require(std::abs(total - 1.0) <= 1e-9, "atoms sum to 1");
    c.require(std::abs(inequalities::witness_correlation(good.witness, 0, 1) - 0.5) <= 1e-9, "witness <x,y>");
    c.require(std::abs(inequalities::witness_correlation(good.witness, 0, 2) - 0.5) <= 1e-9, "witness <x,z>");
    c.require(std::abs(inequalities::witness_correlation(good.witness, 1, 2)) <= 1e-9, "witness <y,z>");
  }
  std::mt19937_64 g(6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::array<double, 3> t{u(g), u(g), u(g)};
    // skip targets within rounding distance of a facet
    double margin = 1.0;
    for (auto s : {std::array{1, 1, 1}, std::array{1, -1, -1}, std::array{-1, 1, -1}, std::array{-1, -1, 1}})
      margin = std::min(margin, std::abs(1.0 + s[0] * t[0] + s[1] * t[1] + s[2] * t[2]));
    if (margin < 1e-7) continue;
    ++compared;
    const auto res = inequalities::feasible_triple(t[0], t[1], t[2]);
    c.require(res.feasible == in_hull_brute_force(t), "oracle disagreement on trial " + std::to_string(trial));
  }
  c.require(compared >= 990, "enough comparable targets");
  return c;
}

// 7. Definability regimes on a 10x10 grid, and the empty V4 search under EACP only.
Check criterion_7() {
  Check c;
  std::vector<double> grid;
  for (int k = 0; k < 10; ++k) grid.push_back(-kPi + k * kTwoPi / 10.0);
  const HypothesisSet no_wr{};
  const HypothesisSet locality{Hypothesis::WeakRealism, Hypothesis::Locality};
  const HypothesisSet eacp{Hypothesis::WeakRealism, Hypothesis::EACP};
  for (double a : grid) {
    for (double b : grid) {
      for (auto s : relativity::kAllCorrelationSymbols) {
        const bool cross = s != CorrelationSymbol::EEPrime && s != CorrelationSymbol::PPPrime;
        const auto st = [&](HypothesisSet h) { return relativity::correlation_status(h, s, Angle(a), Angle(b)).status; };
        const bool measured = s == CorrelationSymbol::EP;
        c.require((st(no_wr) == Status::Defined) == measured, "no-WR defined set");
        c.require(measured || st(no_wr) == Status::Undefined, "no-WR undefined set");
        c.require(st(locality) == Status::Defined, "locality: everything defined");
        const bool eacp_defined = cross && s != CorrelationSymbol::EPrimePPrime;
        c.require((st(eacp) == Status::Defined) == eacp_defined, "EACP defined set");
        c.require((st(eacp) == Status::Undefined) == (s == CorrelationSymbol::EPrimePPrime), "EACP undefined set");
        if (s == CorrelationSymbol::EPrimePPrime)
          for (auto h : {no_wr, eacp, eacp.with(Hypothesis::FWP), HypothesisSet{Hypothesis::WeakRealism}})
            c.require(st(h) == Status::Undefined, "<E',P'> undefined without Locality");
      }
    }
  }
  const auto search = inequalities::falsification_search(inequalities::BellVersion::V4,
                                                         inequalities::CorrelationSource{eacp});
  c.require(!search.found, "V4 search empty under EACP only");
  c.require(search.reason.find("<E',P'> undefined") != std::string::npos, "reason names <E',P'>");
  return c;
}

// 8. Observers for both orders; timelike input errors.
Check criterion_8() {
  Check c;
  const auto r = sc::run(scenario("observer-order"));
  c.require(find_row(r, "E-P") && find_row(r, "E-P")->status == "verified", "E-P observer");
  c.require(find_row(r, "P-E") && find_row(r, "P-E")->status == "verified", "P-E observer");
  const relativity::SpacetimeEvent e{-1.0, 0.0}, p{1.0, 0.0};
  const auto ep = relativity::find_observer(e, p, relativity::ObserverKind::EP);
  const auto pe = relativity::find_observer(e, p, relativity::ObserverKind::PE);
  c.require(relativity::boosted_order(e, p, ep) == relativity::TimeOrder::FirstEarlier, "E-P order");
  c.require(relativity::boosted_order(e, p, pe) == relativity::TimeOrder::SecondEarlier, "P-E order");
  bool threw = false;
  try {
    relativity::find_observer({0.0, 0.0}, {0.5, 1.0}, relativity::ObserverKind::EP);
  } catch (const DomainError&) {
    threw = true;
  }
  c.require(threw, "timelike input raises");
  auto cfg = scenario("observer-order");
  cfg.event_e = {0.0, 0.0};
  cfg.event_p = {0.0, 2.0};
  threw = false;
  try {
    sc::run(cfg);
  } catch (const DomainError&) {
    threw = true;
  }
  c.require(threw, "timelike scenario raises");
  return c;
}

}  // namespace

int main() {
  const std::array<std::pair<const char*, std::function<Check()>>, 8> criteria{{
      {"V3 falsification under {WR, EACP, FWP}", criterion_1},
      {"V4/CHSH falsification, S = 2*sqrt(2)", criterion_2},
      {"finite-N identity guarantee", criterion_3},
      {"LHV sign model never violates", criterion_4},
      {"no-correlation lemma", criterion_5},
      {"local polytope feasibility", criterion_6},
      {"definability engine regimes", criterion_7},
      {"observer construction", criterion_8},
  }};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.ok = false;
      result.why = std::string("exception: ") + e.what();
    }
    failures += !result.ok;
    std::printf("%s criterion %zu: %s%s%s\n", result.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                result.ok ? "" : " -- ", result.why.c_str());
  }
  return failures == 0 ? 0 : 1;
}
