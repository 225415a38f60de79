#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "bellab/inequalities.hpp"
#include "bellab/quantum.hpp"
#include "bellab/realism.hpp"
#include "bellab/relativity.hpp"
#include "bellab/scenario.hpp"

namespace bellab::scenario {

namespace {

using inequalities::BellVersion;
using relativity::CorrelationStatus;
using relativity::CorrelationSymbol;
using relativity::Hypothesis;
using relativity::HypothesisSet;

constexpr std::size_t kDefaultPairs = 1'000'000;
constexpr double kSqrt2 = 1.4142135623730951;

std::string fmt(double x, const char* spec = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

/// Names the closed forms that show up in verdicts.
std::string pretty(double x) {
  if (std::abs(x - kSqrt2) < 1e-9) return "√2";
  if (std::abs(x - 2.0 * kSqrt2) < 1e-9) return "2√2";
  return fmt(x);
}

unsigned worker_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

AxisConfig resolve_angles(AxisConfig defaults, const AxisConfig& overrides) {
  for (auto s : overrides.symbols()) defaults.set(s, overrides.at(s));
  return defaults;
}

double tolerance_for(const ScenarioConfig& c, std::size_t n) {
  if (c.tolerance) {
    if (!(*c.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
    return *c.tolerance;
  }
  return 4.0 / std::sqrt(static_cast<double>(n));
}

ResultRow status_row(const CorrelationStatus& s) {
  return {std::string(relativity::to_string(s.symbol)), std::string(relativity::to_string(s.status)), s.value,
          s.liminf_at_most, s.limsup_at_least, 0};
}

ResultRow mc_row(std::string_view symbol, const CorrelationEstimate& e) {
  return {"mc:" + std::string(symbol), "MonteCarlo", e.mean(), e.running_min_mean, e.running_max_mean, e.n};
}

ResultRow tolerance_row(double tol, std::size_t n) { return {"tolerance", "MonteCarlo", tol, -tol, tol, n}; }

/// Value an inequality may use, or UndefinedCorrelationError naming the pair.
double require_value(const CorrelationStatus& s, HypothesisSet h) {
  if (!s.usable())
    throw UndefinedCorrelationError(std::string(relativity::to_string(s.symbol)) + " is " +
                                    std::string(relativity::to_string(s.status)) + " under " + h.to_string() +
                                    "; the inequality needs its value");
  return s.value;
}

std::string with_anchor(const std::string& text, const std::string& anchor) { return text + " [" + anchor + "]"; }

std::string v3_sentence(const inequalities::V3Report& rep) {
  // |c_xy - c_xz| <= 1 - c_yz  <=>  |c_xy - c_xz| + c_yz <= 1
  const double total = rep.lhs + rep.c_yz;
  if (rep.violated)
    return "V3 reduces to " + pretty(total) + " ≤ 1 FALSE — inequality falsified (excess " + fmt(rep.lhs - rep.rhs) +
           ")";
  return "V3 reduces to " + pretty(total) + " ≤ 1 TRUE — inequality holds (slack " + fmt(rep.slack) + ")";
}

std::string v4_sentence(const inequalities::V4Report& rep) {
  if (rep.violated)
    return "V4 reduces to " + pretty(rep.s) + " ≤ 2 FALSE — inequality falsified (S = " + fmt(rep.s) + ")";
  return "V4 reduces to " + fmt(rep.s) + " ≤ 2 TRUE — inequality holds";
}

ResultRow v3_row(const std::string& symbol, const inequalities::V3Report& rep) {
  return {symbol, rep.violated ? "violated" : "holds", rep.lhs - rep.rhs, rep.lhs, rep.rhs, 0};
}

ResultRow v4_row(const std::string& symbol, const inequalities::V4Report& rep) {
  return {symbol, rep.violated ? "violated" : "holds", rep.s, rep.s, 2.0, 0};
}

ResultRow search_row(const std::string& symbol, const inequalities::SearchResult& s) {
  if (!s.found) return {symbol, "empty", std::nan(""), std::nan(""), std::nan(""), 0};
  return {symbol, "found", s.violation, 0.0, s.violation, 0};
}

inequalities::CorrelationSource source_for(HypothesisSet h) { return inequalities::CorrelationSource{h}; }

inequalities::SearchOptions search_options(const ScenarioConfig& c, bool orthogonal) {
  inequalities::SearchOptions o;
  if (c.grid_step) o.grid_step = *c.grid_step;
  o.orthogonal_same_side = orthogonal;
  return o;
}

// --- three-angle scenarios -------------------------------------------------

struct V3Analytic {
  inequalities::V3Report report;
  double ep, eep, epp;
};

V3Analytic v3_analytic(ScenarioResult& r, const AxisConfig& angles) {
  static constexpr std::array symbols{CorrelationSymbol::EP, CorrelationSymbol::EPrimeP, CorrelationSymbol::EEPrime};
  const auto st = relativity::definable_correlations(r.hypotheses, angles, symbols);
  for (const auto& s : st) r.rows.push_back(status_row(s));
  V3Analytic a{};
  a.ep = require_value(st[0], r.hypotheses);
  a.epp = require_value(st[1], r.hypotheses);
  a.eep = require_value(st[2], r.hypotheses);
  // x = E, y = P, z = E'
  a.report = inequalities::eval_v3(a.ep, a.eep, a.epp);
  r.rows.push_back(v3_row("V3", a.report));
  return a;
}

const AxisConfig& three_angle_defaults() {
  static const AxisConfig a = AxisConfig{}
                                  .set(AxisSymbol::P, 0.0)
                                  .set(AxisSymbol::E, 3.0 * kPi / 4.0)
                                  .set(AxisSymbol::EPrime, -3.0 * kPi / 4.0);
  return a;
}

void run_v3_local(const ScenarioConfig& c, ScenarioResult& r) {
  r.anchor = "three-angle-falsification-under-locality";
  r.hypotheses = c.hypotheses.value_or(HypothesisSet{Hypothesis::WeakRealism, Hypothesis::Locality});
  r.model = "singlet-sampler";
  const auto angles = resolve_angles(three_angle_defaults(), c.angles);
  const auto analytic = v3_analytic(r, angles);

  const std::size_t n = r.n_pairs;
  const quantum::SingletSource source(c.seed);
  const Angle te = angles.at(AxisSymbol::E), tep = angles.at(AxisSymbol::EPrime), tp = angles.at(AxisSymbol::P);
  const auto b_ep = quantum::sample_pairs(source, 0, n, te, tp);
  // <E,E'> from pairs measured along E and E' on opposite sides; mirroring
  // Bob's E' record gives the same-side sequence.
  const auto b_eep = quantum::sample_pairs(source, n, n, te, tep);
  const auto b_epp = quantum::sample_pairs(source, 2 * n, n, tep, tp);
  const auto m_ep = correlate(b_ep.alice, b_ep.bob);
  const auto m_eep = correlate(b_eep.alice, mirror(b_eep.bob));
  const auto m_epp = correlate(b_epp.alice, b_epp.bob);
  r.rows.push_back(mc_row("<E,P>", m_ep));
  r.rows.push_back(mc_row("<E',P>", m_epp));
  r.rows.push_back(mc_row("<E,E'>", m_eep));
  r.rows.push_back(tolerance_row(tolerance_for(c, n), n));
  auto mc = v3_row("mc:V3", inequalities::eval_v3(m_ep.mean(), m_eep.mean(), m_epp.mean()));
  mc.n = n;
  r.rows.push_back(mc);

  const auto search = inequalities::falsification_search(BellVersion::V3, source_for(r.hypotheses),
                                                         search_options(c, false));
  r.rows.push_back(search_row("search:V3", search));
  r.verdict = with_anchor(v3_sentence(analytic.report) + " under " + r.hypotheses.to_string(), r.anchor);
}

void run_v3_eacp(const ScenarioConfig& c, ScenarioResult& r) {
  r.anchor = "v3-contradiction-under-eacp";
  r.hypotheses =
      c.hypotheses.value_or(HypothesisSet{Hypothesis::WeakRealism, Hypothesis::EACP, Hypothesis::FWP});
  r.model = c.model.empty() ? "collapse-sequential" : c.model;
  const auto angles = resolve_angles(three_angle_defaults(), c.angles);
  const auto analytic = v3_analytic(r, angles);

  const auto model = realism::make_model(r.model);
  const std::size_t n = r.n_pairs;
  Block block;
  block.count = n;
  block.axes = angles;
  realism::GenerateOptions opts;
  opts.threads = worker_threads();
  opts.measured = {AxisSymbol::P, AxisSymbol::E};
  const auto gen = model->generate_block(block, c.seed, opts);
  const auto m_ep = correlate(gen.at(AxisSymbol::E), gen.at(AxisSymbol::P));
  const auto m_epp = correlate(gen.at(AxisSymbol::EPrime), gen.at(AxisSymbol::P));
  const auto m_eep = correlate(gen.at(AxisSymbol::E), gen.at(AxisSymbol::EPrime));
  r.rows.push_back(mc_row("<E,P>", m_ep));
  r.rows.push_back(mc_row("<E',P>", m_epp));
  r.rows.push_back(mc_row("<E,E'>", m_eep));
  r.rows.push_back(tolerance_row(tolerance_for(c, n), n));

  const auto search = inequalities::falsification_search(BellVersion::V3, source_for(r.hypotheses),
                                                         search_options(c, true));
  r.rows.push_back(search_row("search:V3", search));
  r.verdict = with_anchor(v3_sentence(analytic.report) + " under " + r.hypotheses.to_string() + "; " + r.model +
                              " gives <E,E'> = " + fmt(m_eep.mean(), "%.4f"),
                          r.anchor);
}

// --- CHSH --------------------------------------------------------------------

void run_v4_chsh(const ScenarioConfig& c, ScenarioResult& r) {
  r.anchor = "chsh-false-inequality";
  r.hypotheses = c.hypotheses.value_or(HypothesisSet{Hypothesis::WeakRealism, Hypothesis::Locality});
  r.model = "singlet-sampler";
  const auto angles = resolve_angles(AxisConfig{}
                                         .set(AxisSymbol::E, kPi / 4.0)
                                         .set(AxisSymbol::EPrime, 3.0 * kPi / 4.0)
                                         .set(AxisSymbol::P, kPi / 2.0)
                                         .set(AxisSymbol::PPrime, 0.0),
                                     c.angles);

  static constexpr std::array symbols{CorrelationSymbol::EP, CorrelationSymbol::EPPrime, CorrelationSymbol::EPrimeP,
                                      CorrelationSymbol::EPrimePPrime};
  const auto st = relativity::definable_correlations(r.hypotheses, angles, symbols);
  for (const auto& s : st) r.rows.push_back(status_row(s));
  std::array<double, 4> v{};
  for (std::size_t k = 0; k < 4; ++k) v[k] = require_value(st[k], r.hypotheses);
  const auto analytic = inequalities::eval_v4(v[0], v[1], v[2], v[3]);
  r.rows.push_back(v4_row("V4", analytic));

  const std::size_t n = r.n_pairs;
  const quantum::SingletSource source(c.seed);
  std::array<double, 4> mc{};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto [a, b] = relativity::operands(symbols[k]);
    const auto batch = quantum::sample_pairs(source, k * n, n, angles.at(a), angles.at(b));
    const auto est = correlate(batch.alice, batch.bob);
    r.rows.push_back(mc_row(relativity::to_string(symbols[k]), est));
    mc[k] = est.mean();
  }
  r.rows.push_back(tolerance_row(tolerance_for(c, n), n));
  auto mc_v4 = v4_row("mc:V4", inequalities::eval_v4(mc[0], mc[1], mc[2], mc[3]));
  mc_v4.n = n;
  r.rows.push_back(mc_v4);

  const auto search =
      inequalities::falsification_search(BellVersion::V4, source_for(r.hypotheses), search_options(c, false));
  r.rows.push_back(search_row("search:V4", search));
  r.verdict = with_anchor(v4_sentence(analytic) + " under " + r.hypotheses.to_string() + "; Monte Carlo S = " +
                              fmt(mc_v4.value, "%.4f"),
                          r.anchor);
}

// --- no-correlation lemma -----------------------------------------------------

void run_no_correlation(const ScenarioConfig& c, ScenarioResult& r) {
  r.anchor = "no-correlation-lemma";
  r.hypotheses = c.hypotheses.value_or(HypothesisSet{Hypothesis::WeakRealism, Hypothesis::EACP, Hypothesis::FWP});
  r.model = c.model.empty() ? "lhv-sign" : c.model;
  const auto angles = resolve_angles(three_angle_defaults(), c.angles);
  const auto model = realism::make_model(r.model);
  const std::size_t n = r.n_pairs;
  const Angle te = angles.at(AxisSymbol::E), tep = angles.at(AxisSymbol::EPrime), tp = angles.at(AxisSymbol::P);

  const auto rep = relativity::no_correlation_check(*model, te, tep, tp, n, c.seed, tolerance_for(c, n));
  r.rows.push_back(status_row(relativity::correlation_status(r.hypotheses, CorrelationSymbol::EEPrime, te, tep)));
  r.rows.push_back(mc_row("<E,E'>", rep.estimate));
  r.rows.push_back(tolerance_row(rep.tolerance, n));
  r.rows.push_back({"orthogonal", rep.orthogonal ? "true" : "false", std::cos((tep - te).radians()), 0.0, 0.0, 0});
  const auto mirror_rep = relativity::mirror_symmetry_check(*model, te, tep, tp, n, c.seed);
  const double agree = static_cast<double>(mirror_rep.agree_e_prime + mirror_rep.agree_e_double_prime) /
                       static_cast<double>(mirror_rep.n);
  r.rows.push_back({"mirror:P(E=E')+P(E=E'')", "MonteCarlo", agree,
                    static_cast<double>(mirror_rep.agree_e_prime) / static_cast<double>(n),
                    static_cast<double>(mirror_rep.agree_e_double_prime) / static_cast<double>(n), n});

  std::string text = std::string(relativity::to_string(rep.verdict)) + ": " + r.model + " gives <E,E'> = " +
                     fmt(rep.estimate.mean(), "%.4f") + " (tolerance " + fmt(rep.tolerance, "%.4f") +
                     ", partial means " + (rep.estimate.straddles_zero() ? "straddle" : "do not straddle") + " 0)";
  if (!rep.orthogonal) text += "; axes are not orthogonal, so the lemma does not apply";
  r.verdict = with_anchor(text, r.anchor);
}

// --- observer construction ------------------------------------------------------

void run_observer_order(const ScenarioConfig& c, ScenarioResult& r) {
  r.anchor = "x-y-observer";
  r.hypotheses = c.hypotheses.value_or(HypothesisSet{});
  r.model = "none";
  const auto kind = relativity::interval_type(c.event_e, c.event_p);
  const double dx = c.event_p.x - c.event_e.x, dt = c.event_p.t - c.event_e.t;
  r.rows.push_back({"interval", std::string(relativity::to_string(kind)), dx * dx - dt * dt, 0.0, 0.0, 0});

  bool ok = true;
  std::string betas;
  for (auto [kind_o, name, want] :
       {std::tuple{relativity::ObserverKind::EP, "E-P", relativity::TimeOrder::FirstEarlier},
        std::tuple{relativity::ObserverKind::PE, "P-E", relativity::TimeOrder::SecondEarlier}}) {
    const auto boost = relativity::find_observer(c.event_e, c.event_p, kind_o);
    const bool verified = relativity::boosted_order(c.event_e, c.event_p, boost) == want;
    ok &= verified;
    r.rows.push_back(
        {name, verified ? "verified" : "failed", boost.beta(), boost.time_of(c.event_e), boost.time_of(c.event_p), 0});
    if (!betas.empty()) betas += ", ";
    betas += std::string(name) + " observer beta = " + fmt(boost.beta());
  }
  r.verdict = with_anchor(betas + (ok ? ": both orderings realized" : ": ordering check FAILED"), r.anchor);
}

// --- local polytope -----------------------------------------------------------------

std::string atom_label(std::size_t atom, int vars) {
  std::string s;
  for (int v = 0; v < vars; ++v) s += (atom >> v) & 1u ? '-' : '+';
  return s;
}

void run_polytope(const ScenarioConfig& c, ScenarioResult& r) {
  r.anchor = "local-polytope-membership";
  r.hypotheses = c.hypotheses.value_or(HypothesisSet{});
  r.model = "none";
  std::vector<double> t = c.target;
  if (t.empty()) t = {kSqrt2 / 2.0, kSqrt2 / 2.0, 0.0};
  if (t.size() != 3 && t.size() != 4) throw ConfigError("polytope target needs 3 or 4 correlations");

  // Pair labels and variable indices match feasible_triple / feasible_chsh.
  using Pair = std::tuple<const char*, int, int>;
  const std::vector<Pair> pairs =
      t.size() == 3 ? std::vector<Pair>{{"<x,y>", 0, 1}, {"<x,z>", 0, 2}, {"<y,z>", 1, 2}}
                    : std::vector<Pair>{{"<E,P>", 0, 2}, {"<E,P'>", 0, 3}, {"<E',P>", 1, 2}, {"<E',P'>", 1, 3}};
  const int vars = static_cast<int>(t.size() == 3 ? 3 : 4);
  const auto res = t.size() == 3 ? inequalities::feasible_triple(t[0], t[1], t[2])
                                 : inequalities::feasible_chsh(t[0], t[1], t[2], t[3]);

  r.rows.push_back({"polytope", res.feasible ? "feasible" : "infeasible", res.max_violation, 0.0, 0.0, 0});
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [label, i, j] = pairs[k];
    const double reproduced = res.feasible ? inequalities::witness_correlation(res.witness, i, j) : std::nan("");
    r.rows.push_back({std::string("target:") + label, "target", t[k], reproduced, reproduced, 0});
  }
  for (std::size_t a = 0; a < res.witness.size(); ++a)
    r.rows.push_back({"atom:" + atom_label(a, vars), "witness", res.witness[a], 0.0, 1.0, 0});

  std::string target_text = "(";
  for (std::size_t k = 0; k < t.size(); ++k) target_text += (k ? ", " : "") + fmt(t[k]);
  target_text += ")";
  const std::string text = res.feasible ? "target " + target_text + " lies in the local polytope (witness with " +
                                              std::to_string(res.witness.size()) + " atoms)"
                                        : "target " + target_text +
                                              " lies outside the local polytope (max facet violation " +
                                              fmt(res.max_violation) + ")";
  r.verdict = with_anchor(text, r.anchor);
}

// --- LHV sweep --------------------------------------------------------------------------

void run_lhv_sweep(const ScenarioConfig& c, ScenarioResult& r) {
  r.anchor = "identity-guarantee";
  r.hypotheses = c.hypotheses.value_or(HypothesisSet{Hypothesis::WeakRealism, Hypothesis::Locality});
  if (!c.model.empty() && c.model != "lhv-sign") throw ConfigError("lhv-sweep runs the lhv-sign model only");
  r.model = "lhv-sign";
  const realism::LhvSignModel model;
  realism::GenerateOptions opts;
  opts.threads = worker_threads();

  const double step = c.grid_step.value_or(kPi / 90.0);
  if (!(step > 0.0 && step <= kPi)) throw ConfigError("grid_step must lie in (0, pi]");
  const auto k_count = static_cast<std::size_t>(std::llround(kTwoPi / step));
  const std::size_t m = c.sweep_pairs;

  // One block per grid angle over the same pairs: hidden variables depend
  // only on (seed, pair), so E at angle j of block j is E' at angle j for
  // every other block. P and P' stay at 0 and pi/2.
  std::vector<realism::AssignmentBlock> blocks;
  blocks.reserve(k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    Block b;
    b.index = k;
    b.count = m;
    b.axes.set(AxisSymbol::E, static_cast<double>(k) * step).set(AxisSymbol::P, 0.0).set(AxisSymbol::PPrime, kPi / 2.0);
    blocks.push_back(model.generate_block(b, c.seed, opts));
  }
  const auto& p = blocks.front().at(AxisSymbol::P);
  const auto& pp = blocks.front().at(AxisSymbol::PPrime);

  std::uint64_t v3_fail = 0, v4_fail = 0, configs = 0;
  double max_s = 0.0, min_slack = 2.0;
  for (std::size_t i = 0; i < k_count; ++i) {
    const auto& e = blocks[i].at(AxisSymbol::E);
    for (std::size_t j = 0; j < k_count; ++j) {
      const auto& ep = blocks[j].at(AxisSymbol::E);
      ++configs;
      const auto v3 = inequalities::sica_v3_check(e.values(), p.values(), ep.values());
      const auto v4 = inequalities::sica_v4_check(ep.values(), e.values(), p.values(), pp.values());
      v3_fail += v3.slack_numerator < 0;
      v4_fail += v4.margin_numerator < 0;
      min_slack = std::min(min_slack, v3.slack());
      max_s = std::max(max_s, 2.0 - v4.margin());
    }
  }
  r.rows.push_back({"configurations", "grid", static_cast<double>(configs), step, static_cast<double>(k_count), m});
  r.rows.push_back({"sica:V3", v3_fail == 0 ? "holds" : "violated", static_cast<double>(v3_fail), min_slack, 0.0, m});
  r.rows.push_back({"sica:V4", v4_fail == 0 ? "holds" : "violated", static_cast<double>(v4_fail), max_s, 2.0, m});

  // Two-point function against +-(1 - 2 delta / pi).
  const std::size_t n = r.n_pairs;
  const double tol = tolerance_for(c, n);
  std::size_t outside = 0;
  const std::array<double, 5> deltas{0.0, kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0, kPi};
  for (std::size_t d = 0; d < deltas.size(); ++d) {
    Block b;
    b.index = k_count + d;
    b.first_pair = m + static_cast<std::uint64_t>(d) * n;
    b.count = n;
    b.axes.set(AxisSymbol::E, 0.0).set(AxisSymbol::EPrime, deltas[d]).set(AxisSymbol::P, deltas[d]);
    opts.measured = {AxisSymbol::E, AxisSymbol::P};
    const auto gen = model.generate_block(b, c.seed, opts);
    const auto same = correlate(gen.at(AxisSymbol::E), gen.at(AxisSymbol::EPrime));
    const auto opp = correlate(gen.at(AxisSymbol::E), gen.at(AxisSymbol::P));
    const double expect = 1.0 - 2.0 * deltas[d] / kPi;
    const std::string tag = "(delta=" + fmt(deltas[d], "%.4f") + ")";
    outside += std::abs(same.mean() - expect) > tol;
    outside += std::abs(opp.mean() + expect) > tol;
    r.rows.push_back({"mc:<E,E'>" + tag, "MonteCarlo", same.mean(), expect, expect, n});
    r.rows.push_back({"mc:<E,P>" + tag, "MonteCarlo", opp.mean(), -expect, -expect, n});
  }
  r.rows.push_back(tolerance_row(tol, n));

  const std::string text = "lhv-sign: " + std::to_string(v3_fail + v4_fail) + " V3/V4 violations across " +
                           std::to_string(configs) + " configurations; two-point function " +
                           (outside == 0 ? "matches" : "DOES NOT match") + " ±(1 - 2Δ/π) within " + fmt(tol, "%.4f");
  r.verdict = with_anchor(text, r.anchor);
}

using Runner = void (*)(const ScenarioConfig&, ScenarioResult&);

struct Entry {
  std::string_view name;
  Runner run;
};

constexpr std::array<Entry, 7> kScenarios{{
    {"v3-local", run_v3_local},
    {"v4-chsh", run_v4_chsh},
    {"v3-eacp", run_v3_eacp},
    {"no-correlation", run_no_correlation},
    {"observer-order", run_observer_order},
    {"polytope", run_polytope},
    {"lhv-sweep", run_lhv_sweep},
}};

}  // namespace

const std::vector<std::string_view>& registered_scenarios() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> v;
    for (const auto& e : kScenarios) v.push_back(e.name);
    return v;
  }();
  return names;
}

ScenarioResult run(const ScenarioConfig& config) {
  const auto it =
      std::find_if(kScenarios.begin(), kScenarios.end(), [&](const Entry& e) { return e.name == config.scenario; });
  if (it == kScenarios.end()) throw ConfigError("unknown scenario: '" + config.scenario + "'");
  if (config.n_pairs && *config.n_pairs == 0) throw ConfigError("pairs must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  ScenarioResult r;
  r.scenario = config.scenario;
  r.inputs = config;
  r.n_pairs = config.n_pairs.value_or(kDefaultPairs);
  it->run(config, r);
  r.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace bellab::scenario
