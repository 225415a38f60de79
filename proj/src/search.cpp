#include <cmath>
#include <limits>

#include "bellab/inequalities.hpp"

namespace bellab::inequalities {

namespace {

using relativity::CorrelationSymbol;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double usable_value(const CorrelationSource& source, CorrelationSymbol s, double a, double b) {
  const auto st = source(s, Angle(a), Angle(b));
  return st.usable() ? st.value : kNaN;
}

SearchResult not_found(std::string reason) {
  SearchResult r;
  r.reason = std::move(reason);
  return r;
}

std::string unusable_reason(CorrelationSymbol s, const CorrelationSource& source) {
  return std::string(relativity::to_string(s)) + " undefined under " + source.hypotheses.to_string();
}

SearchResult search_v3(const CorrelationSource& source, const SearchOptions& opt) {
  const auto k_count = static_cast<std::size_t>(std::llround(kTwoPi / opt.grid_step));
  const double step = opt.grid_step;
  constexpr double theta_p = 0.0;

  // c_xy = <E,P>, c_xz = <E,E'>, c_yz = <P,E'>
  auto evaluate = [&](double te, double tep) {
    const double c_xy = usable_value(source, CorrelationSymbol::EP, te, theta_p);
    const double c_xz = usable_value(source, CorrelationSymbol::EEPrime, te, tep);
    const double c_yz = usable_value(source, CorrelationSymbol::EPrimeP, tep, theta_p);
    return std::abs(c_xy - c_xz) - (1.0 - c_yz);  // NaN when anything is unusable
  };

  double best = -std::numeric_limits<double>::infinity();
  double best_e = 0.0, best_ep = 0.0;
  bool seen_ep = false, seen_eep = false, seen_epp = false;

  std::vector<double> ep(k_count), epp(k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    ep[k] = usable_value(source, CorrelationSymbol::EP, k * step, theta_p);
    epp[k] = usable_value(source, CorrelationSymbol::EPrimeP, k * step, theta_p);
    seen_ep |= !std::isnan(ep[k]);
    seen_epp |= !std::isnan(epp[k]);
  }

  if (opt.orthogonal_same_side) {
    for (std::size_t k = 0; k < k_count; ++k) {
      for (double off : {kPi / 2.0, -kPi / 2.0}) {
        const double te = k * step, tep = te + off;
        const double eep = usable_value(source, CorrelationSymbol::EEPrime, te, tep);
        seen_eep |= !std::isnan(eep);
        const double v = evaluate(te, tep);
        if (v > best) {
          best = v;
          best_e = te;
          best_ep = tep;
        }
      }
    }
  } else {
    for (std::size_t k1 = 0; k1 < k_count; ++k1) {
      for (std::size_t k2 = 0; k2 < k_count; ++k2) {
        const double eep = usable_value(source, CorrelationSymbol::EEPrime, k1 * step, k2 * step);
        if (std::isnan(eep)) continue;
        seen_eep = true;
        const double v = std::abs(ep[k1] - eep) - (1.0 - epp[k2]);
        if (v > best) {
          best = v;
          best_e = k1 * step;
          best_ep = k2 * step;
        }
      }
    }
  }

  SearchResult r;
  if (!seen_ep) return not_found(unusable_reason(CorrelationSymbol::EP, source));
  if (!seen_eep) return not_found(unusable_reason(CorrelationSymbol::EEPrime, source));
  if (!seen_epp) return not_found(unusable_reason(CorrelationSymbol::EPrimeP, source));
  if (!std::isfinite(best)) return not_found("no configuration has every V3 correlation defined");

  // Local refinement.
  if (opt.refine_factor > 1) {
    const double fine = step / opt.refine_factor;
    const double base_e = best_e, base_ep = best_ep;
    const double off = base_ep - base_e;
    for (int d1 = -opt.refine_factor; d1 <= opt.refine_factor; ++d1) {
      if (opt.orthogonal_same_side) {
        const double te = base_e + d1 * fine;
        const double v = evaluate(te, te + off);
        if (v > best) {
          best = v;
          best_e = te;
          best_ep = te + off;
        }
        continue;
      }
      for (int d2 = -opt.refine_factor; d2 <= opt.refine_factor; ++d2) {
        const double te = base_e + d1 * fine, tep = base_ep + d2 * fine;
        const double v = evaluate(te, tep);
        if (v > best) {
          best = v;
          best_e = te;
          best_ep = tep;
        }
      }
    }
  }

  r.found = true;
  r.angles.set(AxisSymbol::P, theta_p).set(AxisSymbol::E, best_e).set(AxisSymbol::EPrime, best_ep);
  r.v3 = eval_v3(usable_value(source, CorrelationSymbol::EP, best_e, theta_p),
                 usable_value(source, CorrelationSymbol::EEPrime, best_e, best_ep),
                 usable_value(source, CorrelationSymbol::EPrimeP, best_ep, theta_p));
  r.violation = -r.v3->slack;
  return r;
}

SearchResult search_v4(const CorrelationSource& source, const SearchOptions& opt) {
  const auto k_count = static_cast<std::size_t>(std::llround(kTwoPi / opt.grid_step));
  const double step = opt.grid_step;
  constexpr double theta_pp = 0.0;

  // Pinned P' = 0; free E (k1), E' (k2), P (k3).
  std::vector<double> epp(k_count), eppp(k_count), ep(k_count * k_count), epp_p(k_count * k_count);
  bool seen[4] = {false, false, false, false};
  for (std::size_t k = 0; k < k_count; ++k) {
    epp[k] = usable_value(source, CorrelationSymbol::EPPrime, k * step, theta_pp);
    eppp[k] = usable_value(source, CorrelationSymbol::EPrimePPrime, k * step, theta_pp);
    seen[1] |= !std::isnan(epp[k]);
    seen[3] |= !std::isnan(eppp[k]);
  }
  // Report the pair whose absence makes V4 impossible before doing the big tables.
  if (!seen[3]) return not_found(unusable_reason(CorrelationSymbol::EPrimePPrime, source));
  if (!seen[1]) return not_found(unusable_reason(CorrelationSymbol::EPPrime, source));

  for (std::size_t a = 0; a < k_count; ++a) {
    for (std::size_t p = 0; p < k_count; ++p) {
      ep[a * k_count + p] = usable_value(source, CorrelationSymbol::EP, a * step, p * step);
      epp_p[a * k_count + p] = usable_value(source, CorrelationSymbol::EPrimeP, a * step, p * step);
      seen[0] |= !std::isnan(ep[a * k_count + p]);
      seen[2] |= !std::isnan(epp_p[a * k_count + p]);
    }
  }
  if (!seen[0]) return not_found(unusable_reason(CorrelationSymbol::EP, source));
  if (!seen[2]) return not_found(unusable_reason(CorrelationSymbol::EPrimeP, source));

  double best = -std::numeric_limits<double>::infinity();
  std::size_t b1 = 0, b2 = 0, b3 = 0;
  for (std::size_t k2 = 0; k2 < k_count; ++k2) {
    const double c4 = eppp[k2];
    if (std::isnan(c4)) continue;
    const double* row3 = &epp_p[k2 * k_count];
    for (std::size_t k1 = 0; k1 < k_count; ++k1) {
      const double c2 = epp[k1];
      if (std::isnan(c2)) continue;
      const double* row1 = &ep[k1 * k_count];
      for (std::size_t k3 = 0; k3 < k_count; ++k3) {
        const double s = std::abs(row1[k3] + c2) + std::abs(row3[k3] - c4);
        if (s > best) {
          best = s;
          b1 = k1;
          b2 = k2;
          b3 = k3;
        }
      }
    }
  }
  if (!std::isfinite(best)) return not_found("no configuration has every V4 correlation defined");

  double te = b1 * step, tep = b2 * step, tp = b3 * step;
  auto evaluate = [&](double e, double e2, double p) {
    return std::abs(usable_value(source, CorrelationSymbol::EP, e, p) +
                    usable_value(source, CorrelationSymbol::EPPrime, e, theta_pp)) +
           std::abs(usable_value(source, CorrelationSymbol::EPrimeP, e2, p) -
                    usable_value(source, CorrelationSymbol::EPrimePPrime, e2, theta_pp));
  };
  if (opt.refine_factor > 1) {
    const double fine = step / opt.refine_factor;
    const double e0 = te, ep0 = tep, p0 = tp;
    const int r = opt.refine_factor;
    for (int d1 = -r; d1 <= r; ++d1)
      for (int d2 = -r; d2 <= r; ++d2)
        for (int d3 = -r; d3 <= r; ++d3) {
          const double v = evaluate(e0 + d1 * fine, ep0 + d2 * fine, p0 + d3 * fine);
          if (v > best) {
            best = v;
            te = e0 + d1 * fine;
            tep = ep0 + d2 * fine;
            tp = p0 + d3 * fine;
          }
        }
  }

  SearchResult out;
  out.found = true;
  out.angles.set(AxisSymbol::E, te).set(AxisSymbol::EPrime, tep).set(AxisSymbol::P, tp).set(AxisSymbol::PPrime,
                                                                                              theta_pp);
  out.v4 = eval_v4(usable_value(source, CorrelationSymbol::EP, te, tp),
                   usable_value(source, CorrelationSymbol::EPPrime, te, theta_pp),
                   usable_value(source, CorrelationSymbol::EPrimeP, tep, tp),
                   usable_value(source, CorrelationSymbol::EPrimePPrime, tep, theta_pp));
  out.violation = out.v4->s - 2.0;
  return out;
}

}  // namespace

SearchResult falsification_search(BellVersion version, const CorrelationSource& source,
                                   const SearchOptions& options) {
  if (!(options.grid_step > 0.0 && options.grid_step <= kPi)) throw DomainError("grid step must lie in (0, pi]");
  return version == BellVersion::V3 ? search_v3(source, options) : search_v4(source, options);
}

}  // namespace bellab::inequalities
