// Copyright 2026 The InexProj Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INEXPROJ_BOUNDS_HPP_
#define INEXPROJ_BOUNDS_HPP_

#include <cmath>
#include <optional>
#include <string>

#include "inexproj/solver.hpp"

namespace inexproj {

/// min{1, omega_lo (1 - sigma) / (alpha_max mu L)}.
inline double tau_min_bound(double L, double sigma, double omega_lo,
                            double alpha_max, double mu) {
  if (!(L > 0.0)) throw InputError("tau_min_bound: L must be positive");
  return std::min(1.0, omega_lo * (1.0 - sigma) / (alpha_max * mu * L));
}

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

struct BoundCheck {
  CheckStatus status = CheckStatus::Skipped;
  int checked = 0;      // inequalities evaluated
  int violations = 0;
  int first_violation = -1;  // k or N of the first violated inequality
  // Smallest bound - value seen (negative on violation).
  double worst_margin = kInf;
  std::string note;
};

struct BoundInputs {
  std::optional<double> L;           // Lipschitz constant of the gradient
  std::optional<double> f_star;      // optimal value
  std::optional<Vector> x_star;      // a minimizer
  bool convex = false;
  double fejer_slack = 1e-9;
};

struct BoundsReport {
  double tau_min = std::numeric_limits<double>::quiet_NaN();
  double xi = 0.0;
  double nu_sum = 0.0;
  BoundCheck tau;          // (a) tau_k >= tau_min
  BoundCheck stationarity; // (b) min ||w - x|| complexity
  BoundCheck gap;          // (c) convex optimality gap
  BoundCheck evaluations;  // (d) cumulative function evaluations
  BoundCheck fejer;        // (e) quasi-Fejer step

  bool all_pass_or_skipped() const {
    for (const BoundCheck* c : {&tau, &stationarity, &gap, &evaluations, &fejer}) {
      if (c->status == CheckStatus::Fail) return false;
    }
    return true;
  }
};

namespace detail {

inline void tally(BoundCheck& c, int index, double bound, double value,
                  double slack = 0.0) {
  ++c.checked;
  const double margin = bound - value;
  c.worst_margin = std::min(c.worst_margin, margin);
  if (!(value <= bound + slack)) {
    if (c.violations++ == 0) c.first_violation = index;
  }
}

inline void finish(BoundCheck& c) {
  c.status = c.violations == 0 ? CheckStatus::Pass : CheckStatus::Fail;
}

inline BoundCheck skipped(const std::string& why) {
  BoundCheck c;
  c.note = why;
  return c;
}

}  // namespace detail

/// Evaluates the step-size, complexity, evaluation-count and quasi-Fejer
/// inequalities on a finished run. A check whose hypotheses are not met
/// (P-type projections, no L, no f*, no x*, non-convex f, no trajectory)
/// is reported as skipped.
inline BoundsReport check_theoretical_bounds(const SolveResult& result,
                                             const SolverConfig& config,
                                             const BoundInputs& in) {
  BoundsReport rep;
  rep.xi = 2.0 * config.alpha_max / config.sigma;
  const auto& recs = result.records;
  for (const auto& r : recs) rep.nu_sum += r.nu;

  const bool rtype = std::holds_alternative<RTypeMode>(config.projection);
  if (!rtype) {
    const auto s = detail::skipped("needs R-type projections");
    rep.tau = rep.stationarity = rep.gap = rep.evaluations = rep.fejer = s;
    return rep;
  }
  if (recs.empty()) {
    const auto s = detail::skipped("empty record");
    rep.tau = rep.stationarity = rep.gap = rep.evaluations = rep.fejer = s;
    return rep;
  }
  const double f0 = recs.front().f;

  if (in.L) {
    const double tmin = tau_min_bound(*in.L, config.sigma, config.omega_lo,
                                      config.alpha_max, config.mu);
    rep.tau_min = tmin;
    for (const auto& r : recs) {
      if (r.tau > 0.0) detail::tally(rep.tau, r.k, r.tau, tmin);
    }
    detail::finish(rep.tau);

    const double per_iter = std::log(tmin) / std::log(config.omega_hi) + 1.0;
    for (const auto& r : recs) {
      detail::tally(rep.evaluations, r.k, 1.0 + (r.k + 1) * per_iter,
                    static_cast<double>(r.f_evals));
    }
    detail::finish(rep.evaluations);
  } else {
    rep.tau = rep.evaluations = detail::skipped("needs L");
  }

  if (in.L && in.f_star) {
    const double c = std::sqrt(2.0 * config.alpha_max * config.mu *
                               (f0 - *in.f_star + rep.nu_sum) /
                               (config.sigma * rep.tau_min));
    double best = kInf;
    for (std::size_t n = 1; n <= recs.size(); ++n) {
      best = std::min(best, recs[n - 1].step_norm);
      detail::tally(rep.stationarity, static_cast<int>(n),
                    c / std::sqrt(static_cast<double>(n)), best);
    }
    detail::finish(rep.stationarity);
  } else {
    rep.stationarity = detail::skipped("needs L and f*");
  }

  if (in.L && in.f_star && in.x_star && in.convex) {
    const double d0 = config.scaling.squared_norm(result.x_initial - *in.x_star);
    const double num = d0 + rep.xi * (f0 - *in.f_star + rep.nu_sum);
    const double den = 2.0 * config.alpha_min * rep.tau_min;
    double best = kInf;
    for (std::size_t n = 1; n <= recs.size(); ++n) {
      best = std::min(best, recs[n - 1].f - *in.f_star);
      detail::tally(rep.gap, static_cast<int>(n),
                    num / (den * static_cast<double>(n)), best);
    }
    detail::finish(rep.gap);
  } else {
    rep.gap = detail::skipped("needs L, f*, x* and convexity");
  }

  if (in.x_star && in.convex && result.iterates.size() >= 2) {
    const auto& xs = result.iterates;
    for (std::size_t k = 0; k + 1 < xs.size() && k < recs.size(); ++k) {
      const double before = config.scaling.squared_norm(xs[k] - *in.x_star);
      const double after = config.scaling.squared_norm(xs[k + 1] - *in.x_star);
      const double f_next = k + 1 < recs.size() ? recs[k + 1].f : result.f_final;
      const double nu = recs[k].nu;
      const double eps = 2.0 * config.alpha_max * nu +
                         rep.xi * (recs[k].f - f_next + nu);
      detail::tally(rep.fejer, static_cast<int>(k), before + eps, after,
                    in.fejer_slack);
    }
    detail::finish(rep.fejer);
  } else {
    rep.fejer = detail::skipped("needs x*, convexity and the trajectory");
  }
  return rep;
}

}  // namespace inexproj

#endif  // INEXPROJ_BOUNDS_HPP_
