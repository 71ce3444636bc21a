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

#ifndef INEXPROJ_LINESEARCH_HPP_
#define INEXPROJ_LINESEARCH_HPP_

#include <deque>
#include <functional>
#include <string>
#include <variant>

#include "inexproj/common.hpp"

namespace inexproj {

// Monotone Armijo: nu_k = 0.
struct Armijo {};

// Windowed maximum: nu_k = max of the last min(k, M) + 1 values minus f_k.
struct MaxType {
  int window = 5;
};

// Weighted average: c_{k+1} = (eta q_k c_k + f_{k+1}) / q_{k+1},
// q_{k+1} = eta q_k + 1, nu_k = c_k - f_k.
struct AverageType {
  double eta = 0.85;
};

using LineSearchStrategy = std::variant<Armijo, MaxType, AverageType>;

inline std::string strategy_name(const LineSearchStrategy& s) {
  if (std::holds_alternative<Armijo>(s)) return "armijo";
  if (std::holds_alternative<MaxType>(s)) return "max";
  return "avg";
}

struct NonMonotoneState {
  double nu = 0.0;
  double delta = 1.0;
  std::deque<double> f_history;  // MaxType only, newest at the back
  double q = 1.0;                // AverageType only
  double c = 0.0;                // AverageType only
};

/// State at k = 0: nu_0 = 0, the window holds f(x^0) only, q_0 = 1, c_0 = f_0.
inline NonMonotoneState initial_state(const LineSearchStrategy& strategy,
                                      double f0) {
  NonMonotoneState s;
  if (std::holds_alternative<MaxType>(strategy)) s.f_history.push_back(f0);
  if (std::holds_alternative<AverageType>(strategy)) s.c = f0;
  return s;
}

inline double delta_min_of(const LineSearchStrategy& strategy) {
  if (std::holds_alternative<Armijo>(strategy)) return 1.0;
  if (const auto* a = std::get_if<AverageType>(&strategy)) return 1.0 - a->eta;
  return 0.0;
}

inline void validate(const LineSearchStrategy& strategy) {
  if (const auto* m = std::get_if<MaxType>(&strategy)) {
    if (m->window < 0) throw InputError("MaxType: window must be >= 0");
  }
  if (const auto* a = std::get_if<AverageType>(&strategy)) {
    if (!(a->eta >= 0.0 && a->eta < 1.0)) {
      throw InputError("AverageType: eta must lie in [0, 1)");
    }
  }
}

/// Non-monotone update: picks nu_{k+1}, delta_{k+1} with
/// nu_{k+1} <= (1 - delta_{k+1}) (f_k + nu_k - f_{k+1}) after a
/// step from f_k to f_next accepted under state.nu.
inline NonMonotoneState advance_state(const LineSearchStrategy& strategy,
                                      const NonMonotoneState& state, double f_k,
                                      double f_next) {
  NonMonotoneState next = state;
  if (std::holds_alternative<Armijo>(strategy)) {
    next.nu = 0.0;
    next.delta = 1.0;
  } else if (const auto* m = std::get_if<MaxType>(&strategy)) {
    next.f_history.push_back(f_next);
    while (next.f_history.size() > std::size_t(m->window) + 1) {
      next.f_history.pop_front();
    }
    double top = f_next;
    for (double f : next.f_history) top = std::max(top, f);
    next.nu = top - f_next;
    // Largest delta the nu update inequality admits (informational).
    const double budget = f_k + state.nu - f_next;
    next.delta = budget > 0.0 ? std::clamp(1.0 - next.nu / budget, 0.0, 1.0)
                              : 0.0;
  } else {
    const double eta = std::get<AverageType>(strategy).eta;
    next.q = eta * state.q + 1.0;
    // Same as (eta q c + f_next) / q_next, written so c never increases.
    next.c = state.c - (state.c - f_next) / next.q;
    next.nu = std::max(0.0, next.c - f_next);
    next.delta = 1.0 / next.q;
  }
  return next;
}

/// f_trial <= f_k + sigma * tau * slope + nu (NaN never passes).
inline bool armijo_condition(double f_trial, double f_k, double slope,
                             double tau, double sigma, double nu) {
  return f_trial <= f_k + sigma * tau * slope + nu;
}

struct BacktrackResult {
  double tau = 1.0;
  double f_new = 0.0;
  int evals = 0;
};

struct BacktrackOptions {
  double sigma = 1e-4;
  double omega_lo = 0.1;
  double omega_hi = 0.9;
  double tau_floor = 1e-16;
};

/// Non-monotone backtracking on phi(tau) = f(x + tau d) starting at tau = 1.
/// A rejected trial is replaced by the minimizer of the quadratic through
/// phi(0), phi'(0) = slope and phi(trial), or by trial / 2 when that
/// minimizer falls outside [omega_lo * trial, omega_hi * trial].
inline BacktrackResult backtrack(const std::function<double(double)>& phi,
                                 double f_k, double slope, double nu,
                                 const BacktrackOptions& opt = {}) {
  if (!(slope < 0.0)) {
    throw LineSearchFailure("backtrack: direction is not a descent direction");
  }
  BacktrackResult r;
  double tau = 1.0;
  while (true) {
    const double f_trial = phi(tau);
    ++r.evals;
    if (armijo_condition(f_trial, f_k, slope, tau, opt.sigma, nu)) {
      r.tau = tau;
      r.f_new = f_trial;
      return r;
    }
    double next = 0.5 * tau;
    const double curvature = f_trial - f_k - slope * tau;
    if (std::isfinite(f_trial) && curvature > 0.0) {
      const double vertex = -slope * tau * tau / (2.0 * curvature);
      if (vertex >= opt.omega_lo * tau && vertex <= opt.omega_hi * tau) {
        next = vertex;
      }
    }
    tau = next;
    if (tau < opt.tau_floor) {
      throw LineSearchFailure(
          "backtrack: step underflow without acceptance (" +
          std::to_string(r.evals) + " evaluations)");
    }
  }
}

}  // namespace inexproj

#endif  // INEXPROJ_LINESEARCH_HPP_
