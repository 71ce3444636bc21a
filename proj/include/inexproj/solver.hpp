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

#ifndef INEXPROJ_SOLVER_HPP_
#define INEXPROJ_SOLVER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "inexproj/core_model.hpp"
#include "inexproj/linesearch.hpp"
#include "inexproj/projections.hpp"
#include "inexproj/scaling.hpp"

namespace inexproj {

struct SolverConfig {
  double sigma = 1e-4;
  double omega_lo = 0.1;
  double omega_hi = 0.9;
  double alpha_min = 1e-10;
  double alpha_max = 1e10;
  double mu = 1.0;
  ProjectionMode projection = PTypeMode{0.8};
  LineSearchStrategy strategy = Armijo{};
  double tol = 1e-6;
  int max_iter = 10000;
  std::uint64_t seed = 0;
  // D_k for every k; must belong to the class for `mu`.
  ScalingMatrix scaling = ScalingMatrix::identity();
  ProjectionBudget budget;
  // Keep x^k and w^k for every iteration (needed by the distance checks).
  bool keep_trajectory = false;
};

inline void validate(const SolverConfig& c) {
  auto fail = [](const std::string& what) {
    throw InputError("SolverConfig: " + what);
  };
  if (!(c.sigma > 0.0 && c.sigma < 1.0)) fail("sigma must lie in (0, 1)");
  if (!(c.omega_lo > 0.0 && c.omega_lo < c.omega_hi && c.omega_hi < 1.0)) {
    fail("need 0 < omega_lo < omega_hi < 1");
  }
  if (!(c.alpha_min > 0.0 && c.alpha_min <= c.alpha_max)) {
    fail("need 0 < alpha_min <= alpha_max");
  }
  if (!(c.mu >= 1.0)) fail("mu must be >= 1");
  if (c.scaling.mu() > c.mu) fail("scaling matrix mu exceeds config mu");
  if (const auto* p = std::get_if<PTypeMode>(&c.projection)) {
    if (!(p->zeta > 0.0 && p->zeta <= 1.0)) fail("zeta must lie in (0, 1]");
  } else {
    const double g = std::get<RTypeMode>(c.projection).gamma;
    if (!(g >= 0.0 && g < 0.5)) fail("gamma must lie in [0, 1/2)");
  }
  if (!(c.tol > 0.0)) fail("tol must be positive");
  if (c.max_iter < 1) fail("max_iter must be >= 1");
  validate(c.strategy);
}

struct IterationRecord {
  int k = 0;
  double f = 0.0;      // f(x^k)
  double nu = 0.0;     // nu_k
  double tau = 0.0;    // accepted step; 0 on the terminal record
  double alpha = 0.0;  // alpha_k
  int proj_work = 0;   // Dykstra cycles or LO calls for w^k
  long f_evals = 0;    // cumulative objective evaluations
  double stat_measure = 0.0;  // max_ij |x^k - w^k|
  double step_norm = 0.0;     // ||w^k - x^k||
  double slope = 0.0;         // <grad f(x^k), w^k - x^k>
  int eigenpairs = 0;         // eigenpairs computed for w^k
  bool near_exact = false;    // projection accepted on Dykstra stall
};

enum class SolveStatus { Converged, MaxIter, LineSearchFailure, ProjectionFailure };

inline std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIter: return "max_iter";
    case SolveStatus::LineSearchFailure: return "linesearch_failure";
    case SolveStatus::ProjectionFailure: return "projection_failure";
  }
  return "unknown";
}

struct SolveResult {
  SolveStatus status = SolveStatus::MaxIter;
  Vector x_initial;
  Vector x_final;
  double f_final = 0.0;
  std::vector<IterationRecord> records;
  std::string message;
  // Filled when SolverConfig::keep_trajectory is set; iterates has one more
  // entry than w_points when the run ended on a step.
  std::vector<Vector> iterates;
  std::vector<Vector> w_points;

  long total_f_evals() const { return records.empty() ? 0 : records.back().f_evals; }
  long total_proj_work() const {
    long total = 0;
    for (const auto& r : records) total += r.proj_work;
    return total;
  }
  long total_eigenpairs() const {
    long total = 0;
    for (const auto& r : records) total += r.eigenpairs;
    return total;
  }
};

/// Spectral step <s,s>/<s,y> clamped to [alpha_min, alpha_max]; alpha_max
/// when <s,y> <= 0.
inline double bb_step(const Vector& s, const Vector& y, double alpha_min,
                      double alpha_max) {
  require_same_size(s, y, "bb_step");
  const double sy = s.dot(y);
  if (!(sy > 0.0)) return alpha_max;
  return std::clamp(s.squaredNorm() / sy, alpha_min, alpha_max);
}

/// min(alpha_max, max(alpha_min, 1 / ||g0||)).
inline double initial_alpha(const Vector& g0, double alpha_min,
                            double alpha_max) {
  const double norm = g0.norm();
  if (norm == 0.0) return alpha_max;
  return std::min(alpha_max, std::max(alpha_min, 1.0 / norm));
}

inline double stationarity_measure(const Vector& x, const Vector& w) {
  return max_abs_diff(x, w);
}

/// Wraps the iterate of a stalled projection engine as a certified result,
/// flagged near-exact.
inline ProjectionResult near_exact_projection(const NoCertificate& e,
                                              const Vector& v, const Vector& u,
                                              const ProjectionMode& mode) {
  ProjectionCertificate cert;
  cert.work = e.work();
  if (const auto* p = std::get_if<PTypeMode>(&mode)) {
    const double c = (e.best() - v).squaredNorm();
    cert.kind = PTypeCertificate{p->zeta, c, c,
                                 p->zeta * c + (1.0 - p->zeta) * (u - v).squaredNorm(),
                                 true};
  } else {
    const double gamma = std::get<RTypeMode>(mode).gamma;
    cert.kind = RTypeCertificate{gamma, -e.gap(),
                                 gamma * (e.best() - u).squaredNorm(), true};
  }
  return {e.best(), cert};
}

/// Inexact scaled gradient projection with non-monotone line search.
///
/// Each iteration takes the spectral step alpha_k, forms
/// z = x - alpha_k D^{-1} grad f(x), computes a certified inexact projection
/// w of z relative to x, stops if max|x - w| <= tol, and otherwise
/// backtracks along w - x and advances the non-monotone state.
inline SolveResult solve(const ProblemInstance& problem, const Vector& x0,
                         const SolverConfig& config) {
  validate(config);
  const FeasibleSet& set = problem.feasible_set;
  if (x0.size() != dimension(set)) {
    throw InputError("solve: initial point has the wrong dimension");
  }
  if (feasibility_violation(set, x0) > 1e-8) {
    throw InputError("solve: initial point is not feasible");
  }

  SolveResult result;
  result.x_initial = x0;
  Vector x = x0;
  double f = problem.objective(x);
  long evals = 1;
  Vector g = problem.gradient(x);
  double alpha = initial_alpha(g, config.alpha_min, config.alpha_max);
  NonMonotoneState state = initial_state(config.strategy, f);
  const BacktrackOptions ls{config.sigma, config.omega_lo, config.omega_hi};
  const bool ptype = std::holds_alternative<PTypeMode>(config.projection);
  if (config.keep_trajectory) result.iterates.push_back(x);

  for (int k = 0; k < config.max_iter; ++k) {
    const Vector z = x - alpha * config.scaling.apply_inverse(g);
    ProjectionResult proj;
    try {
      proj = project_inexact(set, z, x, config.projection, config.scaling,
                             config.budget);
    } catch (const NoCertificate& e) {
      // A stalled engine has reached the exact projection up to rounding.
      if (e.stalled() || (ptype && e.movement() < 1e-12)) {
        proj = near_exact_projection(e, z, x, config.projection);
      } else {
        result.status = SolveStatus::ProjectionFailure;
        result.message = e.what();
        break;
      }
    }

    IterationRecord rec;
    rec.k = k;
    rec.f = f;
    rec.nu = state.nu;
    rec.alpha = alpha;
    rec.proj_work = proj.certificate.work.total();
    rec.eigenpairs = proj.certificate.work.eigenpairs;
    rec.near_exact = proj.certificate.is_ptype()
                         ? proj.certificate.ptype().near_exact
                         : proj.certificate.rtype().near_exact;
    const Vector d = proj.w - x;
    rec.stat_measure = d.size() ? d.cwiseAbs().maxCoeff() : 0.0;
    rec.step_norm = d.norm();
    rec.slope = g.dot(d);
    if (config.keep_trajectory) result.w_points.push_back(proj.w);

    if (rec.stat_measure <= config.tol) {
      rec.f_evals = evals;
      result.records.push_back(rec);
      result.status = SolveStatus::Converged;
      break;
    }

    BacktrackResult step;
    try {
      step = backtrack([&](double tau) { return problem.objective(x + tau * d); },
                       f, rec.slope, state.nu, ls);
    } catch (const LineSearchFailure& e) {
      rec.f_evals = evals;
      result.records.push_back(rec);
      result.status = SolveStatus::LineSearchFailure;
      result.message = e.what();
      break;
    }
    evals += step.evals;
    rec.tau = step.tau;
    rec.f_evals = evals;
    result.records.push_back(rec);

    const Vector x_next = x + step.tau * d;
    const Vector g_next = problem.gradient(x_next);
    state = advance_state(config.strategy, state, f, step.f_new);
    alpha = bb_step(x_next - x, g_next - g, config.alpha_min, config.alpha_max);
    x = x_next;
    g = g_next;
    f = step.f_new;
    if (config.keep_trajectory) result.iterates.push_back(x);
    if (k + 1 == config.max_iter) result.status = SolveStatus::MaxIter;
  }
  result.x_final = x;
  result.f_final = f;
  return result;
}

}  // namespace inexproj

#endif  // INEXPROJ_SOLVER_HPP_
