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

#ifndef INEXPROJ_FRANK_WOLFE_HPP_
#define INEXPROJ_FRANK_WOLFE_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "inexproj/certificates.hpp"
#include "inexproj/feasible_set.hpp"
#include "inexproj/lanczos.hpp"
#include "inexproj/scaling.hpp"

namespace inexproj {

struct LinearMinimizer {
  Vector z;
  double value = 0.0;
  int eigenpairs = 0;
  Vector factor;  // spectrahedron: the unit q with z = q q^T
};

/// argmin_{z in C} <g, z> over a compact set.
///
/// Simplex: the vertex at the smallest coordinate (lowest index on ties).
/// Box: the corner picking lower where g > 0 and upper otherwise.
/// Spectrahedron: q q^T for a unit eigenvector q of the smallest eigenvalue
/// of sym(g), computed by Lanczos.
inline LinearMinimizer lo_oracle(const FeasibleSet& set, const Vector& g) {
  if (g.size() != dimension(set)) {
    throw InputError("lo_oracle: dimension mismatch");
  }
  if (std::holds_alternative<Simplex>(set)) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < g.size(); ++i) {
      if (g[i] < g[best]) best = i;
    }
    Vector z = Vector::Zero(g.size());
    z[best] = 1.0;
    return {std::move(z), g[best], 0};
  }
  if (const auto* box = std::get_if<Box>(&set)) {
    if (!is_compact(set)) {
      throw UnsupportedConfiguration("lo_oracle: box must have finite bounds");
    }
    Vector z(g.size());
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      z[i] = g[i] > 0.0 ? box->lower[i] : box->upper[i];
    }
    const double value = g.dot(z);
    return {std::move(z), value, 0};
  }
  if (const auto* spec = std::get_if<Spectrahedron>(&set)) {
    const auto gm = as_matrix(g, spec->n);
    const Matrix s = 0.5 * (gm + gm.transpose());
    Eigenpair pair = smallest_eigenpair(s);
    RowMajorMatrix z = pair.vector * pair.vector.transpose();
    return {flatten(z), pair.value, 1, pair.vector};
  }
  throw UnsupportedConfiguration("lo_oracle: set is not compact");
}

/// Inexact projection of v relative to u by Frank-Wolfe on
/// psi(z) = 1/2 ||z - v||_D^2, started from w0.
///
/// Each step solves the linear subproblem with the LO oracle, giving
/// s* = <D(w - v), z - w>; the run stops once -s* <= gamma ||w - u||_D^2,
/// which certifies <D(v - w), y - w> <= gamma ||w - u||_D^2 for all y in C.
/// Otherwise w <- w + a (z - w) with a = min(1, -s* / ||z - w||_D^2).
inline ProjectionResult frank_wolfe_project(const FeasibleSet& set,
                                            const Vector& v, const Vector& u,
                                            double gamma,
                                            const ScalingMatrix& d,
                                            const Vector& w0, int max_iters) {
  if (!(gamma >= 0.0)) throw InputError("frank_wolfe_project: gamma < 0");
  require_same_size(v, u, "frank_wolfe_project");
  require_same_size(v, w0, "frank_wolfe_project");
  if (!is_compact(set)) {
    throw UnsupportedConfiguration("frank_wolfe_project: set is not compact");
  }
  ProjectionWork work;
  Vector w = w0;
  double gap = kInf;
  for (int iter = 0; iter <= max_iters; ++iter) {
    const Vector grad = d.apply(w - v);
    LinearMinimizer lo = lo_oracle(set, grad);
    ++work.lo_calls;
    work.eigenpairs += lo.eigenpairs;
    const Vector step = lo.z - w;
    const double s_star = grad.dot(step);
    gap = -s_star;
    const double threshold = gamma * d.squared_norm(w - u);
    if (-s_star <= threshold) {
      return {std::move(w), {RTypeCertificate{gamma, s_star, threshold}, work}};
    }
    if (iter == max_iters) break;
    const double curvature = d.squared_norm(step);
    const double a = std::min(1.0, -s_star / curvature);
    w += a * step;
  }
  throw NoCertificate("frank_wolfe_project: iteration budget exhausted", w,
                      std::numeric_limits<double>::quiet_NaN(), gap, work);
}

inline ProjectionResult frank_wolfe_project(const FeasibleSet& set,
                                            const Vector& v, const Vector& u,
                                            double gamma,
                                            const ScalingMatrix& d,
                                            int max_iters) {
  return frank_wolfe_project(set, v, u, gamma, d, u, max_iters);
}

/// Away-step Frank-Wolfe on the unit simplex in the D-metric, started from u.
/// The coordinates of w are its vertex weights, so the away vertex is the
/// support coordinate with the largest gradient entry. Same stopping test
/// and certificate as frank_wolfe_project.
inline ProjectionResult away_step_fw_simplex(const Vector& v, const Vector& u,
                                             double gamma,
                                             const ScalingMatrix& d,
                                             int max_iters) {
  if (!(gamma >= 0.0)) throw InputError("away_step_fw_simplex: gamma < 0");
  require_same_size(v, u, "away_step_fw_simplex");
  const Simplex set{v.size()};
  ProjectionWork work;
  Vector w = u;
  double gap = kInf;
  for (int iter = 0; iter <= max_iters; ++iter) {
    const Vector grad = d.apply(w - v);
    const LinearMinimizer lo = lo_oracle(set, grad);
    ++work.lo_calls;
    const double gw = grad.dot(w);
    const double s_star = lo.value - gw;
    gap = -s_star;
    const double threshold = gamma * d.squared_norm(w - u);
    if (-s_star <= threshold) {
      return {std::move(w), {RTypeCertificate{gamma, s_star, threshold}, work}};
    }
    if (iter == max_iters) break;
    Eigen::Index away = -1;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      if (w[i] > 0.0 && (away < 0 || grad[i] > grad[away])) away = i;
    }
    const double away_gap = grad[away] - gw;
    const bool toward = -s_star >= away_gap || w[away] >= 1.0;
    Vector dir;
    double max_step;
    if (toward) {
      dir = lo.z - w;
      max_step = 1.0;
    } else {
      dir = w;
      dir[away] -= 1.0;
      max_step = w[away] / (1.0 - w[away]);
    }
    const double a = std::min(max_step, -grad.dot(dir) / d.squared_norm(dir));
    w += a * dir;
    if (!toward && a == max_step) w[away] = 0.0;
    w = w.cwiseMax(0.0);
  }
  throw NoCertificate("away_step_fw_simplex: iteration budget exhausted", w,
                      std::numeric_limits<double>::quiet_NaN(), gap, work);
}

namespace detail {

// Projection onto {x >= 0, sum x = mass}.
inline Vector project_scaled_simplex(const Vector& x, double mass) {
  if (mass <= 0.0) return Vector::Zero(x.size());
  return mass * project_simplex(x / mass);
}

// Face of the unit simplex spanned by a set of vertices, mixed with the
// fixed start point: w = theta u + s, s >= 0 on the support, sum s = 1 - theta.
class SimplexFace {
 public:
  SimplexFace(const Vector& v, const Vector& u) : v_(v), u_(u) {}

  // Returns false when the vertex is already in the face.
  bool add(const LinearMinimizer& lo) {
    Eigen::Index idx = 0;
    lo.z.maxCoeff(&idx);
    if (std::find(support_.begin(), support_.end(), idx) != support_.end()) {
      return false;
    }
    support_.push_back(idx);
    return true;
  }

  // Best point of the face for a fixed theta, with psi = ||w - v||^2.
  Vector solve(double theta, double* psi) const {
    Vector w = theta * u_;
    if (!support_.empty()) {
      Vector r(static_cast<Eigen::Index>(support_.size()));
      for (std::size_t i = 0; i < support_.size(); ++i) {
        const auto j = support_[i];
        r[static_cast<Eigen::Index>(i)] = v_[j] - theta * u_[j];
      }
      const Vector s = project_scaled_simplex(r, 1.0 - theta);
      for (std::size_t i = 0; i < support_.size(); ++i) {
        w[support_[i]] += s[static_cast<Eigen::Index>(i)];
      }
    }
    *psi = (w - v_).squaredNorm();
    return w;
  }

  // Drops vertices that carry no mass at the accepted theta.
  void prune(double theta) {
    if (support_.empty()) return;
    Vector r(static_cast<Eigen::Index>(support_.size()));
    for (std::size_t i = 0; i < support_.size(); ++i) {
      const auto j = support_[i];
      r[static_cast<Eigen::Index>(i)] = v_[j] - theta * u_[j];
    }
    const Vector s = project_scaled_simplex(r, 1.0 - theta);
    std::vector<Eigen::Index> kept;
    for (std::size_t i = 0; i < support_.size(); ++i) {
      if (s[static_cast<Eigen::Index>(i)] > 0.0) kept.push_back(support_[i]);
    }
    support_ = std::move(kept);
  }

 private:
  const Vector& v_;
  const Vector& u_;
  std::vector<Eigen::Index> support_;
};

// Face of the spectrahedron spanned by an orthonormal basis V (n x r),
// mixed with the start point: w = theta u + V S V^T, S PSD, tr S = 1 - theta.
// For symmetric R = sym(v) - theta u,
//   ||V S V^T - R||^2 = ||S - V^T R V||^2 - ||V^T R V||^2 + ||R||^2,
// so each theta costs one r x r eigendecomposition.
class SpectrahedronFace {
 public:
  SpectrahedronFace(const Vector& v, const Vector& u, Eigen::Index n)
      : n_(n), basis_(n, 0) {
    const auto vm = as_matrix(v, n);
    vs_ = 0.5 * (vm + vm.transpose());
    const auto um = as_matrix(u, n);
    us_ = 0.5 * (um + um.transpose());
    skew2_ = (Matrix(vm) - vs_).squaredNorm();
    vv_ = vs_.squaredNorm();
    vu_ = (vs_.array() * us_.array()).sum();
    uu_ = us_.squaredNorm();
  }

  bool add(const LinearMinimizer& lo) {
    Vector q = lo.factor;
    for (int pass = 0; pass < 2; ++pass) {
      if (basis_.cols() > 0) q -= basis_ * (basis_.transpose() * q);
    }
    const double norm = q.norm();
    if (norm < 1e-8) return false;
    basis_.conservativeResize(Eigen::NoChange, basis_.cols() + 1);
    basis_.col(basis_.cols() - 1) = q / norm;
    refresh();
    return true;
  }

  Vector solve(double theta, double* psi) const {
    Matrix s;
    const double value = face_value(theta, &s);
    *psi = value;
    Matrix w = theta * us_;
    if (basis_.cols() > 0) w += basis_ * s * basis_.transpose();
    return flatten(RowMajorMatrix(w));
  }

  void prune(double theta) {
    if (basis_.cols() == 0) return;
    const Matrix m = mv_ - theta * mu_;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
    const Vector lambda = project_scaled_simplex(eig.eigenvalues(), 1.0 - theta);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
      if (lambda[i] > 0.0) keep.push_back(i);
    }
    Matrix next(n_, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
      next.col(static_cast<Eigen::Index>(i)) = basis_ * eig.eigenvectors().col(keep[i]);
    }
    basis_ = std::move(next);
    refresh();
  }

 private:
  void refresh() {
    mv_ = basis_.transpose() * vs_ * basis_;
    mu_ = basis_.transpose() * us_ * basis_;
  }

  double face_value(double theta, Matrix* s_out) const {
    const double rr = vv_ - 2.0 * theta * vu_ + theta * theta * uu_;
    if (basis_.cols() == 0) {
      *s_out = Matrix();
      return rr + skew2_;
    }
    const Matrix m = mv_ - theta * mu_;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
    const Vector lambda = project_scaled_simplex(eig.eigenvalues(), 1.0 - theta);
    *s_out = eig.eigenvectors() * lambda.asDiagonal() *
             eig.eigenvectors().transpose();
    return rr - m.squaredNorm() + (*s_out - m).squaredNorm() + skew2_;
  }

  Eigen::Index n_;
  Matrix basis_;
  Matrix vs_, us_, mv_, mu_;
  double skew2_ = 0.0, vv_ = 0.0, vu_ = 0.0, uu_ = 0.0;
};

template <typename Face>
ProjectionResult corrective_fw_loop(const FeasibleSet& set, const Vector& v,
                                    const Vector& u, double gamma, Face& face,
                                    int max_iters, double stall_rel) {
  ProjectionWork work;
  Vector w = u;
  double theta = 1.0;
  double psi = (w - v).squaredNorm();
  double gap = kInf;
  for (int iter = 0; iter <= max_iters; ++iter) {
    const Vector grad = w - v;
    LinearMinimizer lo = lo_oracle(set, grad);
    ++work.lo_calls;
    work.eigenpairs += lo.eigenpairs;
    const Vector step = lo.z - w;
    const double s_star = grad.dot(step);
    gap = -s_star;
    const double threshold = gamma * (w - u).squaredNorm();
    if (gap <= threshold) {
      return {std::move(w), {RTypeCertificate{gamma, s_star, threshold}, work}};
    }
    if (gap <= stall_rel * grad.norm() * step.norm()) {
      throw NoCertificate("frank_wolfe_corrective: gap at rounding level", w,
                          std::numeric_limits<double>::quiet_NaN(), gap, work,
                          true);
    }
    if (iter == max_iters) break;

    // Classic step length, used as one candidate for the mixing weight.
    const double a = std::min(1.0, gap / step.squaredNorm());
    face.add(lo);
    // psi along theta is convex: golden section on [0, theta] plus the
    // endpoints and the classic-step weight.
    auto value = [&](double t) {
      double p;
      face.solve(t, &p);
      return p;
    };
    double best_t = theta;
    double best_p = value(theta);
    for (double t : {0.0, (1.0 - a) * theta}) {
      const double p = value(t);
      if (p < best_p) best_t = t, best_p = p;
    }
    if (theta > 0.0) {
      const double g = 0.5 * (std::sqrt(5.0) - 1.0);
      double lo_t = 0.0, hi_t = theta;
      double x1 = hi_t - g * (hi_t - lo_t), x2 = lo_t + g * (hi_t - lo_t);
      double f1 = value(x1), f2 = value(x2);
      for (int it = 0; it < 60 && hi_t - lo_t > 1e-15; ++it) {
        if (f1 <= f2) {
          hi_t = x2, x2 = x1, f2 = f1;
          x1 = hi_t - g * (hi_t - lo_t), f1 = value(x1);
        } else {
          lo_t = x1, x1 = x2, f1 = f2;
          x2 = lo_t + g * (hi_t - lo_t), f2 = value(x2);
        }
      }
      for (double t : {x1, x2}) {
        const double p = value(t);
        if (p < best_p) best_t = t, best_p = p;
      }
    }
    if (best_p > psi) {
      // The face solve lost to rounding; keep the current point.
      continue;
    }
    theta = best_t;
    face.prune(theta);
    w = face.solve(theta, &psi);
  }
  throw NoCertificate("frank_wolfe_corrective: iteration budget exhausted", w,
                      std::numeric_limits<double>::quiet_NaN(), gap, work);
}

}  // namespace detail

/// Frank-Wolfe with face re-optimization, for the simplex and the
/// spectrahedron under the identity scaling.
///
/// Runs the same gap test as frank_wolfe_project from w0 = u, but after each
/// linear-minimization step it re-solves the projection exactly over
/// {theta u + y : y in the face spanned by the atoms found so far}, which
/// contains the classic step. Atoms without mass are dropped. Throws
/// NoCertificate, flagged stalled, when the gap sinks below
/// stall_rel * ||w - v|| * ||z - w|| without meeting the test.
inline ProjectionResult frank_wolfe_corrective_project(
    const FeasibleSet& set, const Vector& v, const Vector& u, double gamma,
    int max_iters, double stall_rel = 1e-13) {
  if (!(gamma >= 0.0)) throw InputError("frank_wolfe_corrective: gamma < 0");
  require_same_size(v, u, "frank_wolfe_corrective");
  if (v.size() != dimension(set)) {
    throw InputError("frank_wolfe_corrective: dimension mismatch");
  }
  if (std::holds_alternative<Simplex>(set)) {
    detail::SimplexFace face(v, u);
    return detail::corrective_fw_loop(set, v, u, gamma, face, max_iters,
                                      stall_rel);
  }
  if (const auto* spec = std::get_if<Spectrahedron>(&set)) {
    detail::SpectrahedronFace face(v, u, spec->n);
    return detail::corrective_fw_loop(set, v, u, gamma, face, max_iters,
                                      stall_rel);
  }
  throw UnsupportedConfiguration(
      "frank_wolfe_corrective: needs a simplex or a spectrahedron");
}

/// The point maximizing <D(v - w), y> over C: the witness that settles the
/// universal quantifier of the R-type inequality on compact sets.
inline Vector lo_witness(const FeasibleSet& set, const Vector& w,
                         const Vector& v, const ScalingMatrix& d) {
  return lo_oracle(set, d.apply(w - v)).z;
}

}  // namespace inexproj

#endif  // INEXPROJ_FRANK_WOLFE_HPP_
