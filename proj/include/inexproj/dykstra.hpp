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

#ifndef INEXPROJ_DYKSTRA_HPP_
#define INEXPROJ_DYKSTRA_HPP_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "inexproj/certificates.hpp"
#include "inexproj/feasible_set.hpp"
#include "inexproj/scaling.hpp"

namespace inexproj {

// Dykstra's alternating projections over C = C_1 ∩ ... ∩ C_p, with a
// certified lower bound on ||P_C(v) - v||^2 taken from the correction terms.
//
// For any corrections y_i and any x in C,
//   ||x - v||^2 >= 2<v, ybar> - ||ybar||^2 - 2 sum_i sigma_{C_i}(y_i),
// where ybar = sum_i y_i and sigma_K is the support function of K. Dykstra
// keeps x = v - ybar, and for cones its corrections lie in the polar cone, so
// the support terms vanish. Boxes and halfspaces contribute finite terms.

namespace detail {

inline double box_support(const Vector& y, const Vector& lower,
                          const Vector& upper) {
  double total = 0.0;
  for (Eigen::Index j = 0; j < y.size(); ++j) {
    if (y[j] > 0.0) {
      if (!std::isfinite(upper[j])) return kInf;
      total += y[j] * upper[j];
    } else if (y[j] < 0.0) {
      if (!std::isfinite(lower[j])) return kInf;
      total += y[j] * lower[j];
    }
  }
  return total;
}

// Support of {<a, x> <= b} at y; finite only along the outward normal.
inline double halfspace_support(const Vector& y, const Halfspace& h) {
  if (y.squaredNorm() == 0.0) return 0.0;
  const double along = y.dot(h.normal);
  const double n2 = h.normal.squaredNorm();
  const Vector perp = y - (along / n2) * h.normal;
  if (along < 0.0 || perp.norm() > 1e-9 * y.norm()) return kInf;
  return along / n2 * h.offset;
}

inline double weak_duality_bound(const Vector& v, const Vector& ybar,
                                 double support_sum) {
  return std::max(0.0, 2.0 * v.dot(ybar) - ybar.squaredNorm() -
                           2.0 * support_sum);
}

// Effective bounds of a box restricted to symmetric matrices.
inline std::pair<Vector, Vector> symmetric_bounds(const SddPlusBox& s) {
  const auto lm = as_matrix(s.lower, s.n);
  const auto um = as_matrix(s.upper, s.n);
  RowMajorMatrix lo = lm.cwiseMax(lm.transpose());
  RowMajorMatrix hi = um.cwiseMin(um.transpose());
  return {flatten(lo), flatten(hi)};
}

// Maps a symmetric matrix into SDD+ ∩ box when possible: clamp into the box,
// then raise each diagonal entry to its off-diagonal row sum. Identity on
// feasible points.
inline std::optional<Vector> restore_sdd_plus_box(const Vector& x,
                                                  const Vector& lower,
                                                  const Vector& upper,
                                                  Eigen::Index n) {
  Vector w = exact_project_box(x, lower, upper);
  auto wm = as_matrix(w, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double off = wm.row(i).cwiseAbs().sum() - std::abs(wm(i, i));
    if (wm(i, i) < off) {
      if (off > upper[i * n + i]) return std::nullopt;
      wm(i, i) = off;
    }
  }
  return w;
}

}  // namespace detail

/// c_l = max(0, 2<v, ybar> - ||ybar||^2 - 2 sum_i sigma_i(y_i)) for the
/// component order of `set`: SddPlusBox lists its n row cones then the box
/// (row-cone corrections are taken to lie in the polar cone, so their support
/// terms are zero); Box is one component; a HalfspaceIntersection lists its
/// halfspaces. For SddPlusBox the bound is computed for the symmetric part of
/// v and the squared norm of the skew part is added.
inline double dykstra_lower_bound(const FeasibleSet& set, const Vector& v,
                                  std::span<const Vector> corrections) {
  Vector ybar = Vector::Zero(v.size());
  double support = 0.0;
  auto accumulate = [&](std::size_t index, double term) {
    if (!std::isfinite(term)) {
      throw UnsupportedConfiguration(
          "dykstra_lower_bound: support term of component " +
          std::to_string(index) + " is not finite");
    }
    support += term;
    require_same_size(corrections[index], v, "dykstra_lower_bound");
    ybar += corrections[index];
  };
  if (const auto* sdd = std::get_if<SddPlusBox>(&set)) {
    if (corrections.size() != std::size_t(sdd->n) + 1) {
      throw InputError("dykstra_lower_bound: expected n + 1 corrections");
    }
    const auto [lo, hi] = detail::symmetric_bounds(*sdd);
    for (std::size_t i = 0; i < std::size_t(sdd->n); ++i) accumulate(i, 0.0);
    accumulate(std::size_t(sdd->n),
               detail::box_support(corrections.back(), lo, hi));
    const Vector s = symmetrize(v);
    return detail::weak_duality_bound(s, ybar, support) +
           (v - s).squaredNorm();
  }
  if (const auto* box = std::get_if<Box>(&set)) {
    if (corrections.size() != 1) {
      throw InputError("dykstra_lower_bound: expected one correction");
    }
    accumulate(0, detail::box_support(corrections[0], box->lower, box->upper));
    return detail::weak_duality_bound(v, ybar, support);
  }
  if (const auto* hs = std::get_if<HalfspaceIntersection>(&set)) {
    if (corrections.size() != hs->halfspaces.size()) {
      throw InputError("dykstra_lower_bound: one correction per halfspace");
    }
    for (std::size_t i = 0; i < corrections.size(); ++i) {
      accumulate(i, detail::halfspace_support(corrections[i], hs->halfspaces[i]));
    }
    return detail::weak_duality_bound(v, ybar, support);
  }
  throw UnsupportedConfiguration(
      "dykstra_lower_bound: set is not an intersection Dykstra handles");
}

namespace detail {

// One Dykstra run. `cycle()` performs a full pass; `x()` is the current
// (asymptotically feasible) iterate; `lower_bound()` the certified c_l for
// the original point v.
class DykstraState {
 public:
  DykstraState(const FeasibleSet& set, const Vector& v) : set_(set), v_(v) {
    if (const auto* sdd = std::get_if<SddPlusBox>(&set)) {
      sdd_ = sdd;
      n_ = sdd->n;
      s_ = symmetrize(v);
      skew2_ = (v - s_).squaredNorm();
      std::tie(lower_, upper_) = symmetric_bounds(*sdd);
      x_ = s_;
      row_corr_ = RowMajorMatrix::Zero(n_, n_);
      box_corr_ = Vector::Zero(v.size());
    } else if (const auto* box = std::get_if<Box>(&set)) {
      s_ = v;
      x_ = v;
      lower_ = box->lower;
      upper_ = box->upper;
      box_corr_ = Vector::Zero(v.size());
    } else if (const auto* hs = std::get_if<HalfspaceIntersection>(&set)) {
      halfspaces_ = hs;
      s_ = v;
      x_ = v;
      corr_.assign(hs->halfspaces.size(), Vector::Zero(v.size()));
    } else {
      throw UnsupportedConfiguration(
          "dykstra_project: set must be SddPlusBox, Box or "
          "HalfspaceIntersection");
    }
  }

  // Returns the max-abs movement of the iterate over the cycle.
  double cycle() {
    const Vector before = x_;
    if (sdd_ != nullptr) {
      sdd_cycle();
    } else if (halfspaces_ != nullptr) {
      for (std::size_t i = 0; i < corr_.size(); ++i) {
        const Vector tmp = x_ + corr_[i];
        x_ = project_halfspace(tmp, halfspaces_->halfspaces[i]);
        corr_[i] = tmp - x_;
      }
    } else {
      box_step();
    }
    return max_abs_diff(before, x_);
  }

  const Vector& x() const { return x_; }

  // Feasible candidate derived from the current iterate, if any.
  std::optional<Vector> candidate() const {
    if (feasibility_violation(set_, x_) <= kFeasibilityTol) return x_;
    if (sdd_ != nullptr) {
      auto restored = restore_sdd_plus_box(x_, lower_, upper_, n_);
      if (restored && feasibility_violation(set_, *restored) <= kFeasibilityTol)
        return restored;
    }
    return std::nullopt;
  }

  double lower_bound() const {
    const Vector ybar = s_ - x_;
    double support = 0.0;
    if (halfspaces_ != nullptr) {
      for (std::size_t i = 0; i < corr_.size(); ++i) {
        support += halfspace_support(corr_[i], halfspaces_->halfspaces[i]);
      }
    } else {
      support = box_support(box_corr_, lower_, upper_);
    }
    if (!std::isfinite(support)) return skew2_;
    return weak_duality_bound(s_, ybar, support) + skew2_;
  }

 private:
  void box_step() {
    const Vector tmp = x_ + box_corr_;
    x_ = tmp.cwiseMax(lower_).cwiseMin(upper_);
    box_corr_ = tmp - x_;
  }

  void sdd_cycle() {
    auto xm = as_matrix(x_, n_);
    std::vector<double> abs_s(std::size_t(n_ > 0 ? n_ - 1 : 0));
    Vector tmp(n_);
    for (Eigen::Index i = 0; i < n_; ++i) {
      tmp = xm.row(i).transpose() + row_corr_.row(i).transpose();
      const double a = tmp[i];
      double off_sum = 0.0;
      std::size_t k = 0;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (j == i) continue;
        abs_s[k++] = std::abs(tmp[j]);
        off_sum += std::abs(tmp[j]);
      }
      Vector p = tmp;
      if (off_sum > a) {
        const double lam = sdd_row_multiplier(a, abs_s);
        p[i] = a + lam;
        for (Eigen::Index j = 0; j < n_; ++j) {
          if (j == i) continue;
          p[j] = std::copysign(std::max(std::abs(tmp[j]) - 0.5 * lam, 0.0),
                               tmp[j]);
        }
      }
      row_corr_.row(i) = (tmp - p).transpose();
      xm.row(i) = p.transpose();
      xm.col(i) = p;
    }
    box_step();
  }

  const FeasibleSet& set_;
  Vector v_;
  Vector s_;
  double skew2_ = 0.0;
  Vector x_;
  Vector lower_;
  Vector upper_;
  const SddPlusBox* sdd_ = nullptr;
  const HalfspaceIntersection* halfspaces_ = nullptr;
  Eigen::Index n_ = 0;
  RowMajorMatrix row_corr_;
  Vector box_corr_;
  std::vector<Vector> corr_;
};

}  // namespace detail

/// Inexact projection of v onto `set` relative to the feasible point u.
///
/// Runs Dykstra cycles and stops at the first cycle l whose feasible
/// candidate w_l satisfies
///   ||w_l - v||^2 - ||u - v||^2 < zeta (c_l - ||u - v||^2),
/// which together with c_l <= ||P_C(v) - v||^2 certifies
///   ||w_l - v||^2 <= zeta ||P_C(v) - v||^2 + (1 - zeta) ||u - v||^2.
/// Throws NoCertificate (carrying the best iterate and the last cycle
/// movement) when max_cycles is exhausted, or earlier, flagged as stalled,
/// once a whole cycle moves the iterate by at most stall_movement.
inline ProjectionResult dykstra_project(const FeasibleSet& set, const Vector& v,
                                        const Vector& u, double zeta,
                                        const ScalingMatrix& d,
                                        int max_cycles,
                                        double stall_movement = 1e-12) {
  if (!d.is_identity()) {
    throw UnsupportedConfiguration(
        "dykstra_project: only the identity scaling is supported");
  }
  if (!(zeta > 0.0 && zeta <= 1.0)) {
    throw InputError("dykstra_project: zeta must lie in (0, 1]");
  }
  require_same_size(v, u, "dykstra_project");
  if (v.size() != dimension(set)) {
    throw InputError("dykstra_project: dimension mismatch with the set");
  }

  const double du2 = (u - v).squaredNorm();
  if (feasibility_violation(set, v) <= kFeasibilityTol) {
    PTypeCertificate cert{zeta, 0.0, 0.0, (1.0 - zeta) * du2};
    return {v, {cert, {}}};
  }

  detail::DykstraState state(set, v);
  ProjectionWork work;
  double previous_bound = 0.0;
  int decreases = 0;
  double movement = kInf;
  for (int cycle = 1; cycle <= max_cycles; ++cycle) {
    movement = state.cycle();
    work.cycles = cycle;
    const double c = state.lower_bound();
    if (c < previous_bound) ++decreases;
    previous_bound = c;
    const auto w = state.candidate();
    if (w) {
      const double dw2 = (*w - v).squaredNorm();
      if (dw2 - du2 < zeta * (c - du2)) {
        PTypeCertificate cert{zeta, c, dw2, zeta * c + (1.0 - zeta) * du2,
                              false, decreases};
        return {*w, {cert, work}};
      }
    }
    if (movement <= stall_movement) {
      throw NoCertificate("dykstra_project: iterate stalled", w ? *w : state.x(),
                          movement, std::numeric_limits<double>::quiet_NaN(),
                          work, true);
    }
  }
  const auto w = state.candidate();
  throw NoCertificate("dykstra_project: cycle budget exhausted",
                      w ? *w : state.x(), movement,
                      std::numeric_limits<double>::quiet_NaN(), work);
}

/// High-accuracy projection: Dykstra run until the cycle movement drops to
/// movement_tol. Returns the final iterate (feasible up to that accuracy).
inline Vector dykstra_exact(const FeasibleSet& set, const Vector& v,
                            double movement_tol = 1e-12,
                            int max_cycles = 1000000) {
  if (feasibility_violation(set, v) <= kFeasibilityTol) return v;
  detail::DykstraState state(set, v);
  for (int cycle = 1; cycle <= max_cycles; ++cycle) {
    if (state.cycle() <= movement_tol) return state.x();
  }
  throw NumericalError("dykstra_exact: movement tolerance not reached",
                       max_cycles);
}

}  // namespace inexproj

#endif  // INEXPROJ_DYKSTRA_HPP_
