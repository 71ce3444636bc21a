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

#ifndef INEXPROJ_FEASIBLE_SET_HPP_
#define INEXPROJ_FEASIBLE_SET_HPP_

#include <Eigen/Eigenvalues>
#include <numeric>
#include <variant>
#include <vector>

#include "inexproj/common.hpp"

namespace inexproj {

// Componentwise bounds; entries may be -inf / +inf.
struct Box {
  Vector lower;
  Vector upper;
};

// Unit simplex {x >= 0, sum x = 1}.
struct Simplex {
  Eigen::Index dim = 0;
};

// {X symmetric PSD, tr X = 1}, points flattened row-major.
struct Spectrahedron {
  Eigen::Index n = 0;
};

// Symmetric diagonally dominant matrices with nonnegative diagonal
// intersected with elementwise bounds (flattened n*n).
struct SddPlusBox {
  Eigen::Index n = 0;
  Vector lower;
  Vector upper;
};

// {x : <normal, x> <= offset}
struct Halfspace {
  Vector normal;
  double offset = 0.0;
};

struct HalfspaceIntersection {
  std::vector<Halfspace> halfspaces;
};

using FeasibleSet =
    std::variant<Box, Simplex, Spectrahedron, SddPlusBox, HalfspaceIntersection>;

inline Box make_box(Vector lower, Vector upper) {
  require_same_size(lower, upper, "Box");
  for (Eigen::Index i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) {
      throw InputError("Box: lower bound exceeds upper bound at index " +
                       std::to_string(i));
    }
  }
  return Box{std::move(lower), std::move(upper)};
}

inline SddPlusBox make_sdd_plus_box(Eigen::Index n, Vector lower,
                                    Vector upper) {
  if (lower.size() != n * n || upper.size() != n * n) {
    throw InputError("SddPlusBox: bounds must have n*n entries");
  }
  Box b = make_box(std::move(lower), std::move(upper));
  return SddPlusBox{n, std::move(b.lower), std::move(b.upper)};
}

// Problem I geometry: L = 0, U = +inf.
inline SddPlusBox make_sdd_nonnegative(Eigen::Index n) {
  return SddPlusBox{n, Vector::Zero(n * n), Vector::Constant(n * n, kInf)};
}

inline Eigen::Index dimension(const FeasibleSet& set) {
  struct {
    Eigen::Index operator()(const Box& b) const { return b.lower.size(); }
    Eigen::Index operator()(const Simplex& s) const { return s.dim; }
    Eigen::Index operator()(const Spectrahedron& s) const { return s.n * s.n; }
    Eigen::Index operator()(const SddPlusBox& s) const { return s.n * s.n; }
    Eigen::Index operator()(const HalfspaceIntersection& h) const {
      return h.halfspaces.empty() ? 0 : h.halfspaces.front().normal.size();
    }
  } visitor;
  return std::visit(visitor, set);
}

inline bool is_compact(const FeasibleSet& set) {
  if (const auto* b = std::get_if<Box>(&set)) {
    return b->lower.allFinite() && b->upper.allFinite();
  }
  return std::holds_alternative<Simplex>(set) ||
         std::holds_alternative<Spectrahedron>(set);
}

// ---------------------------------------------------------------------------
// Exact projections
// ---------------------------------------------------------------------------

inline Vector exact_project_box(const Vector& v, const Vector& lower,
                                const Vector& upper) {
  require_same_size(v, lower, "exact_project_box");
  require_same_size(v, upper, "exact_project_box");
  Vector w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (lower[i] > upper[i]) {
      throw InputError("exact_project_box: lower bound exceeds upper bound");
    }
    w[i] = std::min(std::max(v[i], lower[i]), upper[i]);
  }
  return w;
}

/// Euclidean projection onto the unit simplex by sort-and-threshold.
inline Vector project_simplex(const Vector& v) {
  if (v.size() == 0) throw InputError("project_simplex: empty vector");
  std::vector<double> sorted(v.data(), v.data() + v.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / double(k + 1);
    if (sorted[k] - candidate > 0.0) theta = candidate;
  }
  Vector w = (v.array() - theta).cwiseMax(0.0);
  // Renormalize the rounding residue onto the support.
  const double total = w.sum();
  if (total > 0.0) w /= total;
  return w;
}

/// Spectral projection onto {X PSD, tr X = 1}: symmetrize, project the
/// eigenvalues onto the simplex and reassemble.
inline Vector exact_project_spectrahedron(const Vector& v) {
  const auto n = square_side(v.size(), "exact_project_spectrahedron");
  const auto m = as_matrix(v, n);
  Matrix s = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("exact_project_spectrahedron: eigensolver failed",
                         int(n));
  }
  const Vector lambda = project_simplex(eig.eigenvalues());
  Matrix w =
      eig.eigenvectors() * lambda.asDiagonal() * eig.eigenvectors().transpose();
  RowMajorMatrix ws = 0.5 * (w + w.transpose());
  return flatten(ws);
}

namespace detail {

// Solves min (t - a)^2 + 2 sum_j (x_j - s_j)^2  s.t.  sum_j |x_j| <= t.
// Stationarity gives t = a + lam, x_j = soft(s_j, lam/2) with lam >= 0 the
// root of  sum_j max(|s_j| - lam/2, 0) = a + lam.
inline double sdd_row_multiplier(double a, const std::vector<double>& abs_s) {
  double total = std::accumulate(abs_s.begin(), abs_s.end(), 0.0);
  if (total <= a) return 0.0;
  std::vector<double> sorted = abs_s;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double partial = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    partial += sorted[k];
    const double active = double(k + 1);
    const double lam = (partial - a) / (1.0 + 0.5 * active);
    const double next = k + 1 < sorted.size() ? sorted[k + 1] : 0.0;
    if (sorted[k] > 0.5 * lam && 0.5 * lam >= next && lam >= 0.0) return lam;
  }
  // Empty active set: the projection is the apex, t = 0.
  return std::max(0.0, -a);
}

}  // namespace detail

/// Frobenius projection of a symmetric matrix onto
/// SDD+_i = {X = X^T : X_ii >= sum_{j != i} |X_ij|}. Only row/column i move.
inline Vector exact_project_sdd_row(const Vector& v, Eigen::Index i) {
  const auto n = square_side(v.size(), "exact_project_sdd_row");
  if (i < 0 || i >= n) throw InputError("exact_project_sdd_row: bad row index");
  const auto m = as_matrix(v, n);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InputError("exact_project_sdd_row: input is not symmetric");
  }
  const double a = m(i, i);
  std::vector<double> abs_s;
  abs_s.reserve(std::size_t(n));
  double off_sum = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j == i) continue;
    abs_s.push_back(std::abs(m(i, j)));
    off_sum += abs_s.back();
  }
  Vector w = v;
  if (off_sum <= a) return w;
  const double lam = detail::sdd_row_multiplier(a, abs_s);
  auto wm = as_matrix(w, n);
  wm(i, i) = a + lam;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j == i) continue;
    const double s = m(i, j);
    const double x = std::copysign(std::max(std::abs(s) - 0.5 * lam, 0.0), s);
    wm(i, j) = x;
    wm(j, i) = x;
  }
  return w;
}

inline Vector project_halfspace(const Vector& v, const Halfspace& h) {
  require_same_size(v, h.normal, "project_halfspace");
  const double excess = h.normal.dot(v) - h.offset;
  if (excess <= 0.0) return v;
  return v - (excess / h.normal.squaredNorm()) * h.normal;
}

// ---------------------------------------------------------------------------
// Feasibility
// ---------------------------------------------------------------------------

inline double box_violation(const Vector& x, const Vector& lower,
                            const Vector& upper) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    worst = std::max({worst, lower[i] - x[i], x[i] - upper[i]});
  }
  return worst;
}

/// Largest constraint violation of x (0 when feasible).
inline double feasibility_violation(const FeasibleSet& set, const Vector& x) {
  if (x.size() != dimension(set)) {
    throw InputError("feasibility_violation: dimension mismatch");
  }
  struct {
    const Vector& x;
    double operator()(const Box& b) const {
      return box_violation(x, b.lower, b.upper);
    }
    double operator()(const Simplex&) const {
      return std::max(-x.minCoeff(), std::abs(x.sum() - 1.0));
    }
    double operator()(const Spectrahedron& s) const {
      const auto m = as_matrix(x, s.n);
      const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
      Eigen::SelfAdjointEigenSolver<Matrix> eig(
          Matrix(0.5 * (m + m.transpose())), Eigen::EigenvaluesOnly);
      return std::max({asym, -eig.eigenvalues().minCoeff(),
                       std::abs(m.trace() - 1.0)});
    }
    double operator()(const SddPlusBox& s) const {
      const auto m = as_matrix(x, s.n);
      double worst = (m - m.transpose()).cwiseAbs().maxCoeff();
      for (Eigen::Index i = 0; i < s.n; ++i) {
        const double off = m.row(i).cwiseAbs().sum() - std::abs(m(i, i));
        worst = std::max(worst, off - m(i, i));
      }
      return std::max(worst, box_violation(x, s.lower, s.upper));
    }
    double operator()(const HalfspaceIntersection& h) const {
      double worst = 0.0;
      for (const auto& hs : h.halfspaces) {
        worst = std::max(worst, hs.normal.dot(x) - hs.offset);
      }
      return worst;
    }
  } visitor{x};
  return std::max(0.0, std::visit(visitor, set));
}

inline bool is_feasible(const FeasibleSet& set, const Vector& x,
                        double tol = 1e-10) {
  return feasibility_violation(set, x) <= tol;
}

}  // namespace inexproj

#endif  // INEXPROJ_FEASIBLE_SET_HPP_
