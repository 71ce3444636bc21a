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

#ifndef INEXPROJ_CORE_MODEL_HPP_
#define INEXPROJ_CORE_MODEL_HPP_

#include <functional>
#include <optional>
#include <string>

#include "inexproj/common.hpp"
#include "inexproj/feasible_set.hpp"

namespace inexproj {

/// A smooth objective over R^n (or R^{n x n}, flattened) together with its
/// feasible set. Instances are immutable after construction.
struct ProblemInstance {
  std::string name;
  // Intrinsic side: vector length for vector problems, matrix side otherwise.
  Eigen::Index n = 0;
  std::function<double(const Vector&)> objective;
  std::function<Vector(const Vector&)> gradient;
  FeasibleSet feasible_set;
  std::optional<double> f_star;
  // Known minimizer, used only by bound checkers.
  std::optional<Vector> x_star;

  Eigen::Index ambient_dimension() const { return dimension(feasible_set); }
};

/// f(X) = 1/2 ||AX - B||_F^2
///        + sum_{i<n} [ c (X_{i+1,i+1} - X_ii^2)^2 + (1 - X_ii)^2 ].
struct MatrixLSRosenbrock {
  Matrix A;
  Matrix B;
  double c = 0.0;

  Eigen::Index n() const { return A.cols(); }
};

inline void validate(const MatrixLSRosenbrock& p) {
  if (p.A.rows() != p.B.rows() || p.A.cols() != p.B.cols()) {
    throw InputError("MatrixLSRosenbrock: A and B must have the same shape");
  }
  if (p.A.rows() < p.A.cols()) {
    throw InputError("MatrixLSRosenbrock: requires m >= n");
  }
  if (!(p.c >= 0.0)) {
    throw InputError("MatrixLSRosenbrock: coupling c must be nonnegative");
  }
}

namespace detail {
inline void check_point(const MatrixLSRosenbrock& p, const Vector& x,
                        const char* where) {
  if (p.A.rows() != p.B.rows() || p.A.cols() != p.B.cols() ||
      x.size() != p.n() * p.n()) {
    throw InputError(std::string(where) + ": dimension mismatch between A, B, X");
  }
}
}  // namespace detail

inline double eval_objective(const MatrixLSRosenbrock& p, const Vector& x) {
  detail::check_point(p, x, "eval_objective");
  const auto n = p.n();
  const auto xm = as_matrix(x, n);
  const Matrix residual = p.A * xm - p.B;
  double value = 0.5 * residual.squaredNorm();
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double coupling = xm(i + 1, i + 1) - xm(i, i) * xm(i, i);
    const double pull = 1.0 - xm(i, i);
    value += p.c * coupling * coupling + pull * pull;
  }
  return value;
}

inline Vector eval_gradient(const MatrixLSRosenbrock& p, const Vector& x) {
  detail::check_point(p, x, "eval_gradient");
  const auto n = p.n();
  const auto xm = as_matrix(x, n);
  RowMajorMatrix g = p.A.transpose() * (p.A * xm - p.B);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double coupling = xm(i + 1, i + 1) - xm(i, i) * xm(i, i);
    g(i, i) += -4.0 * p.c * xm(i, i) * coupling - 2.0 * (1.0 - xm(i, i));
    g(i + 1, i + 1) += 2.0 * p.c * coupling;
  }
  return flatten(g);
}

/// f(x) = 1/2 ||Ax - b||^2 over vectors.
struct LeastSquares {
  Matrix A;
  Vector b;
};

inline double eval_objective(const LeastSquares& p, const Vector& x) {
  if (x.size() != p.A.cols() || p.b.size() != p.A.rows()) {
    throw InputError("eval_objective: dimension mismatch");
  }
  return 0.5 * (p.A * x - p.b).squaredNorm();
}

inline Vector eval_gradient(const LeastSquares& p, const Vector& x) {
  if (x.size() != p.A.cols() || p.b.size() != p.A.rows()) {
    throw InputError("eval_gradient: dimension mismatch");
  }
  return p.A.transpose() * (p.A * x - p.b);
}

/// f(x) = 1/2 (x - center)^T H (x - center).
struct Quadratic {
  Matrix hessian;
  Vector center;
};

inline double eval_objective(const Quadratic& q, const Vector& x) {
  require_same_size(x, q.center, "eval_objective");
  const Vector d = x - q.center;
  return 0.5 * d.dot(q.hessian * d);
}

inline Vector eval_gradient(const Quadratic& q, const Vector& x) {
  require_same_size(x, q.center, "eval_gradient");
  return q.hessian * (x - q.center);
}

/// Wraps any model with eval_objective / eval_gradient overloads.
template <typename Model>
ProblemInstance make_problem(std::string name, Model model, Eigen::Index n,
                             FeasibleSet set,
                             std::optional<double> f_star = std::nullopt,
                             std::optional<Vector> x_star = std::nullopt) {
  ProblemInstance p;
  p.name = std::move(name);
  p.n = n;
  p.objective = [model](const Vector& x) { return eval_objective(model, x); };
  p.gradient = [model](const Vector& x) { return eval_gradient(model, x); };
  p.feasible_set = std::move(set);
  p.f_star = f_star;
  p.x_star = std::move(x_star);
  return p;
}

/// Max over coordinates of |analytic - central difference| / (1 + |analytic|).
/// A nonpositive h selects the default step 1e-5 (1 + ||x||).
inline double gradient_fd_check(const ProblemInstance& p, const Vector& x,
                                double h = 0.0) {
  if (h <= 0.0) h = 1e-5 * (1.0 + x.norm());
  const Vector g = p.gradient(x);
  require_same_size(g, x, "gradient_fd_check");
  Vector probe = x;
  double worst = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = p.objective(probe);
    probe[i] = x[i] - h;
    const double down = p.objective(probe);
    probe[i] = x[i];
    const double fd = (up - down) / (2.0 * h);
    worst = std::max(worst, std::abs(g[i] - fd) / (1.0 + std::abs(g[i])));
  }
  return worst;
}

namespace detail {

// Largest eigenvalue of A^T A by power iteration; stops when the relative
// eigen-residual drops below rel_tol.
inline double power_iteration_gram(const Matrix& a, double rel_tol) {
  const auto n = a.cols();
  if (n == 0) return 0.0;
  Vector q(n);
  for (Eigen::Index i = 0; i < n; ++i) q[i] = 1.0 + 1e-3 * double(i + 1);
  q.normalize();
  double lambda = 0.0;
  constexpr int kMaxIter = 1000000;
  for (int it = 0; it < kMaxIter; ++it) {
    const Vector aq = a.transpose() * (a * q);
    lambda = q.dot(aq);
    if (lambda <= 0.0) return 0.0;
    const double residual = (aq - lambda * q).norm();
    if (residual <= rel_tol * lambda) return lambda;
    q = aq / aq.norm();
  }
  throw NumericalError("power iteration did not converge", kMaxIter);
}

}  // namespace detail

/// sigma_max(A)^2, the Lipschitz constant of the least-squares part's
/// gradient. Only defined when c = 0; with c > 0 the coupling term has no
/// global Lipschitz gradient. For n >= 2 the diagonal (1 - X_ii)^2 pull adds
/// at most 2 on top of this value.
inline double estimate_lipschitz_ls(const MatrixLSRosenbrock& p) {
  if (p.c != 0.0) {
    throw UnsupportedConfiguration(
        "estimate_lipschitz_ls: requires c = 0 (the coupling term has no "
        "global Lipschitz gradient)");
  }
  return detail::power_iteration_gram(p.A, 1e-10);
}

inline double estimate_lipschitz_ls(const LeastSquares& p) {
  return detail::power_iteration_gram(p.A, 1e-10);
}

}  // namespace inexproj

#endif  // INEXPROJ_CORE_MODEL_HPP_
