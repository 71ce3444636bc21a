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

#ifndef INEXPROJ_LANCZOS_HPP_
#define INEXPROJ_LANCZOS_HPP_

#include <Eigen/Eigenvalues>

#include "inexproj/common.hpp"

namespace inexproj {

struct Eigenpair {
  double value = 0.0;
  Vector vector;
  int iterations = 0;
};

/// Smallest eigenpair of the symmetric matrix s.
///
/// Runs Lanczos with full reorthogonalization on shift*I - s, where
/// shift = ||s||_1 bounds the spectral radius, so the wanted eigenpair is the
/// dominant one of a positive semidefinite operator. Stops once the Ritz
/// residual ||s q - lambda q|| is below rel_tol * max(1, shift), or when the
/// Krylov space is exhausted. The start vector is fixed, so results are
/// reproducible.
inline Eigenpair smallest_eigenpair(const Matrix& s, double rel_tol = 1e-9) {
  const Eigen::Index n = s.rows();
  if (n == 0 || s.cols() != n) {
    throw InputError("smallest_eigenpair: matrix must be square and nonempty");
  }
  if (n == 1) return Eigenpair{s(0, 0), Vector::Ones(1), 1};

  const double shift = s.cwiseAbs().colwise().sum().maxCoeff();
  const double tol = rel_tol * std::max(1.0, shift);

  Matrix basis(n, n);
  std::vector<double> alpha;
  std::vector<double> beta;
  Vector q(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    q[i] = 1.0 + 0.1 * std::sin(double(i + 1));
  }
  q.normalize();

  Eigenpair best;
  for (Eigen::Index j = 0; j < n; ++j) {
    basis.col(j) = q;
    Vector w = shift * q - s * q;
    const double a = q.dot(w);
    alpha.push_back(a);
    auto span = basis.leftCols(j + 1);
    // Two passes of classical Gram-Schmidt keep the basis orthonormal.
    w -= span * (span.transpose() * w);
    w -= span * (span.transpose() * w);
    const double b = w.norm();

    const auto k = Eigen::Index(alpha.size());
    Vector diag = Eigen::Map<const Vector>(alpha.data(), k);
    Vector sub = k > 1 ? Vector(Eigen::Map<const Vector>(beta.data(), k - 1))
                       : Vector();
    Eigen::SelfAdjointEigenSolver<Matrix> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (tri.info() != Eigen::Success) {
      throw NumericalError("smallest_eigenpair: tridiagonal solve failed",
                           int(k));
    }
    const Vector y = tri.eigenvectors().col(k - 1);
    const double ritz_residual = std::abs(b * y[k - 1]);

    const bool exhausted = (j + 1 == n) || b <= 1e-14 * std::max(1.0, shift);
    if (ritz_residual <= tol || exhausted) {
      Vector v = span * y;
      v.normalize();
      best.vector = v;
      best.value = v.dot(s * v);
      best.iterations = int(k);
      const double residual = (s * v - best.value * v).norm();
      if (residual <= tol || exhausted) return best;
    }
    beta.push_back(b);
    q = w / b;
  }
  throw NumericalError("smallest_eigenpair: Lanczos stagnated", int(n));
}

}  // namespace inexproj

#endif  // INEXPROJ_LANCZOS_HPP_
