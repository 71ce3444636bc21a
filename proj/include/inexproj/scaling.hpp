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

#ifndef INEXPROJ_SCALING_HPP_
#define INEXPROJ_SCALING_HPP_

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <optional>

#include "inexproj/common.hpp"

namespace inexproj {

/// A scaling matrix D from the class of symmetric positive definite matrices
/// whose spectrum lies in [1/mu, mu]. The identity is represented without
/// storage and every operation on it reduces to the Euclidean one.
class ScalingMatrix {
 public:
  static ScalingMatrix identity(double mu = 1.0) {
    if (!(mu >= 1.0)) throw InputError("ScalingMatrix: mu must be >= 1");
    return ScalingMatrix(mu);
  }

  /// Eigendecomposes the symmetric matrix m, clamps each eigenvalue into
  /// [1/mu, mu] and reassembles.
  static ScalingMatrix clip_to_Dmu(const Matrix& m, double mu) {
    if (!(mu >= 1.0)) throw InputError("clip_to_Dmu: mu must be >= 1");
    if (m.rows() != m.cols()) throw InputError("clip_to_Dmu: matrix not square");
    const double asym = (m - m.transpose()).norm();
    if (asym > 1e-10 * m.norm()) {
      throw InputError("clip_to_Dmu: input is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (m + m.transpose()));
    if (eig.info() != Eigen::Success) {
      throw NumericalError("clip_to_Dmu: eigensolver failed", 0);
    }
    Vector lambda = eig.eigenvalues().cwiseMax(1.0 / mu).cwiseMin(mu);
    Matrix d = eig.eigenvectors() * lambda.asDiagonal() *
               eig.eigenvectors().transpose();
    d = (0.5 * (d + d.transpose())).eval();
    return ScalingMatrix(mu, std::move(d));
  }

  bool is_identity() const { return !dense_.has_value(); }
  double mu() const { return mu_; }
  const Matrix& dense() const { return *dense_; }

  Vector apply(const Vector& x) const {
    if (is_identity()) return x;
    check_dim(x, "ScalingMatrix::apply");
    return *dense_ * x;
  }

  /// D^{-1} g; Cholesky of a D_mu member cannot fail unless the invariant
  /// was broken.
  Vector apply_inverse(const Vector& g) const {
    if (is_identity()) return g;
    check_dim(g, "ScalingMatrix::apply_inverse");
    if (chol_.info() != Eigen::Success) {
      throw NumericalError(
          "ScalingMatrix::apply_inverse: internal invariant violation, "
          "Cholesky factorization failed",
          0);
    }
    return chol_.solve(g);
  }

  double inner(const Vector& a, const Vector& b) const {
    require_same_size(a, b, "d_inner");
    if (is_identity()) return a.dot(b);
    check_dim(a, "d_inner");
    return (*dense_ * a).dot(b);
  }

  double squared_norm(const Vector& d) const {
    if (is_identity()) return d.squaredNorm();
    return inner(d, d);
  }

  double norm(const Vector& d) const {
    return std::sqrt(std::max(0.0, squared_norm(d)));
  }

 private:
  explicit ScalingMatrix(double mu) : mu_(mu) {}
  ScalingMatrix(double mu, Matrix d)
      : mu_(mu), dense_(std::move(d)), chol_(*dense_) {}

  void check_dim(const Vector& x, const char* where) const {
    if (x.size() != dense_->rows()) {
      throw InputError(std::string(where) + ": dimension mismatch");
    }
  }

  double mu_ = 1.0;
  std::optional<Matrix> dense_;
  Eigen::LLT<Matrix> chol_;
};

inline double d_norm(const ScalingMatrix& d, const Vector& x) {
  return d.norm(x);
}

inline double d_inner(const ScalingMatrix& d, const Vector& a,
                      const Vector& b) {
  return d.inner(a, b);
}

inline Vector apply_inverse(const ScalingMatrix& d, const Vector& g) {
  return d.apply_inverse(g);
}

inline ScalingMatrix clip_to_Dmu(const Matrix& m, double mu) {
  return ScalingMatrix::clip_to_Dmu(m, mu);
}

}  // namespace inexproj

#endif  // INEXPROJ_SCALING_HPP_
