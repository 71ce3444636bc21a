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

#include <gtest/gtest.h>

#include <inexproj.hpp>

#include "oracles.hpp"

namespace inexproj {
namespace {

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// Quadratic form by explicit double loop.
double quad_form(const Matrix& d, const Vector& a, const Vector& b) {
  double s = 0.0;
  for (long i = 0; i < d.rows(); ++i)
    for (long j = 0; j < d.cols(); ++j) s += a[i] * d(i, j) * b[j];
  return s;
}

TEST(DNorm, Identity) {
  EXPECT_DOUBLE_EQ(d_norm(ScalingMatrix::identity(), Vector::Map(std::vector<double>{3, 4}.data(), 2)), 5.0);
}

TEST(DNorm, Diagonal) {
  const auto d = clip_to_Dmu(diag2(4.0, 1.0), 4.0);
  EXPECT_NEAR(d_norm(d, Vector::Unit(2, 0)), 2.0, 1e-14);
}

TEST(DNorm, MatchesQuadraticForm) {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = rng.spd(5, 0.5, 2.0);
    const auto d = clip_to_Dmu(m, 2.0);
    const Vector x = rng.vec(5);
    EXPECT_NEAR(d_norm(d, x), std::sqrt(quad_form(m, x, x)), 1e-12);
  }
}

TEST(DInner, Examples) {
  const Vector ones = Vector::Ones(2);
  EXPECT_DOUBLE_EQ(d_inner(ScalingMatrix::identity(), ones, ones), 2.0);
  const auto d = clip_to_Dmu(diag2(2.0, 3.0), 3.0);
  EXPECT_NEAR(d_inner(d, Vector::Unit(2, 0), Vector::Unit(2, 1)), 0.0, 1e-15);
}

TEST(DInner, SymmetricAndMatchesDense) {
  oracle::Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = rng.spd(6, 0.25, 4.0);
    const auto d = clip_to_Dmu(m, 4.0);
    const Vector a = rng.vec(6), b = rng.vec(6);
    EXPECT_NEAR(d_inner(d, a, b), d_inner(d, b, a), 1e-12);
    EXPECT_NEAR(d_inner(d, a, b), quad_form(m, a, b), 1e-12);
  }
}

TEST(DInner, RejectsDimensionMismatch) {
  const auto d = clip_to_Dmu(diag2(2.0, 3.0), 3.0);
  EXPECT_THROW(d_inner(d, Vector::Ones(2), Vector::Ones(3)), InputError);
  EXPECT_THROW(d_norm(d, Vector::Ones(3)), InputError);
  EXPECT_THROW(apply_inverse(d, Vector::Ones(3)), InputError);
}

TEST(ApplyInverse, Identity) {
  const Vector g = Vector::LinSpaced(4, -1.0, 2.0);
  EXPECT_EQ(apply_inverse(ScalingMatrix::identity(), g), g);
}

TEST(ApplyInverse, Diagonal) {
  const auto d = clip_to_Dmu(diag2(2.0, 4.0), 4.0);
  Vector g(2);
  g << 2.0, 4.0;
  EXPECT_LE((apply_inverse(d, g) - Vector::Ones(2)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ApplyInverse, TwoSidedResidual) {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = clip_to_Dmu(rng.spd(7, 0.2, 5.0), 5.0);
    const Vector g = rng.vec(7);
    EXPECT_LE((d.apply(apply_inverse(d, g)) - g).norm(), 1e-10);
    EXPECT_LE((apply_inverse(d, d.apply(g)) - g).norm(), 1e-10);
  }
}

TEST(Clip, IdentityUnchanged) {
  const auto d = clip_to_Dmu(Matrix::Identity(3, 3), 2.0);
  EXPECT_LE((d.dense() - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Clip, ClampsEndpoints) {
  const auto d = clip_to_Dmu(diag2(10.0, 0.01), 2.0);
  EXPECT_LE((d.dense() - diag2(2.0, 0.5)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Clip, SpectrumInRangeByJacobi) {
  oracle::Rng rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const double mu = rng.uniform(1.0, 10.0);
    const auto d = clip_to_Dmu(rng.symmetric(6, 20.0), mu);
    EXPECT_LE((d.dense() - d.dense().transpose()).cwiseAbs().maxCoeff(), 1e-12);
    const Vector ev = oracle::jacobi_eigenvalues(d.dense());
    EXPECT_GE(ev.minCoeff(), 1.0 / mu - 1e-10);
    EXPECT_LE(ev.maxCoeff(), mu + 1e-10);
  }
}

TEST(Clip, RejectsAsymmetricOrBadMu) {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(clip_to_Dmu(m, 2.0), InputError);
  EXPECT_THROW(clip_to_Dmu(Matrix::Identity(2, 2), 0.5), InputError);
  EXPECT_THROW(ScalingMatrix::identity(0.9), InputError);
}

TEST(Clip, InverseStaysInClass) {
  oracle::Rng rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    const double mu = 3.0;
    const auto d = clip_to_Dmu(rng.spd(5, 1.0 / mu, mu), mu);
    const Matrix inv = d.dense().inverse();
    const auto again = clip_to_Dmu(inv, mu);
    EXPECT_LE((again.dense() - inv).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(NormEquivalence, HoldsForConstructedScalings) {
  oracle::Rng rng(26);
  for (int trial = 0; trial < 10; ++trial) {
    const double mu = rng.uniform(1.0, 8.0);
    const auto d = clip_to_Dmu(rng.symmetric(5, 10.0), mu);
    for (int k = 0; k < 100; ++k) {
      const Vector x = rng.vec(5);
      const double n2 = x.squaredNorm(), dn = d_norm(d, x);
      EXPECT_GE(dn * dn, n2 / mu - 1e-9);
      EXPECT_LE(dn * dn, mu * n2 + 1e-9);
    }
  }
}

}  // namespace
}  // namespace inexproj
