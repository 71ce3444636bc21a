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

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

// Nonnegative SDD point: symmetric with a dominant diagonal.
Vector sdd_point(oracle::Rng& rng, long n) {
  Matrix x = rng.mat(n, n, 0.0, 1.0);
  x = (0.5 * (x + x.transpose())).eval();
  for (long i = 0; i < n; ++i) x(i, i) = x.row(i).sum() - x(i, i) + rng.uniform(0.0, 1.0);
  return oracle::Rng::flatten(x);
}

HalfspaceIntersection positive_quadrant() {
  return HalfspaceIntersection{{Halfspace{vec({-1, 0}), 0.0}, Halfspace{vec({0, -1}), 0.0}}};
}

TEST(Dykstra, FeasibleInputReturnedAtOnce) {
  oracle::Rng rng(41);
  const auto set = make_sdd_nonnegative(4);
  const Vector v = sdd_point(rng, 4);
  const auto r = dykstra_project(set, v, v, 0.8, ScalingMatrix::identity(), 100);
  EXPECT_EQ(r.w, v);
  EXPECT_EQ(r.certificate.work.cycles, 0);
  EXPECT_EQ(r.certificate.ptype().c_lower, 0.0);
  EXPECT_EQ(r.certificate.ptype().lhs, 0.0);
}

TEST(Dykstra, OrthogonalHalfspaces) {
  const FeasibleSet set = positive_quadrant();
  const Vector v = vec({-1, -2}), u = vec({1, 1});
  const auto r = dykstra_project(set, v, u, 0.8, ScalingMatrix::identity(), 100);
  EXPECT_TRUE(verify_p_certificate(set, r.w, v, u, 0.8, ScalingMatrix::identity(),
                                   Vector::Zero(2)));
}

TEST(Dykstra, ProblemOneCertificateAgainstHighAccuracyOracle) {
  oracle::Rng rng(42);
  const auto set = make_sdd_nonnegative(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector u = sdd_point(rng, 5);
    const Vector v = u + oracle::Rng::flatten(rng.mat(5, 5, -2.0, 2.0));
    const auto r = dykstra_project(set, v, u, 0.8, ScalingMatrix::identity(), 100000);
    const auto& c = r.certificate.ptype();
    EXPECT_LE(c.lhs, c.rhs + 1e-10);
    EXPECT_NEAR(c.lhs, (r.w - v).squaredNorm(), 1e-12 * std::max(1.0, c.lhs));
    const Vector p = dykstra_exact(set, v, 1e-12);
    EXPECT_LE(c.c_lower, (p - v).squaredNorm() + 1e-9);
    EXPECT_TRUE(verify_p_certificate(set, r.w, v, u, 0.8, ScalingMatrix::identity(), p));
  }
}

TEST(Dykstra, CertificateWithBoxBounds) {
  oracle::Rng rng(43);
  const long n = 3;
  const auto set = make_sdd_plus_box(n, Vector::Constant(n * n, -0.5), Vector::Constant(n * n, 2.0));
  for (int trial = 0; trial < 10; ++trial) {
    const Vector u = oracle::Rng::flatten(Matrix::Identity(n, n));
    const Vector v = oracle::Rng::flatten(rng.mat(n, n, -3.0, 3.0));
    const auto r = dykstra_project(set, v, u, 0.5, ScalingMatrix::identity(), 100000);
    const Vector p = dykstra_exact(set, v, 1e-13);
    EXPECT_LE(r.certificate.ptype().c_lower, (p - v).squaredNorm() + 1e-9);
    EXPECT_TRUE(verify_p_certificate(set, r.w, v, u, 0.5, ScalingMatrix::identity(), p));
  }
}

TEST(Dykstra, ZetaOneGivesNearExactPoint) {
  oracle::Rng rng(44);
  const auto set = make_sdd_nonnegative(3);
  const Vector u = sdd_point(rng, 3);
  const Vector v = u + oracle::Rng::flatten(rng.mat(3, 3, -1.0, 1.0));
  try {
    const auto r = dykstra_project(set, v, u, 1.0, ScalingMatrix::identity(), 100000);
    const Vector p = dykstra_exact(set, v);
    EXPECT_LE((r.w - p).norm(), 1e-5);
  } catch (const NoCertificate& e) {
    EXPECT_TRUE(e.stalled());
    EXPECT_LE(e.movement(), 1e-12);
  }
}

TEST(Dykstra, BudgetExhaustionCarriesBestIterate) {
  oracle::Rng rng(45);
  const auto set = make_sdd_nonnegative(6);
  const Vector u = sdd_point(rng, 6);
  const Vector v = oracle::Rng::flatten(rng.mat(6, 6, -5.0, 5.0));
  try {
    dykstra_project(set, v, u, 0.999, ScalingMatrix::identity(), 1);
    SUCCEED();  // a single cycle may already certify
  } catch (const NoCertificate& e) {
    EXPECT_EQ(e.best().size(), 36);
    EXPECT_EQ(e.work().cycles, 1);
    EXPECT_FALSE(e.stalled());
  }
}

TEST(Dykstra, RejectsBadArguments) {
  const auto set = make_sdd_nonnegative(2);
  const Vector v = Vector::Zero(4);
  EXPECT_THROW(dykstra_project(set, v, v, 0.0, ScalingMatrix::identity(), 10), InputError);
  EXPECT_THROW(dykstra_project(set, Vector::Zero(3), Vector::Zero(3), 0.5,
                               ScalingMatrix::identity(), 10),
               InputError);
  const auto d = clip_to_Dmu(2.0 * Matrix::Identity(4, 4), 2.0);
  EXPECT_THROW(dykstra_project(set, v, v, 0.5, d, 10), UnsupportedConfiguration);
  EXPECT_THROW(dykstra_project(Simplex{4}, vec({2, 0, 0, 0}), vec({1, 0, 0, 0}), 0.5,
                               ScalingMatrix::identity(), 10),
               UnsupportedConfiguration);
}

TEST(LowerBound, FeasibleZeroCorrections) {
  const FeasibleSet set = positive_quadrant();
  const std::vector<Vector> corr(2, Vector::Zero(2));
  EXPECT_EQ(dykstra_lower_bound(set, vec({1, 2}), corr), 0.0);
}

TEST(LowerBound, SingleHalfspace) {
  const FeasibleSet set = HalfspaceIntersection{{Halfspace{vec({-1, 0}), 0.0}}};
  const Vector v = vec({-2, 1});
  detail::DykstraState state(set, v);
  EXPECT_EQ(state.cycle(), 2.0);
  EXPECT_EQ(state.x(), vec({0, 1}));
  EXPECT_DOUBLE_EQ(state.lower_bound(), 4.0);
  const std::vector<Vector> corr{vec({-2, 0})};
  EXPECT_DOUBLE_EQ(dykstra_lower_bound(set, v, corr), 4.0);
}

TEST(LowerBound, NeverExceedsDistanceOnProblemOneSets) {
  oracle::Rng rng(46);
  const auto set = make_sdd_nonnegative(5);
  int decreases = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Vector v = oracle::Rng::flatten(rng.mat(5, 5, -2.0, 2.0));
    const double dist = (dykstra_exact(set, v, 1e-13) - v).squaredNorm();
    detail::DykstraState state(set, v);
    double previous = 0.0;
    for (int cycle = 0; cycle < 200; ++cycle) {
      state.cycle();
      const double c = state.lower_bound();
      EXPECT_LE(c, dist + 1e-9);
      if (c < previous - 1e-12) ++decreases;
      previous = c;
    }
  }
  // Monotonicity is not required; record the count for visibility.
  RecordProperty("lower_bound_decreases", decreases);
}

TEST(LowerBound, UnboundedSupportRejected) {
  const FeasibleSet set = make_box(Vector::Zero(2), Vector::Constant(2, kInf));
  const std::vector<Vector> corr{vec({1.0, 0.0})};
  EXPECT_THROW(dykstra_lower_bound(set, vec({2, 0}), corr), UnsupportedConfiguration);
}

TEST(DykstraExact, MatchesClosedFormOnBox) {
  oracle::Rng rng(47);
  const Vector lo = Vector::Constant(4, -1.0), hi = Vector::Constant(4, 1.0);
  const FeasibleSet set = make_box(lo, hi);
  for (int trial = 0; trial < 10; ++trial) {
    const Vector v = rng.vec(4, -3.0, 3.0);
    EXPECT_LE((dykstra_exact(set, v) - exact_project_box(v, lo, hi)).norm(), 1e-12);
  }
}

}  // namespace
}  // namespace inexproj
