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

ProblemInstance shifted_sphere(const Vector& center, FeasibleSet set) {
  const long n = center.size();
  return make_problem("sphere", Quadratic{Matrix::Identity(n, n), center}, n, std::move(set));
}

const std::vector<LineSearchStrategy> kStrategies{Armijo{}, MaxType{5}, AverageType{0.85}};

void expect_run_invariants(const SolveResult& r, const SolverConfig& c, const FeasibleSet& set) {
  ASSERT_FALSE(r.records.empty());
  for (std::size_t k = 0; k < r.records.size(); ++k) {
    const auto& rec = r.records[k];
    EXPECT_EQ(rec.k, static_cast<int>(k));
    EXPECT_GE(rec.alpha, c.alpha_min);
    EXPECT_LE(rec.alpha, c.alpha_max);
    if (rec.tau > 0.0) {
      EXPECT_LE(rec.tau, 1.0);
      EXPECT_LT(rec.slope, 0.0);
    }
    if (k > 0) {
      const auto& prev = r.records[k - 1];
      EXPECT_LE(rec.f + rec.nu, prev.f + prev.nu + 1e-12);
      EXPECT_GE(rec.f_evals, prev.f_evals);
    }
  }
  EXPECT_EQ(r.records.front().f_evals >= 1, true);
  EXPECT_LE(feasibility_violation(set, r.x_final), 1e-8);
  if (r.status == SolveStatus::Converged) {
    EXPECT_LE(r.records.back().stat_measure, c.tol);
  }
}

TEST(BbStep, Examples) {
  const Vector s = vec({1, 2});
  EXPECT_EQ(bb_step(s, s, 1e-10, 1e10), 1.0);
  EXPECT_EQ(bb_step(vec({1, 0}), vec({-1, 0}), 1e-10, 1e10), 1e10);
  EXPECT_EQ(bb_step(s, 1e-20 * s, 1e-10, 1e10), 1e10);
  EXPECT_EQ(bb_step(s, 1e20 * s, 1e-10, 1e10), 1e-10);
}

TEST(BbStep, RayleighRange) {
  oracle::Rng rng(81);
  const Vector h = vec({1, 10});
  for (int i = 0; i < 100; ++i) {
    const Vector s = rng.vec(2);
    const double a = bb_step(s, h.cwiseProduct(s), 1e-10, 1e10);
    EXPECT_GE(a, 0.1 - 1e-15);
    EXPECT_LE(a, 1.0 + 1e-15);
    EXPECT_DOUBLE_EQ(a, s.squaredNorm() / s.dot(h.cwiseProduct(s)));
  }
}

TEST(InitialAlpha, Examples) {
  EXPECT_EQ(initial_alpha(vec({2, 0}), 1e-10, 1e10), 0.5);
  EXPECT_EQ(initial_alpha(vec({1e-20}), 1e-10, 1e10), 1e10);
  EXPECT_EQ(initial_alpha(vec({4}), 1.0, 2.0), 1.0);
  EXPECT_EQ(initial_alpha(vec({0, 0}), 1e-10, 1e10), 1e10);
}

TEST(StationarityMeasure, Examples) {
  EXPECT_EQ(stationarity_measure(vec({1, 2}), vec({1, 2})), 0.0);
  EXPECT_EQ(stationarity_measure(vec({0, 1e-7}), vec({0, 0})), 1e-7);
  oracle::Rng rng(82);
  const Vector a = rng.vec(9), b = rng.vec(9);
  double ref = 0.0;
  for (int i = 0; i < 9; ++i) ref = std::max(ref, std::abs(a[i] - b[i]));
  EXPECT_EQ(stationarity_measure(a, b), ref);
  EXPECT_THROW(stationarity_measure(a, Vector::Zero(3)), InputError);
}

TEST(Config, Validation) {
  SolverConfig c;
  EXPECT_NO_THROW(validate(c));
  auto bad = [](auto mutate) {
    SolverConfig c;
    mutate(c);
    EXPECT_THROW(validate(c), InputError);
  };
  bad([](SolverConfig& c) { c.sigma = 1.0; });
  bad([](SolverConfig& c) { c.omega_lo = 0.95; });
  bad([](SolverConfig& c) { c.alpha_min = 2.0, c.alpha_max = 1.0; });
  bad([](SolverConfig& c) { c.mu = 0.5; });
  bad([](SolverConfig& c) { c.projection = PTypeMode{0.0}; });
  bad([](SolverConfig& c) { c.projection = RTypeMode{0.5}; });
  bad([](SolverConfig& c) { c.tol = 0.0; });
  bad([](SolverConfig& c) { c.max_iter = 0; });
  bad([](SolverConfig& c) { c.strategy = AverageType{1.5}; });
  SolverConfig exact;
  exact.projection = PTypeMode{1.0};
  EXPECT_NO_THROW(validate(exact));
}

TEST(Solve, InteriorMinimizer) {
  const FeasibleSet box = make_box(Vector::Constant(2, -1.0), Vector::Ones(2));
  SolverConfig c;
  const auto r = solve(shifted_sphere(Vector::Zero(2), box), Vector::Ones(2), c);
  EXPECT_EQ(r.status, SolveStatus::Converged);
  EXPECT_LE(r.x_final.norm(), 1e-6);
  EXPECT_LE(r.records.back().stat_measure, 1e-6);
  EXPECT_EQ(r.records.back().tau, 0.0);
}

TEST(Solve, CornerMinimizerAllStrategies) {
  const FeasibleSet box = make_box(Vector::Zero(2), Vector::Ones(2));
  for (const auto& s : kStrategies) {
    SolverConfig c;
    c.strategy = s;
    c.projection = PTypeMode{0.8};
    const auto r = solve(shifted_sphere(vec({2, 2}), box), vec({0.1, 0.7}), c);
    EXPECT_EQ(r.status, SolveStatus::Converged);
    EXPECT_LE((r.x_final - vec({1, 1})).cwiseAbs().maxCoeff(), 1e-6);
    expect_run_invariants(r, c, box);
  }
}

TEST(Solve, ProblemOneConvergesWithLyapunovDecrease) {
  const auto inst = gen_problem1(10, 20, 10.0, 42);
  SolverConfig c;
  c.projection = PTypeMode{0.8};
  c.strategy = Armijo{};
  const auto r = solve(inst.problem, inst.x0, c);
  EXPECT_EQ(r.status, SolveStatus::Converged) << r.message;
  expect_run_invariants(r, c, inst.problem.feasible_set);
  EXPECT_GT(r.total_proj_work(), 0);
}

TEST(Solve, ProblemTwoRTypeCountsEigenpairs) {
  const auto inst = gen_problem2(8, 16, 10.0, 7);
  for (const auto& s : kStrategies) {
    SolverConfig c;
    c.projection = RTypeMode{0.25};
    c.strategy = s;
    const auto r = solve(inst.problem, inst.x0, c);
    EXPECT_EQ(r.status, SolveStatus::Converged) << r.message;
    expect_run_invariants(r, c, inst.problem.feasible_set);
    EXPECT_GT(r.total_eigenpairs(), 0);
  }
}

TEST(Solve, Deterministic) {
  const auto inst = gen_problem1(6, 12, 10.0, 3);
  SolverConfig c;
  c.strategy = MaxType{5};
  const auto a = solve(inst.problem, inst.x0, c);
  const auto b = solve(inst.problem, inst.x0, c);
  EXPECT_EQ(iterations_csv(a.records), iterations_csv(b.records));
  EXPECT_EQ(a.x_final, b.x_final);
}

TEST(Solve, StoppingIsSound) {
  const auto inst = gen_problem2(6, 12, 5.0, 11);
  SolverConfig c;
  c.projection = RTypeMode{0.25};
  const auto r = solve(inst.problem, inst.x0, c);
  ASSERT_EQ(r.status, SolveStatus::Converged);
  const Vector z = r.x_final - r.records.back().alpha * inst.problem.gradient(r.x_final);
  const auto p = project_inexact(inst.problem.feasible_set, z, r.x_final, c.projection,
                                 c.scaling);
  EXPECT_LE(stationarity_measure(r.x_final, p.w), 2.0 * c.tol);
}

TEST(Solve, KeepsTrajectory) {
  const auto inst = gen_boxqp(5, 9);
  SolverConfig c;
  c.keep_trajectory = true;
  const auto r = solve(inst.problem, inst.x0, c);
  EXPECT_EQ(r.w_points.size(), r.records.size());
  EXPECT_EQ(r.iterates.size(), r.records.size());
  EXPECT_EQ(r.iterates.front(), inst.x0);
}

TEST(Solve, MaxIterStatus) {
  const auto inst = gen_problem1(6, 12, 10.0, 5);
  SolverConfig c;
  c.max_iter = 2;
  const auto r = solve(inst.problem, inst.x0, c);
  EXPECT_EQ(r.status, SolveStatus::MaxIter);
  EXPECT_EQ(r.records.size(), 2u);
}

TEST(Solve, ProjectionFailureIsReported) {
  const auto inst = gen_problem1(6, 12, 10.0, 5);
  SolverConfig c;
  c.projection = PTypeMode{0.999};
  c.budget.max_dykstra_cycles = 1;
  const auto r = solve(inst.problem, inst.x0, c);
  EXPECT_EQ(r.status, SolveStatus::ProjectionFailure);
  EXPECT_FALSE(r.message.empty());
}

TEST(Solve, LineSearchFailureIsReported) {
  // The gradient points the wrong way, so no step is a descent step.
  auto p = shifted_sphere(vec({2, 2}), make_box(Vector::Zero(2), Vector::Ones(2)));
  p.gradient = [](const Vector& x) { return Vector(-(x - vec({2, 2}))); };
  const auto r = solve(p, vec({0.5, 0.5}), SolverConfig{});
  EXPECT_EQ(r.status, SolveStatus::LineSearchFailure);
}

TEST(Solve, RejectsBadStart) {
  const FeasibleSet box = make_box(Vector::Zero(2), Vector::Ones(2));
  const auto p = shifted_sphere(vec({2, 2}), box);
  EXPECT_THROW(solve(p, vec({2, 0}), SolverConfig{}), InputError);
  EXPECT_THROW(solve(p, Vector::Zero(3), SolverConfig{}), InputError);
}

TEST(Solve, DenseScalingRType) {
  oracle::Rng rng(83);
  const long n = 6;
  const auto inst = gen_simplex_ls(n, 12, 21);
  SolverConfig c;
  c.mu = 2.0;
  c.scaling = clip_to_Dmu(rng.spd(n, 0.5, 2.0), 2.0);
  c.projection = RTypeMode{0.25};
  const auto r = solve(inst.problem, inst.x0, c);
  EXPECT_EQ(r.status, SolveStatus::Converged) << r.message;
  expect_run_invariants(r, c, inst.problem.feasible_set);
}

TEST(NearExact, WrapsStalledIterate) {
  const Vector v = vec({2, 0}), u = vec({0.5, 0.5}), best = vec({1, 0});
  const NoCertificate e("stalled", best, 0.0, 1e-18, ProjectionWork{3, 0, 0}, true);
  const auto p = near_exact_projection(e, v, u, PTypeMode{0.8});
  EXPECT_TRUE(p.certificate.ptype().near_exact);
  EXPECT_EQ(p.w, best);
  EXPECT_EQ(p.certificate.work.cycles, 3);
  const auto r = near_exact_projection(e, v, u, RTypeMode{0.25});
  EXPECT_TRUE(r.certificate.rtype().near_exact);
  EXPECT_EQ(r.certificate.rtype().s_star, -1e-18);
}

}  // namespace
}  // namespace inexproj
