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

// Command-line front end: solve one instance, sweep forcing parameters and
// line searches, build performance profiles, or check the step-size and
// complexity bounds on a run.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "inexproj.hpp"

namespace {

using namespace inexproj;
namespace fs = std::filesystem;

struct Options {
  std::string problem = "prob1";
  long n = -1;
  long m = -1;
  double c = -1.0;
  std::vector<std::uint64_t> seeds;
  int instances = 0;
  std::vector<std::string> linesearch;
  int window = 5;
  double eta = 0.85;
  std::vector<double> zeta;
  std::vector<double> gamma;
  double tol = 1e-6;
  int max_iter = 10000;
  std::string out = ".";
  std::vector<long> n_range;
  std::vector<double> c_range;
  std::vector<std::string> metrics;
  std::string summary;
};

LineSearchStrategy make_strategy(const std::string& name, const Options& o) {
  if (name == "armijo") return Armijo{};
  if (name == "max") return MaxType{o.window};
  if (name == "avg") return AverageType{o.eta};
  throw InputError("unknown line search: " + name);
}

// Flag values win; otherwise the problem picks its usual engine.
std::vector<ProjectionMode> make_modes(const Options& o) {
  std::vector<ProjectionMode> modes;
  for (double z : o.zeta) modes.push_back(PTypeMode{z});
  for (double g : o.gamma) modes.push_back(RTypeMode{g});
  if (modes.empty()) {
    if (o.problem == "prob2") {
      modes.push_back(RTypeMode{0.4999});
    } else if (o.problem == "simplexls") {
      modes.push_back(RTypeMode{0.25});
    } else {
      modes.push_back(PTypeMode{0.8});
    }
  }
  return modes;
}

ProblemSpec make_problem_spec(const Options& o) {
  if (o.problem == "prob1") {
    Prob1 p;
    if (o.n > 0) p.n = o.n, p.m = 2 * o.n;
    if (o.m > 0) p.m = o.m;
    if (o.c >= 0.0) p.c = o.c;
    return p;
  }
  if (o.problem == "prob2") {
    Prob2 p;
    if (o.n > 0) p.n = o.n, p.m = 2 * o.n;
    if (o.m > 0) p.m = o.m;
    if (o.c >= 0.0) p.c = o.c;
    return p;
  }
  if (o.problem == "boxqp") {
    BoxQP p;
    if (o.n > 0) p.n = o.n;
    return p;
  }
  throw InputError(o.problem + " is only available to check-bounds");
}

SolverConfig base_config(const Options& o) {
  SolverConfig config;
  config.tol = o.tol;
  config.max_iter = o.max_iter;
  return config;
}

std::vector<std::uint64_t> resolve_seeds(const Options& o) {
  if (o.instances > 0) {
    return derive_seeds(o.seeds.empty() ? 1 : o.seeds.front(), o.instances);
  }
  if (o.seeds.empty()) return {1};
  return o.seeds;
}

BenchSpec make_spec(const Options& o) {
  BenchSpec spec;
  spec.problem = make_problem_spec(o);
  spec.seeds = resolve_seeds(o);
  spec.modes = make_modes(o);
  std::vector<std::string> names = o.linesearch;
  if (names.empty()) names = {"armijo"};
  for (const auto& name : names) spec.strategies.push_back(make_strategy(name, o));
  spec.base = base_config(o);
  if (!o.n_range.empty() || !o.c_range.empty()) {
    RandomDims dims;
    if (o.n_range.size() == 2) dims.n_lo = o.n_range[0], dims.n_hi = o.n_range[1];
    if (o.c_range.size() == 2) dims.c_lo = o.c_range[0], dims.c_hi = o.c_range[1];
    spec.random_dims = dims;
  }
  return spec;
}

void print_summary(const RunSummary& s) {
  std::printf("%-28s %-7s %-10s %-18s iters=%-6ld f_evals=%-7ld work=%-8ld "
              "f=%.10g\n",
              s.instance_id.c_str(), s.strategy.c_str(),
              format_param(s.mode_param).c_str(), s.status.c_str(),
              s.outer_iters, s.f_evals, s.proj_work, s.f_final);
  std::fflush(stdout);
}

int run_solve(const Options& o) {
  Options single = o;
  if (single.linesearch.size() > 1) single.linesearch.resize(1);
  BenchSpec spec = make_spec(single);
  spec.seeds.resize(1);
  spec.modes.resize(1);
  fs::create_directories(o.out);
  std::string id;
  const GeneratedInstance inst = make_instance(spec, spec.seeds[0], &id);
  SolverConfig config = spec.base;
  config.projection = spec.modes[0];
  config.strategy = spec.strategies[0];
  config.seed = spec.seeds[0];
  const SolveResult r = solve(inst.problem, inst.x0, config);
  const fs::path path = fs::path(o.out) / "iterations.csv";
  write_iterations_csv(path, r.records);
  std::printf("instance %s\nstatus %s\nouter_iters %ld\nf_evals %ld\n"
              "proj_work %ld\nf_final %s\niterations %s\n",
              id.c_str(), to_string(r.status).c_str(), outer_iterations(r),
              r.total_f_evals(), r.total_proj_work(),
              format_real(r.f_final).c_str(), path.string().c_str());
  if (!r.message.empty()) std::printf("message %s\n", r.message.c_str());
  return r.status == SolveStatus::Converged ? 0 : 2;
}

int run_sweep_cmd(const Options& o) {
  BenchSpec spec = make_spec(o);
  const fs::path dir = fs::path(o.out) / "iterations";
  fs::create_directories(dir);
  spec.iteration_dir = dir;
  const SweepResult res = run_sweep(spec, print_summary);
  write_summaries_csv(fs::path(o.out) / "summary.csv", res.summaries);
  std::printf("\n%-8s %-10s %5s %9s %12s %12s %12s\n", "strategy", "param",
              "runs", "solved", "mean_iters", "mean_fevals", "mean_work");
  for (const auto& a : res.aggregates) {
    std::printf("%-8s %-10s %5d %9d %12.2f %12.2f %12.2f\n", a.strategy.c_str(),
                format_param(a.mode_param).c_str(), a.runs, a.converged,
                a.mean_outer_iters, a.mean_f_evals, a.mean_proj_work);
  }
  return 0;
}

int run_profile_cmd(const Options& o) {
  std::vector<RunSummary> rows;
  if (!o.summary.empty()) {
    rows = parse_summaries_csv(read_text(o.summary));
  } else {
    Options all = o;
    if (all.linesearch.empty()) all.linesearch = {"armijo", "avg", "max"};
    rows = run_sweep(make_spec(all), print_summary).summaries;
    fs::create_directories(o.out);
    write_summaries_csv(fs::path(o.out) / "summary.csv", rows);
  }
  fs::create_directories(o.out);
  std::vector<std::string> metrics = o.metrics;
  if (metrics.empty()) metrics = {"f_evals", "outer_iters", "proj_work", "wall_time"};
  for (const auto& name : metrics) {
    const ProfileTable t = performance_profile(rows, parse_metric(name));
    const fs::path path = fs::path(o.out) / ("profile_" + name + ".csv");
    write_profile_csv(path, t);
    std::printf("%s:", name.c_str());
    for (std::size_t v = 0; v < t.variants.size(); ++v) {
      std::printf(" %s rho(1)=%.3f", t.variants[v].c_str(), t.rho.front()[v]);
    }
    std::printf("  -> %s\n", path.string().c_str());
  }
  return 0;
}

int run_check_bounds(const Options& o) {
  Options opt = o;
  if (opt.problem == "prob1") opt.problem = "simplexls";
  const std::uint64_t seed = resolve_seeds(opt).front();
  GeneratedInstance inst;
  double lipschitz = 0.0;
  if (opt.problem == "simplexls") {
    const long n = opt.n > 0 ? opt.n : 20;
    const long m = opt.m > 0 ? opt.m : 2 * n;
    inst = gen_simplex_ls(n, m, seed);
  } else if (opt.problem == "boxqp") {
    inst = gen_boxqp(opt.n > 0 ? opt.n : 10, seed);
  } else {
    throw InputError("check-bounds needs a convex problem: simplexls or boxqp");
  }
  // Hessian spectral bound from the gradient map, which is affine here.
  {
    const Eigen::Index dim = inst.x0.size();
    const Vector g0 = inst.problem.gradient(Vector::Zero(dim));
    Matrix h(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      h.col(j) = inst.problem.gradient(Vector::Unit(dim, j)) - g0;
    }
    lipschitz = Eigen::SelfAdjointEigenSolver<Matrix>(0.5 * (h + h.transpose()))
                    .eigenvalues()
                    .cwiseAbs()
                    .maxCoeff();
  }
  SolverConfig config = base_config(opt);
  config.projection = make_modes(opt).front();
  config.strategy = make_strategy(opt.linesearch.empty() ? "armijo" : opt.linesearch[0], opt);
  config.keep_trajectory = true;
  const SolveResult r = solve(inst.problem, inst.x0, config);
  BoundInputs in;
  in.L = lipschitz;
  in.f_star = inst.problem.f_star;
  in.x_star = inst.problem.x_star;
  in.convex = true;
  const BoundsReport rep = check_theoretical_bounds(r, config, in);
  std::printf("status %s, %zu records, L=%s, tau_min=%s\n",
              to_string(r.status).c_str(), r.records.size(),
              format_real(lipschitz).c_str(), format_real(rep.tau_min).c_str());
  const std::pair<const char*, const BoundCheck*> checks[] = {
      {"tau >= tau_min", &rep.tau},
      {"stationarity", &rep.stationarity},
      {"convex gap", &rep.gap},
      {"evaluations", &rep.evaluations},
      {"quasi-fejer", &rep.fejer}};
  for (const auto& [name, c] : checks) {
    std::printf("%-16s %-8s checked=%d violations=%d %s\n", name,
                to_string(c->status).c_str(), c->checked, c->violations,
                c->note.c_str());
  }
  fs::create_directories(o.out);
  write_iterations_csv(fs::path(o.out) / "iterations.csv", r.records);
  return rep.all_pass_or_skipped() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inexact-projection spectral gradient solver and benchmarks"};
  app.set_config("--config", "", "key=value file; flags override it");
  app.require_subcommand(1);
  Options o;

  app.add_option("--problem", o.problem, "prob1, prob2, boxqp or simplexls")
      ->check(CLI::IsMember({"prob1", "prob2", "boxqp", "simplexls"}));
  app.add_option("--n", o.n, "matrix side (vector length for boxqp)")
      ->check(CLI::PositiveNumber);
  app.add_option("--m", o.m, "rows of A and B (default 2n)")
      ->check(CLI::PositiveNumber);
  app.add_option("--c", o.c, "Rosenbrock coupling")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed,--seeds", o.seeds, "instance seeds")->delimiter(',');
  app.add_option("--instances", o.instances,
                 "derive this many seeds from the first --seed");
  app.add_option("--linesearch", o.linesearch, "armijo, max, avg")
      ->delimiter(',')
      ->check(CLI::IsMember({"armijo", "max", "avg"}));
  app.add_option("--M", o.window, "Max-type window")->check(CLI::NonNegativeNumber);
  app.add_option("--eta", o.eta, "Average-type weight");
  app.add_option("--zeta", o.zeta, "P-type forcing parameters")->delimiter(',');
  app.add_option("--gamma", o.gamma, "R-type forcing parameters")->delimiter(',');
  app.add_option("--tol", o.tol, "stopping tolerance on max|x - w|");
  app.add_option("--max-iter", o.max_iter, "outer iteration cap");
  app.add_option("--out", o.out, "output directory");
  app.add_option("--n-range", o.n_range, "random n range (profile study)")
      ->expected(2);
  app.add_option("--c-range", o.c_range, "random c range (profile study)")
      ->expected(2);
  app.add_option("--metric", o.metrics,
                 "f_evals, outer_iters, proj_work, wall_time")
      ->delimiter(',');
  app.add_option("--summary", o.summary, "profile an existing summary CSV");

  auto* solve_cmd = app.add_subcommand("solve", "solve one instance")->fallthrough();
  auto* sweep_cmd = app.add_subcommand("sweep", "instances x modes x line searches")
                        ->fallthrough();
  auto* profile_cmd =
      app.add_subcommand("profile", "performance profiles over line searches")
          ->fallthrough();
  auto* bounds_cmd =
      app.add_subcommand("check-bounds", "check the complexity bounds on a run")
          ->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    if (solve_cmd->parsed()) return run_solve(o);
    if (sweep_cmd->parsed()) return run_sweep_cmd(o);
    if (profile_cmd->parsed()) return run_profile_cmd(o);
    if (bounds_cmd->parsed()) return run_check_bounds(o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
