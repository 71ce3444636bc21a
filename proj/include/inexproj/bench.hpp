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

#ifndef INEXPROJ_BENCH_HPP_
#define INEXPROJ_BENCH_HPP_

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "inexproj/core_model.hpp"
#include "inexproj/solver.hpp"

namespace inexproj {

// ---------------------------------------------------------------------------
// Random numbers
// ---------------------------------------------------------------------------

/// SplitMix64 (Steele, Lea and Flood): a counter-based 64-bit generator.
/// state_{i+1} = state_i + 0x9E3779B97F4A7C15, output = mix(state_{i+1})
/// with the finalizer below. Doubles take the top 53 bits.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi].
  long uniform_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

/// Seed of instance `index` in a family rooted at `seed`.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::mix(SplitMix64::mix(seed) ^
                         (index + 0x9E3779B97F4A7C15ULL));
}

inline std::vector<std::uint64_t> derive_seeds(std::uint64_t seed, int count) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < count; ++i) out.push_back(instance_seed(seed, i));
  return out;
}

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

struct GeneratedInstance {
  ProblemInstance problem;
  Vector x0;
  std::string note;  // generator remarks, e.g. a regenerated start
};

namespace detail {

inline Matrix uniform_matrix(SplitMix64& rng, Eigen::Index rows,
                             Eigen::Index cols, double lo, double hi) {
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.uniform(lo, hi);
  }
  return m;
}

inline void check_dims(Eigen::Index n, Eigen::Index m, double c,
                       const char* where) {
  if (n < 1) throw InputError(std::string(where) + ": n must be >= 1");
  if (m < n) throw InputError(std::string(where) + ": requires m >= n");
  if (!(c >= 0.0)) throw InputError(std::string(where) + ": c must be >= 0");
}

}  // namespace detail

/// Matrix least squares + Rosenbrock over SDD+ with L = 0, U = +inf.
/// Draws A, B and then X0 row by row from one SplitMix64 stream.
inline GeneratedInstance gen_problem1(Eigen::Index n, Eigen::Index m, double c,
                                      std::uint64_t seed) {
  detail::check_dims(n, m, c, "gen_problem1");
  SplitMix64 rng(seed);
  MatrixLSRosenbrock model;
  model.A = detail::uniform_matrix(rng, m, n, -1.0, 1.0);
  model.B = detail::uniform_matrix(rng, m, n, -1.0, 1.0);
  model.c = c;
  RowMajorMatrix x = detail::uniform_matrix(rng, n, n, 0.0, 1.0);
  x = (0.5 * (x + x.transpose())).eval();
  for (Eigen::Index i = 0; i < n; ++i) {
    double off = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i) off += x(i, j);
    }
    x(i, i) = 2.0 * off;
  }
  GeneratedInstance out;
  out.problem = make_problem("prob1", std::move(model), n,
                             make_sdd_nonnegative(n));
  out.x0 = flatten(x);
  return out;
}

/// Matrix least squares + Rosenbrock over the spectrahedron; X0 is the
/// trace-normalized Gram matrix of a uniform [-1, 1] draw.
inline GeneratedInstance gen_problem2(Eigen::Index n, Eigen::Index m, double c,
                                      std::uint64_t seed) {
  detail::check_dims(n, m, c, "gen_problem2");
  SplitMix64 rng(seed);
  MatrixLSRosenbrock model;
  model.A = detail::uniform_matrix(rng, m, n, -1.0, 1.0);
  model.B = detail::uniform_matrix(rng, m, n, -1.0, 1.0);
  model.c = c;
  GeneratedInstance out;
  std::uint64_t start_seed = seed;
  for (int attempt = 0;; ++attempt) {
    const Matrix x = detail::uniform_matrix(rng, n, n, -1.0, 1.0);
    Matrix gram = x * x.transpose();
    gram = (0.5 * (gram + gram.transpose())).eval();
    const double tr = gram.trace();
    if (tr > 0.0) {
      out.x0 = flatten(RowMajorMatrix(gram / tr));
      break;
    }
    if (attempt >= 16) throw NumericalError("gen_problem2: degenerate start", attempt);
    start_seed = instance_seed(start_seed, 1);
    rng = SplitMix64(start_seed);
    out.note = "zero-trace start regenerated with seed " + std::to_string(start_seed);
  }
  out.problem = make_problem("prob2", std::move(model), n, Spectrahedron{n});
  return out;
}

/// Separable convex quadratic over [-1, 1]^n: Hessian diag(h) with h uniform
/// on [1, 10], center uniform on [-2, 2]. x* = clamp(center), f* = f(x*).
inline GeneratedInstance gen_boxqp(Eigen::Index n, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_boxqp: n must be >= 1");
  SplitMix64 rng(seed);
  Vector h(n), center(n);
  for (Eigen::Index i = 0; i < n; ++i) h[i] = rng.uniform(1.0, 10.0);
  for (Eigen::Index i = 0; i < n; ++i) center[i] = rng.uniform(-2.0, 2.0);
  Vector x0(n);
  for (Eigen::Index i = 0; i < n; ++i) x0[i] = rng.uniform(-1.0, 1.0);
  Quadratic q{Matrix(h.asDiagonal()), center};
  const Vector x_star = center.cwiseMax(-1.0).cwiseMin(1.0);
  const double f_star = eval_objective(q, x_star);
  GeneratedInstance out;
  out.problem = make_problem("boxqp", std::move(q), n,
                             make_box(Vector::Constant(n, -1.0),
                                      Vector::Constant(n, 1.0)),
                             f_star, x_star);
  out.x0 = std::move(x0);
  return out;
}

struct SimplexLsModel {
  LeastSquares ls;
  Vector x_star;
};

/// Consistent least squares 1/2 ||Ax - b||^2 over the unit simplex with
/// b = A x*, where x* has its last n/3 coordinates at zero. With A of full
/// column rank x* is the unique minimizer and f* = 0. Starts at the
/// barycenter.
inline SimplexLsModel simplex_ls_model(Eigen::Index n, Eigen::Index m,
                                       std::uint64_t seed) {
  detail::check_dims(n, m, 0.0, "gen_simplex_ls");
  SplitMix64 rng(seed);
  SimplexLsModel out;
  out.ls.A = detail::uniform_matrix(rng, m, n, -1.0, 1.0);
  out.x_star = Vector::Zero(n);
  const Eigen::Index support = std::max<Eigen::Index>(1, n - n / 3);
  for (Eigen::Index i = 0; i < support; ++i) out.x_star[i] = rng.uniform(0.1, 1.0);
  out.x_star /= out.x_star.sum();
  out.ls.b = out.ls.A * out.x_star;
  return out;
}

inline GeneratedInstance gen_simplex_ls(Eigen::Index n, Eigen::Index m,
                                        std::uint64_t seed) {
  SimplexLsModel model = simplex_ls_model(n, m, seed);
  GeneratedInstance out;
  out.problem = make_problem("simplexls", std::move(model.ls), n, Simplex{n},
                             0.0, model.x_star);
  out.x0 = Vector::Constant(n, 1.0 / static_cast<double>(n));
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

struct Prob1 {
  Eigen::Index n = 30;
  Eigen::Index m = 60;
  double c = 10.0;
};
struct Prob2 {
  Eigen::Index n = 60;
  Eigen::Index m = 120;
  double c = 100.0;
};
struct BoxQP {
  Eigen::Index n = 10;
};
using ProblemSpec = std::variant<Prob1, Prob2, BoxQP>;

/// Per-instance random dimensions: n uniform integer in [n_lo, n_hi],
/// c uniform real in [c_lo, c_hi], m = 2n.
struct RandomDims {
  Eigen::Index n_lo = 10;
  Eigen::Index n_hi = 20;
  double c_lo = 10.0;
  double c_hi = 50.0;
};

struct BenchSpec {
  ProblemSpec problem = Prob1{};
  std::vector<std::uint64_t> seeds;
  std::vector<ProjectionMode> modes;
  std::vector<LineSearchStrategy> strategies;
  SolverConfig base;
  std::optional<RandomDims> random_dims;
  // When set, each run writes its iteration CSV into this directory.
  std::optional<std::filesystem::path> iteration_dir;
};

struct RunSummary {
  std::string instance_id;
  std::string strategy;
  double mode_param = 0.0;
  std::string status;
  long outer_iters = 0;
  long f_evals = 0;
  long proj_work = 0;
  double wall_time_s = 0.0;
  double f_final = 0.0;

  bool solved() const { return status == to_string(SolveStatus::Converged); }
};

struct ModeAggregate {
  std::string strategy;
  double mode_param = 0.0;
  int runs = 0;
  int converged = 0;
  double mean_outer_iters = 0.0;
  double mean_f_evals = 0.0;
  double mean_proj_work = 0.0;
  double mean_wall_time_s = 0.0;
};

struct SweepResult {
  std::vector<RunSummary> summaries;
  std::vector<ModeAggregate> aggregates;  // in first-appearance order
};

inline double mode_param(const ProjectionMode& mode) {
  if (const auto* p = std::get_if<PTypeMode>(&mode)) return p->zeta;
  return std::get<RTypeMode>(mode).gamma;
}

inline void validate(const BenchSpec& spec) {
  if (spec.seeds.empty()) throw InputError("BenchSpec: no seeds");
  for (std::size_t i = 0; i < spec.seeds.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.seeds.size(); ++j) {
      if (spec.seeds[i] == spec.seeds[j]) {
        throw InputError("BenchSpec: seeds must be distinct");
      }
    }
  }
  if (spec.modes.empty()) throw InputError("BenchSpec: no projection modes");
  if (spec.strategies.empty()) throw InputError("BenchSpec: no strategies");
  if (const auto* p = std::get_if<Prob1>(&spec.problem)) {
    detail::check_dims(p->n, p->m, p->c, "BenchSpec");
  } else if (const auto* q = std::get_if<Prob2>(&spec.problem)) {
    detail::check_dims(q->n, q->m, q->c, "BenchSpec");
  }
  if (spec.random_dims) {
    const auto& r = *spec.random_dims;
    if (r.n_lo < 1 || r.n_lo > r.n_hi || !(r.c_lo >= 0.0 && r.c_lo <= r.c_hi)) {
      throw InputError("BenchSpec: bad random dimension ranges");
    }
  }
}

/// Builds the instance for one seed of the spec.
inline GeneratedInstance make_instance(const BenchSpec& spec,
                                       std::uint64_t seed,
                                       std::string* instance_id = nullptr) {
  ProblemSpec problem = spec.problem;
  if (spec.random_dims) {
    SplitMix64 rng(instance_seed(seed, 0xD1));
    const auto& r = *spec.random_dims;
    const auto n = static_cast<Eigen::Index>(rng.uniform_int(r.n_lo, r.n_hi));
    const double c = rng.uniform(r.c_lo, r.c_hi);
    if (std::holds_alternative<Prob1>(problem)) problem = Prob1{n, 2 * n, c};
    if (std::holds_alternative<Prob2>(problem)) problem = Prob2{n, 2 * n, c};
    if (std::holds_alternative<BoxQP>(problem)) problem = BoxQP{n};
  }
  std::string id;
  GeneratedInstance inst;
  if (const auto* p = std::get_if<Prob1>(&problem)) {
    inst = gen_problem1(p->n, p->m, p->c, seed);
    id = "prob1_n" + std::to_string(p->n);
  } else if (const auto* q = std::get_if<Prob2>(&problem)) {
    inst = gen_problem2(q->n, q->m, q->c, seed);
    id = "prob2_n" + std::to_string(q->n);
  } else {
    const auto& b = std::get<BoxQP>(problem);
    inst = gen_boxqp(b.n, seed);
    id = "boxqp_n" + std::to_string(b.n);
  }
  if (instance_id) *instance_id = id + "_s" + std::to_string(seed);
  return inst;
}

inline long outer_iterations(const SolveResult& r) {
  long steps = 0;
  for (const auto& rec : r.records) steps += rec.tau > 0.0 ? 1 : 0;
  return steps;
}

inline void write_iterations_csv(const std::filesystem::path& path,
                                 const std::vector<IterationRecord>& records);

inline std::string format_real(double x);

/// Short form for labels and file names.
inline std::string format_param(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

/// Solves every instance x mode x strategy combination. Failed runs keep
/// their status and the sweep moves on. `on_run` sees each summary as soon
/// as it is produced.
inline SweepResult run_sweep(
    const BenchSpec& spec,
    const std::function<void(const RunSummary&)>& on_run = {}) {
  validate(spec);
  SweepResult out;
  std::map<std::pair<std::string, double>, std::size_t> slot;
  for (std::uint64_t seed : spec.seeds) {
    std::string id;
    const GeneratedInstance inst = make_instance(spec, seed, &id);
    for (const ProjectionMode& mode : spec.modes) {
      for (const LineSearchStrategy& strategy : spec.strategies) {
        SolverConfig config = spec.base;
        config.projection = mode;
        config.strategy = strategy;
        config.seed = seed;
        const auto t0 = std::chrono::steady_clock::now();
        const SolveResult res = solve(inst.problem, inst.x0, config);
        const auto t1 = std::chrono::steady_clock::now();

        RunSummary s;
        s.instance_id = id;
        s.strategy = strategy_name(strategy);
        s.mode_param = mode_param(mode);
        s.status = to_string(res.status);
        s.outer_iters = outer_iterations(res);
        s.f_evals = res.total_f_evals();
        s.proj_work = res.total_proj_work();
        s.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
        s.f_final = res.f_final;
        if (spec.iteration_dir) {
          write_iterations_csv(*spec.iteration_dir /
                                   (id + "_" + s.strategy + "_" +
                                    format_param(s.mode_param) + ".csv"),
                               res.records);
        }
        if (on_run) on_run(s);

        const auto key = std::make_pair(s.strategy, s.mode_param);
        auto it = slot.find(key);
        if (it == slot.end()) {
          it = slot.emplace(key, out.aggregates.size()).first;
          out.aggregates.push_back({s.strategy, s.mode_param});
        }
        ModeAggregate& agg = out.aggregates[it->second];
        ++agg.runs;
        agg.converged += s.solved() ? 1 : 0;
        agg.mean_outer_iters += static_cast<double>(s.outer_iters);
        agg.mean_f_evals += static_cast<double>(s.f_evals);
        agg.mean_proj_work += static_cast<double>(s.proj_work);
        agg.mean_wall_time_s += s.wall_time_s;
        out.summaries.push_back(std::move(s));
      }
    }
  }
  for (ModeAggregate& agg : out.aggregates) {
    const double k = agg.runs;
    agg.mean_outer_iters /= k;
    agg.mean_f_evals /= k;
    agg.mean_proj_work /= k;
    agg.mean_wall_time_s /= k;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Performance profiles
// ---------------------------------------------------------------------------

enum class ProfileMetric { FEvals, OuterIters, ProjWork, WallTime };

inline ProfileMetric parse_metric(const std::string& name) {
  if (name == "f_evals") return ProfileMetric::FEvals;
  if (name == "outer_iters") return ProfileMetric::OuterIters;
  if (name == "proj_work") return ProfileMetric::ProjWork;
  if (name == "wall_time") return ProfileMetric::WallTime;
  throw InputError("unknown profile metric: " + name);
}

inline double metric_value(const RunSummary& s, ProfileMetric m) {
  if (!s.solved()) return kInf;
  switch (m) {
    case ProfileMetric::FEvals: return static_cast<double>(s.f_evals);
    case ProfileMetric::OuterIters: return static_cast<double>(s.outer_iters);
    case ProfileMetric::ProjWork: return static_cast<double>(s.proj_work);
    case ProfileMetric::WallTime: return s.wall_time_s;
  }
  return kInf;
}

struct ProfileTable {
  std::vector<std::string> variants;
  std::vector<double> thetas;
  std::vector<std::vector<double>> rho;  // rho[i][s] at thetas[i]
  // ratios[s][p]: cost of variant s on problem p over the best cost.
  std::vector<std::vector<double>> ratios;

  double rho_at(std::size_t variant, double theta) const {
    const auto& r = ratios[variant];
    std::size_t hits = 0;
    for (double x : r) hits += x <= theta ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(r.size());
  }
};

/// Variant label: the strategy name, suffixed with the mode parameter when
/// the summaries mix several mode parameters.
inline std::string variant_label(const RunSummary& s, bool with_param) {
  return with_param ? s.strategy + "_" + format_param(s.mode_param) : s.strategy;
}

/// Dolan-More profile over the problems (instance ids) in `summaries`.
/// Unsolved runs cost +inf. The theta grid is log-spaced on [1, theta_max]
/// with theta_max the largest finite ratio, so the last row holds the
/// fraction of problems each variant solved.
inline ProfileTable performance_profile(const std::vector<RunSummary>& summaries,
                                        ProfileMetric metric,
                                        int grid_points = 50) {
  if (summaries.empty()) throw InputError("performance_profile: no runs");
  if (grid_points < 2) throw InputError("performance_profile: grid too small");
  bool mixed = false;
  for (const auto& s : summaries) {
    mixed = mixed || s.mode_param != summaries.front().mode_param;
  }
  ProfileTable t;
  std::vector<std::string> problems;
  std::map<std::string, std::size_t> vidx, pidx;
  for (const auto& s : summaries) {
    const std::string v = variant_label(s, mixed);
    if (vidx.emplace(v, t.variants.size()).second) t.variants.push_back(v);
    if (pidx.emplace(s.instance_id, problems.size()).second) {
      problems.push_back(s.instance_id);
    }
  }
  std::vector<std::vector<double>> cost(
      t.variants.size(), std::vector<double>(problems.size(), kInf));
  for (const auto& s : summaries) {
    double& c = cost[vidx[variant_label(s, mixed)]][pidx[s.instance_id]];
    c = std::min(c, metric_value(s, metric));
  }
  t.ratios.assign(t.variants.size(), std::vector<double>(problems.size(), kInf));
  double theta_max = 1.0;
  for (std::size_t p = 0; p < problems.size(); ++p) {
    double best = kInf;
    for (std::size_t v = 0; v < t.variants.size(); ++v) best = std::min(best, cost[v][p]);
    if (!std::isfinite(best)) continue;
    for (std::size_t v = 0; v < t.variants.size(); ++v) {
      double r = kInf;
      if (std::isfinite(cost[v][p])) r = best > 0.0 ? cost[v][p] / best : 1.0;
      t.ratios[v][p] = r;
      if (std::isfinite(r)) theta_max = std::max(theta_max, r);
    }
  }
  for (int i = 0; i < grid_points; ++i) {
    const double frac = static_cast<double>(i) / (grid_points - 1);
    double theta = i + 1 == grid_points ? theta_max : std::pow(theta_max, frac);
    if (i == 0) theta = 1.0;
    t.thetas.push_back(theta);
    std::vector<double> row;
    for (std::size_t v = 0; v < t.variants.size(); ++v) row.push_back(t.rho_at(v, theta));
    t.rho.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// 17 significant digits: parses back to the same double.
inline std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline constexpr const char* kIterationHeader =
    "k,f,nu,tau,alpha,proj_work,f_evals,stat_measure";
inline constexpr const char* kSummaryHeader =
    "instance_id,strategy,mode_param,status,outer_iters,f_evals,proj_work,"
    "wall_time_s,f_final";

inline std::string iterations_csv(const std::vector<IterationRecord>& records) {
  std::string out = std::string(kIterationHeader) + "\n";
  for (const auto& r : records) {
    out += std::to_string(r.k) + "," + format_real(r.f) + "," +
           format_real(r.nu) + "," + format_real(r.tau) + "," +
           format_real(r.alpha) + "," + std::to_string(r.proj_work) + "," +
           std::to_string(r.f_evals) + "," + format_real(r.stat_measure) + "\n";
  }
  return out;
}

inline std::string summaries_csv(const std::vector<RunSummary>& rows) {
  std::string out = std::string(kSummaryHeader) + "\n";
  for (const auto& s : rows) {
    out += s.instance_id + "," + s.strategy + "," + format_real(s.mode_param) +
           "," + s.status + "," + std::to_string(s.outer_iters) + "," +
           std::to_string(s.f_evals) + "," + std::to_string(s.proj_work) + "," +
           format_real(s.wall_time_s) + "," + format_real(s.f_final) + "\n";
  }
  return out;
}

inline std::string profile_csv(const ProfileTable& t) {
  std::string out = "theta";
  for (const auto& v : t.variants) out += ",rho_" + v;
  out += "\n";
  for (std::size_t i = 0; i < t.thetas.size(); ++i) {
    out += format_real(t.thetas[i]);
    for (double r : t.rho[i]) out += "," + format_real(r);
    out += "\n";
  }
  return out;
}

inline void write_text(const std::filesystem::path& path,
                       const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open for writing: " + path.string());
  f << text;
  f.flush();
  if (!f) throw Error("write failed: " + path.string());
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for reading: " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void write_iterations_csv(const std::filesystem::path& path,
                                 const std::vector<IterationRecord>& records) {
  write_text(path, iterations_csv(records));
}

inline void write_summaries_csv(const std::filesystem::path& path,
                                const std::vector<RunSummary>& rows) {
  write_text(path, summaries_csv(rows));
}

inline void write_profile_csv(const std::filesystem::path& path,
                              const ProfileTable& t) {
  write_text(path, profile_csv(t));
}

namespace detail {

// strtod rather than stod: subnormals parse instead of throwing.
inline double parse_real(const std::string& cell) {
  char* end = nullptr;
  const double x = std::strtod(cell.c_str(), &end);
  if (end == cell.c_str() || *end != '\0') {
    throw InputError("csv: not a number: " + cell);
  }
  return x;
}

inline std::vector<std::vector<std::string>> csv_rows(const std::string& text,
                                                      const char* header,
                                                      std::size_t fields) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw InputError("csv: unexpected header");
  }
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != fields) throw InputError("csv: bad row: " + line);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace detail

inline std::vector<IterationRecord> parse_iterations_csv(const std::string& text) {
  std::vector<IterationRecord> out;
  for (const auto& c : detail::csv_rows(text, kIterationHeader, 8)) {
    IterationRecord r;
    r.k = std::stoi(c[0]);
    r.f = detail::parse_real(c[1]);
    r.nu = detail::parse_real(c[2]);
    r.tau = detail::parse_real(c[3]);
    r.alpha = detail::parse_real(c[4]);
    r.proj_work = std::stoi(c[5]);
    r.f_evals = std::stol(c[6]);
    r.stat_measure = detail::parse_real(c[7]);
    out.push_back(r);
  }
  return out;
}

inline std::vector<RunSummary> parse_summaries_csv(const std::string& text) {
  std::vector<RunSummary> out;
  for (const auto& c : detail::csv_rows(text, kSummaryHeader, 9)) {
    RunSummary s;
    s.instance_id = c[0];
    s.strategy = c[1];
    s.mode_param = detail::parse_real(c[2]);
    s.status = c[3];
    s.outer_iters = std::stol(c[4]);
    s.f_evals = std::stol(c[5]);
    s.proj_work = std::stol(c[6]);
    s.wall_time_s = detail::parse_real(c[7]);
    s.f_final = detail::parse_real(c[8]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace inexproj

#endif  // INEXPROJ_BENCH_HPP_
