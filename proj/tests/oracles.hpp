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

// Reference computations for the tests. Everything here is written
// independently of the library code paths it is compared against.

#ifndef INEXPROJ_TESTS_ORACLES_HPP_
#define INEXPROJ_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

class Rng {
 public:
  explicit Rng(unsigned long seed) : gen_(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  double normal() { return std::normal_distribution<double>()(gen_); }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  Vec vec(long n, double lo = -1.0, double hi = 1.0) {
    Vec v(n);
    for (long i = 0; i < n; ++i) v[i] = uniform(lo, hi);
    return v;
  }
  Mat mat(long r, long c, double lo = -1.0, double hi = 1.0) {
    Mat m(r, c);
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }
  Mat symmetric(long n, double scale = 1.0) {
    Mat m = mat(n, n, -scale, scale);
    return 0.5 * (m + m.transpose());
  }
  // Random SPD with spectrum inside [lo, hi].
  Mat spd(long n, double lo, double hi) {
    Mat q = Eigen::HouseholderQR<Mat>(mat(n, n)).householderQ();
    Vec d(n);
    for (long i = 0; i < n; ++i) d[i] = uniform(lo, hi);
    Mat m = q * d.asDiagonal() * q.transpose();
    return 0.5 * (m + m.transpose());
  }
  // Uniform-ish point of the unit simplex.
  Vec simplex_point(long n) {
    Vec v(n);
    for (long i = 0; i < n; ++i) v[i] = -std::log(uniform(1e-12, 1.0));
    return v / v.sum();
  }
  // Trace-one Gram matrix G G^T, flattened row-major.
  Vec spectrahedron_point(long n) {
    const long rank = integer(1, static_cast<int>(n));
    Mat g(n, rank);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < rank; ++j) g(i, j) = normal();
    Mat x = g * g.transpose();
    x /= x.trace();
    return flatten(x);
  }

  static Vec flatten(const Mat& m) {
    Vec v(m.size());
    for (long i = 0; i < m.rows(); ++i)
      for (long j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

inline Mat unflatten(const Vec& v, long n) {
  Mat m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

// Cyclic Jacobi eigenvalue iteration for a symmetric matrix. Returns the
// eigenvalues ascending; eigenvectors (columns) in *vectors when given.
inline Vec jacobi_eigenvalues(Mat a, Mat* vectors = nullptr) {
  const long n = a.rows();
  Mat v = Mat::Identity(n, n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (long p = 0; p < n; ++p)
      for (long q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off <= 1e-30 * std::max(1.0, a.squaredNorm())) break;
    for (long p = 0; p < n; ++p) {
      for (long q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (long k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (long k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (long k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<long> order(n);
  for (long i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](long x, long y) { return a(x, x) < a(y, y); });
  Vec values(n);
  Mat sorted(n, n);
  for (long i = 0; i < n; ++i) {
    values[i] = a(order[i], order[i]);
    sorted.col(i) = v.col(order[i]);
  }
  if (vectors) *vectors = sorted;
  return values;
}

// Objective of the matrix least-squares/Rosenbrock model by explicit loops.
inline double ls_rosenbrock_loops(const Mat& a, const Mat& b, double c,
                                  const Mat& x) {
  const long m = a.rows(), n = a.cols();
  double total = 0.0;
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < n; ++j) {
      double r = -b(i, j);
      for (long k = 0; k < n; ++k) r += a(i, k) * x(k, j);
      total += 0.5 * r * r;
    }
  }
  for (long i = 0; i + 1 < n; ++i) {
    const double t = x(i + 1, i + 1) - x(i, i) * x(i, i);
    total += c * t * t + (1.0 - x(i, i)) * (1.0 - x(i, i));
  }
  return total;
}

// Euclidean projection onto the simplex by bisection on the multiplier.
inline Vec simplex_projection_bisect(const Vec& v) {
  double lo = v.minCoeff() - 1.0, hi = v.maxCoeff();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((v.array() - mid).max(0.0).sum() > 1.0) lo = mid; else hi = mid;
  }
  return (v.array() - 0.5 * (lo + hi)).max(0.0).matrix();
}

// Frobenius projection of a symmetric matrix onto {X_ii >= sum_j |X_ij|}
// restricted to row/column i: minimizes (t - a)^2 + 2 sum_j (x_j - s_j)^2
// subject to sum_j |x_j| <= t by enumerating every active set. With
// y_j = |x_j| on the support S and the constraint tight, KKT gives
// t = a + l/2, y_j = |s_j| - l/4 and l (1/2 + |S|/4) = sum_S |s_j| - a.
// Returns (t, x_1..x_k). Exponential in k; small rows only.
inline Vec sdd_row_bruteforce(double a, const Vec& s) {
  const long k = s.size();
  auto cost = [&](double t, const Vec& x) {
    return (t - a) * (t - a) + 2.0 * (x - s).squaredNorm();
  };
  if (s.cwiseAbs().sum() <= a) return (Vec(k + 1) << a, s).finished();
  double best_cost = cost(0.0, Vec::Zero(k));
  Vec best = Vec::Zero(k + 1);
  for (long mask = 1; mask < (1L << k); ++mask) {
    double sum = 0.0;
    int count = 0;
    for (long j = 0; j < k; ++j) {
      if (mask & (1L << j)) { sum += std::abs(s[j]); ++count; }
    }
    const double l = (sum - a) / (0.5 + 0.25 * count);
    if (l < 0.0) continue;
    Vec x = Vec::Zero(k);
    bool ok = true;
    for (long j = 0; j < k; ++j) {
      if (!(mask & (1L << j))) continue;
      const double y = std::abs(s[j]) - 0.25 * l;
      if (y < 0.0) ok = false;
      x[j] = s[j] < 0.0 ? -y : y;
    }
    if (!ok) continue;
    const double t = a + 0.5 * l;
    if (cost(t, x) < best_cost) {
      best_cost = cost(t, x);
      best << t, x;
    }
  }
  return best;
}

}  // namespace oracle

#endif  // INEXPROJ_TESTS_ORACLES_HPP_
