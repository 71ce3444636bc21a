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

#ifndef INEXPROJ_COMMON_HPP_
#define INEXPROJ_COMMON_HPP_

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace inexproj {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
// Matrix-valued points are stored flattened, row-major, length n*n.
using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatrixView = Eigen::Map<RowMajorMatrix>;
using ConstMatrixView = Eigen::Map<const RowMajorMatrix>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: shapes that do not agree, L > U, asymmetric data.
class InputError : public Error {
 public:
  using Error::Error;
};

// A call outside the configurations an operation supports.
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

// Iterative numerical kernels that failed to converge.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, int iterations)
      : Error(what + " (after " + std::to_string(iterations) + " iterations)"),
        iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

// Backtracking shrank the step below the underflow floor.
class LineSearchFailure : public Error {
 public:
  using Error::Error;
};

inline void require_same_size(const Vector& a, const Vector& b,
                              const char* where) {
  if (a.size() != b.size()) {
    throw InputError(std::string(where) + ": dimension mismatch (" +
                     std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  }
}

// Side length of a flattened square matrix; throws when size is not a square.
inline Eigen::Index square_side(Eigen::Index size, const char* where) {
  auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(size))));
  if (n * n != size) {
    throw InputError(std::string(where) + ": length " + std::to_string(size) +
                     " is not a flattened square matrix");
  }
  return n;
}

inline ConstMatrixView as_matrix(const Vector& x, Eigen::Index n) {
  return ConstMatrixView(x.data(), n, n);
}

inline MatrixView as_matrix(Vector& x, Eigen::Index n) {
  return MatrixView(x.data(), n, n);
}

inline Vector flatten(const RowMajorMatrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

// (V + V^T)/2 of a flattened square matrix.
inline Vector symmetrize(const Vector& v) {
  const auto n = square_side(v.size(), "symmetrize");
  const auto m = as_matrix(v, n);
  RowMajorMatrix s = 0.5 * (m + m.transpose());
  return flatten(s);
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
  require_same_size(a, b, "max_abs_diff");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace inexproj

#endif  // INEXPROJ_COMMON_HPP_
