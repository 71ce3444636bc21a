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

#ifndef INEXPROJ_CERTIFICATES_HPP_
#define INEXPROJ_CERTIFICATES_HPP_

#include <span>
#include <variant>

#include "inexproj/common.hpp"
#include "inexproj/feasible_set.hpp"
#include "inexproj/scaling.hpp"

namespace inexproj {

inline constexpr double kFeasibilityTol = 1e-10;

// Work spent by one projection call.
struct ProjectionWork {
  int cycles = 0;      // Dykstra cycles
  int lo_calls = 0;    // linear-minimization oracle calls
  int eigenpairs = 0;  // extreme eigenpairs computed by the LO oracle

  int total() const { return cycles + lo_calls; }
};

/// Proof that ||w - v||_D^2 <= zeta * c_lower + (1 - zeta) ||u - v||_D^2 with
/// c_lower a certified lower bound on the squared distance to the exact
/// projection.
struct PTypeCertificate {
  double zeta = 1.0;
  double c_lower = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  // Accepted because Dykstra stalled numerically rather than by the test.
  bool near_exact = false;
  // Number of cycles whose lower bound decreased (logged, not required).
  int lower_bound_decreases = 0;
};

/// Proof that <D(v - w), y - w> <= gamma ||w - u||_D^2 over the whole set:
/// -s_star is the maximum of the left side, returned by the LO oracle.
struct RTypeCertificate {
  double gamma = 0.0;
  double s_star = 0.0;
  double threshold = 0.0;
  // Accepted because the gap fell to rounding level rather than by the test.
  bool near_exact = false;
};

struct ProjectionCertificate {
  std::variant<PTypeCertificate, RTypeCertificate> kind;
  ProjectionWork work;

  bool is_ptype() const {
    return std::holds_alternative<PTypeCertificate>(kind);
  }
  const PTypeCertificate& ptype() const {
    return std::get<PTypeCertificate>(kind);
  }
  const RTypeCertificate& rtype() const {
    return std::get<RTypeCertificate>(kind);
  }
};

struct ProjectionResult {
  Vector w;
  ProjectionCertificate certificate;
};

/// Raised when an inexact-projection engine runs out of budget before its
/// stopping test certifies an iterate.
class NoCertificate : public Error {
 public:
  NoCertificate(const std::string& what, Vector best, double movement,
                double gap, ProjectionWork work, bool stalled = false)
      : Error(what),
        best_(std::move(best)),
        movement_(movement),
        gap_(gap),
        work_(work),
        stalled_(stalled) {}

  const Vector& best() const { return best_; }
  // Last Dykstra cycle movement (max-abs), NaN for Frank-Wolfe.
  double movement() const { return movement_; }
  // Last Frank-Wolfe gap -s*, NaN for Dykstra.
  double gap() const { return gap_; }
  const ProjectionWork& work() const { return work_; }
  // The engine stopped early because its iterate stopped changing at
  // rounding level: best() is an exact projection up to that accuracy.
  bool stalled() const { return stalled_; }

 private:
  Vector best_;
  double movement_;
  double gap_;
  ProjectionWork work_;
  bool stalled_;
};

/// Checks ||w - v||_D^2 <= zeta ||p_exact - v||_D^2 + (1 - zeta)||u - v||_D^2
/// with slack, and that w is feasible.
inline bool verify_p_certificate(const FeasibleSet& set, const Vector& w,
                                 const Vector& v, const Vector& u, double zeta,
                                 const ScalingMatrix& d, const Vector& p_exact,
                                 double slack = 1e-8) {
  if (feasibility_violation(set, w) > slack) return false;
  const double lhs = d.squared_norm(w - v);
  const double rhs = zeta * d.squared_norm(p_exact - v) +
                     (1.0 - zeta) * d.squared_norm(u - v);
  return lhs <= rhs + slack;
}

/// Checks <D(v - w), y - w> <= gamma ||w - u||_D^2 for every witness y.
inline bool verify_r_certificate(const FeasibleSet& set, const Vector& w,
                                 const Vector& v, const Vector& u, double gamma,
                                 const ScalingMatrix& d,
                                 std::span<const Vector> witnesses,
                                 double slack = 1e-8) {
  if (feasibility_violation(set, w) > slack) return false;
  const Vector dv = d.apply(v - w);
  const double threshold = gamma * d.squared_norm(w - u);
  for (const Vector& y : witnesses) {
    if (dv.dot(y - w) > threshold + slack) return false;
  }
  return true;
}

}  // namespace inexproj

#endif  // INEXPROJ_CERTIFICATES_HPP_
