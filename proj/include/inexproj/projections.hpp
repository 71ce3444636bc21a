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

#ifndef INEXPROJ_PROJECTIONS_HPP_
#define INEXPROJ_PROJECTIONS_HPP_

#include <variant>

#include "inexproj/certificates.hpp"
#include "inexproj/dykstra.hpp"
#include "inexproj/feasible_set.hpp"
#include "inexproj/frank_wolfe.hpp"
#include "inexproj/scaling.hpp"

namespace inexproj {

// Relative-error projection with forcing parameter zeta in (0, 1].
struct PTypeMode {
  double zeta = 0.8;
};

// Relaxed variational-inequality projection with gamma in [0, 1/2).
struct RTypeMode {
  double gamma = 0.25;
};

using ProjectionMode = std::variant<PTypeMode, RTypeMode>;

// gamma = (1 - zeta) / 2 makes every R-type point a P-type point.
inline double gamma_for_zeta(double zeta) { return 0.5 * (1.0 - zeta); }
inline double zeta_for_gamma(double gamma) { return 1.0 - 2.0 * gamma; }

struct ProjectionBudget {
  int max_dykstra_cycles = 100000;
  int max_fw_iters = 100000;
};

/// Euclidean projection; closed form where available, high-accuracy Dykstra
/// for the intersections.
inline Vector exact_project(const FeasibleSet& set, const Vector& v) {
  if (v.size() != dimension(set)) {
    throw InputError("exact_project: dimension mismatch");
  }
  if (const auto* box = std::get_if<Box>(&set)) {
    return exact_project_box(v, box->lower, box->upper);
  }
  if (std::holds_alternative<Simplex>(set)) return project_simplex(v);
  if (std::holds_alternative<Spectrahedron>(set)) {
    return exact_project_spectrahedron(v);
  }
  return dykstra_exact(set, v);
}

inline bool has_closed_form_projection(const FeasibleSet& set) {
  return std::holds_alternative<Box>(set) ||
         std::holds_alternative<Simplex>(set) ||
         std::holds_alternative<Spectrahedron>(set);
}

/// An exact projection dressed with the certificate of the requested type.
inline ProjectionResult certified_exact_projection(const FeasibleSet& set,
                                                   const Vector& v,
                                                   const Vector& u,
                                                   const ProjectionMode& mode) {
  Vector w = exact_project(set, v);
  const double c = (w - v).squaredNorm();
  ProjectionCertificate cert;
  if (const auto* p = std::get_if<PTypeMode>(&mode)) {
    cert.kind = PTypeCertificate{p->zeta, c, c,
                                 p->zeta * c + (1.0 - p->zeta) * (u - v).squaredNorm()};
  } else {
    const double gamma = std::get<RTypeMode>(mode).gamma;
    cert.kind = RTypeCertificate{gamma, 0.0, gamma * (w - u).squaredNorm()};
  }
  return {std::move(w), cert};
}

/// Dispatches to the engine matching the mode and set.
///
/// P-type: closed-form projections where available, Dykstra otherwise.
/// R-type: face-corrected Frank-Wolfe on the simplex and spectrahedron,
/// the closed-form box projection, plain Frank-Wolfe on other compact sets
/// or scalings. Throws NoCertificate when an engine runs dry or stalls.
inline ProjectionResult project_inexact(const FeasibleSet& set, const Vector& v,
                                        const Vector& u,
                                        const ProjectionMode& mode,
                                        const ScalingMatrix& d,
                                        const ProjectionBudget& budget = {}) {
  if (const auto* p = std::get_if<PTypeMode>(&mode)) {
    if (has_closed_form_projection(set)) {
      if (!d.is_identity()) {
        throw UnsupportedConfiguration(
            "project_inexact: P-type mode needs the identity scaling");
      }
      return certified_exact_projection(set, v, u, mode);
    }
    return dykstra_project(set, v, u, p->zeta, d, budget.max_dykstra_cycles);
  }
  const double gamma = std::get<RTypeMode>(mode).gamma;
  if (d.is_identity() && (std::holds_alternative<Simplex>(set) ||
                          std::holds_alternative<Spectrahedron>(set))) {
    return frank_wolfe_corrective_project(set, v, u, gamma,
                                          budget.max_fw_iters);
  }
  if (d.is_identity() && std::holds_alternative<Box>(set)) {
    return certified_exact_projection(set, v, u, mode);
  }
  if (std::holds_alternative<Simplex>(set)) {
    return away_step_fw_simplex(v, u, gamma, d, budget.max_fw_iters);
  }
  if (is_compact(set)) {
    return frank_wolfe_project(set, v, u, gamma, d, u, budget.max_fw_iters);
  }
  throw UnsupportedConfiguration(
      "project_inexact: R-type mode needs a compact set with an LO oracle");
}

}  // namespace inexproj

#endif  // INEXPROJ_PROJECTIONS_HPP_
