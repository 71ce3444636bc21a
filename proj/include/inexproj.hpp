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


#ifndef INEXPROJ_HPP_
#define INEXPROJ_HPP_

#include "inexproj/bench.hpp"
#include "inexproj/bounds.hpp"
#include "inexproj/certificates.hpp"
#include "inexproj/common.hpp"
#include "inexproj/core_model.hpp"
#include "inexproj/dykstra.hpp"
#include "inexproj/feasible_set.hpp"
#include "inexproj/frank_wolfe.hpp"
#include "inexproj/lanczos.hpp"
#include "inexproj/linesearch.hpp"
#include "inexproj/projections.hpp"
#include "inexproj/scaling.hpp"
#include "inexproj/solver.hpp"

#endif  // INEXPROJ_HPP_
