// Copyright 2026 The Authors.
//
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

#ifndef ADAPTIVE_SUBMOD_COVER_H_
#define ADAPTIVE_SUBMOD_COVER_H_

#include <vector>

#include "adaptive_submod/oracle.h"
#include "adaptive_submod/random.h"
#include "adaptive_submod/threshold_sampling.h"
#include "adaptive_submod/types.h"

namespace adaptive_submod {

struct CoverRung {
  double tau = 0.0;
  double target = 0.0;        // L - f(S) handed to the rung
  double value_after = 0.0;   // f(S) after the rung, unshifted
  bool cleanup = false;       // extra rung at tau = 1
  CoverOutcome outcome;       // in the shifted frame
};

struct CoverResult {
  SubsetSelection solution;
  double value = 0.0;
  double delta_star = 0.0;
  std::vector<CoverRung> rungs;
};

// Greedy threshold ladder tau = (1/2)^i delta_star, i = 0..ceil(2 ln delta_star),
// followed by rungs at tau = 1 until f(S) >= target. Meant for integer-valued
// monotone objectives. Throws InfeasibleTargetError when target > f(N) and
// InvalidInputError when target is not positive.
CoverResult adaptive_greedy_cover(const OracleHandle& oracle, double target, RandomSource rng);

}  // namespace adaptive_submod

#endif  // ADAPTIVE_SUBMOD_COVER_H_
