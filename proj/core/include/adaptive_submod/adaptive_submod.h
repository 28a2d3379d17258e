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

#ifndef ADAPTIVE_SUBMOD_ADAPTIVE_SUBMOD_H_
#define ADAPTIVE_SUBMOD_ADAPTIVE_SUBMOD_H_

#include "adaptive_submod/baselines.h"
#include "adaptive_submod/cover.h"
#include "adaptive_submod/errors.h"
#include "adaptive_submod/instance_io.h"
#include "adaptive_submod/maximizers.h"
#include "adaptive_submod/mean_estimator.h"
#include "adaptive_submod/objectives.h"
#include "adaptive_submod/oracle.h"
#include "adaptive_submod/random.h"
#include "adaptive_submod/threshold_sampling.h"
#include "adaptive_submod/types.h"

#endif  // ADAPTIVE_SUBMOD_ADAPTIVE_SUBMOD_H_
