// Copyright 2026 The vmauction Authors
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

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vmauction/model.hpp"
#include "vmauction/perturb.hpp"
#include "vmauction/solver.hpp"

namespace vmauction {

struct RepairReport {
  Allocation repaired;  // componentwise <= the input allocation
  // One round per violated perturbed dimension, in dimension order; each
  // round lists the bids it dropped.
  std::vector<std::pair<int, std::vector<int>>> dropped_per_round;
  // Fraction of the input's perturbed welfare the repair keeps (1 when the
  // input carries no welfare).
  double welfare_retained_fraction = 1.0;
};

// Sort-and-drop repair: for each perturbed dimension the input allocation
// violates, drop surviving accepted bids in increasing order of perturbed
// price per unit of that dimension's perturbed demand (ties to the lower
// bid index) until the dimension fits. Rounds act cumulatively on the
// shrinking accepted set, so the result is feasible for the perturbed
// instance.
RepairReport drop_on_sort(const Allocation& accepted,
                          const PerturbedInstance& perturbed);

struct OptimumComparison {
  Money perturbed_opt = 0.0;  // optimum of the perturbed problem
  Money base_opt = 0.0;       // optimum of the original problem
  std::optional<double> ratio;  // perturbed/base; empty when base is 0
};

/// Solves both problems exactly under the given noise and reports the
/// optimum ratio.
OptimumComparison lemma1_ratio(const AuctionInstance& instance, double epsilon,
                               const ThetaDraw& theta,
                               const SolveOptions& options = {});

}  // namespace vmauction
