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

#include <span>
#include <vector>

#include "vmauction/allocation.hpp"
#include "vmauction/model.hpp"
#include "vmauction/perturb.hpp"

namespace vmauction {

// Brute-force references for small instances. These share no search or
// pruning machinery with the dynamic-programming solver; everything is a
// plain walk over all 2^N accept/reject vectors.

struct OracleSolution {
  Allocation x;
  Money welfare = 0.0;
};

/// Exhaustive optimum; ties go to the lexicographically smallest vector.
/// Refuses instances with more than max_bids bids.
OracleSolution brute_force_optimal(const AuctionInstance& instance,
                                   std::span<const Money> prices,
                                   int max_bids = 20);
OracleSolution brute_force_optimal(const PerturbedInstance& perturbed,
                                   int max_bids = 20);

/// All feasible, non-dominated allocations. Exact ties in welfare, usage
/// and winner set collapse to the lexicographically smallest vector,
/// mirroring the solver's convention.
std::vector<Allocation> brute_force_pareto(const AuctionInstance& instance,
                                           std::span<const Money> prices,
                                           int max_bids = 20);
std::vector<Allocation> brute_force_pareto(const PerturbedInstance& perturbed,
                                           int max_bids = 20);

/// All feasible allocations, in mask order (used by distribution-range
/// enumeration tests).
std::vector<Allocation> enumerate_feasible(const AuctionInstance& instance,
                                           int max_bids = 20);
std::vector<Allocation> enumerate_feasible(const PerturbedInstance& perturbed,
                                           int max_bids = 20);

/// Probability-weighted sum over the distribution's finite support.
FractionalAllocation exact_expected_allocation(
    const AllocationDistribution& distribution);

}  // namespace vmauction
