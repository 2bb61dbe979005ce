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

#include <cstdint>
#include <vector>

#include "vmauction/model.hpp"
#include "vmauction/perturb.hpp"
#include "vmauction/rng.hpp"
#include "vmauction/solver.hpp"

namespace vmauction {

// The residual mass on the zero allocation can turn negative when the
// accepted perturbation mass exceeds eps/2. Reject surfaces the event as
// InvalidDistributionError; Renormalize scales the singleton probabilities
// down so the zero allocation gets exactly zero mass, and flags the result.
enum class InvalidMassPolicy { kReject, kRenormalize };

struct WeightedAllocation {
  Allocation allocation;
  double probability = 0.0;
};

// Finite-support sampling distribution around a solved allocation:
//   support[0]          the solved allocation, probability 1 - eps/2
//   support[1..N]       singleton allocations, equal probabilities
//   support[N+1]        the zero allocation, residual probability
struct AllocationDistribution {
  std::vector<WeightedAllocation> support;
  double epsilon = 0.0;
  double accepted_mass = 0.0;  // sum_j theta^0_j x_j over the solved allocation
  bool renormalized = false;
};

/// Builds the sampling distribution for a solved allocation. Verifies that
/// each singleton allocation is feasible on its own (InfeasibleBasisError
/// otherwise) and that the residual mass is nonnegative (policy above).
AllocationDistribution build_distribution(
    const Allocation& solved, const ThetaDraw& theta,
    const AuctionInstance& instance,
    InvalidMassPolicy policy = InvalidMassPolicy::kReject);

/// One draw from the support; walks the support in order against a single
/// uniform variate, so a seed pins the outcome.
Allocation sample_allocation(const AllocationDistribution& distribution,
                             RngStream& stream);
int sample_support_index(const AllocationDistribution& distribution,
                         RngStream& stream);

struct AllocateOptions {
  double epsilon = 0.05;
  InvalidMassPolicy policy = InvalidMassPolicy::kReject;
  SolveOptions solver;
  int unperturbed_dimension = -1;
  // Test hooks: run with all-zero noise, or skip sampling and return the
  // solved allocation itself.
  bool zero_theta = false;
  bool force_solved_sample = false;
};

struct AllocateTrace {
  ThetaDraw theta;                  // over the kept bids
  std::vector<int> kept_bids;       // original indices the solver saw
  std::vector<int> forced_zero_bids;  // individually infeasible, excluded
  Allocation solved;                // full-length perturbed optimum
  Money perturbed_welfare = 0.0;    // perturbed objective at the optimum
  AllocationDistribution distribution;  // support over full-length vectors
  int sampled_index = -1;
  std::uint64_t seed = 0;
};

struct AllocateResult {
  Allocation y;  // final allocation, feasible for the base instance
  AllocateTrace trace;
};

// Full randomized allocation round: filter bids that are infeasible alone,
// draw noise, solve the perturbed problem exactly, build the distribution,
// sample. Noise and sampling consume disjoint substreams of the seed, so a
// run is reproducible and the two cannot shift each other.
AllocateResult allocate(const AuctionInstance& instance,
                        const AllocateOptions& options, std::uint64_t seed);

/// Same, with the bid prices overridden (marginal runs, misreport probes).
AllocateResult allocate_with_prices(const AuctionInstance& instance,
                                    std::span<const Money> prices,
                                    const AllocateOptions& options,
                                    std::uint64_t seed);

}  // namespace vmauction
