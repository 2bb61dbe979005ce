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

#include "vmauction/allocation.hpp"

#include <utility>

namespace vmauction {

namespace {

bool singleton_fits(const AuctionInstance& instance, int bid) {
  const auto row = instance.demand_row(bid);
  for (int j = 0; j < instance.dimension_count(); ++j) {
    if (row[j] > instance.capacities()[j]) return false;
  }
  return true;
}

Allocation expand(const Allocation& sub, const std::vector<int>& kept, int n) {
  Allocation full(n);
  for (std::size_t j = 0; j < sub.size(); ++j) {
    if (sub[j]) full[kept[j]] = 1;
  }
  return full;
}

}  // namespace

AllocationDistribution build_distribution(const Allocation& solved,
                                          const ThetaDraw& theta,
                                          const AuctionInstance& instance,
                                          InvalidMassPolicy policy) {
  const int n = instance.bid_count();
  if (static_cast<int>(solved.size()) != n || theta.bid_count != n ||
      theta.dimension_count != instance.dimension_count()) {
    throw ContractError("build_distribution: dimension mismatch");
  }
  if (!check_feasible(solved, instance).feasible) {
    throw ContractError("build_distribution: solved allocation infeasible");
  }
  std::vector<int> infeasible;
  for (int i = 0; i < n; ++i) {
    if (!singleton_fits(instance, i)) infeasible.push_back(i);
  }
  if (!infeasible.empty()) {
    throw InfeasibleBasisError(std::move(infeasible));
  }

  AllocationDistribution dist;
  dist.epsilon = theta.epsilon;
  for (int j = 0; j < n; ++j) {
    if (solved[j]) dist.accepted_mass += theta.objective(j);
  }

  const double p_solved = 1.0 - theta.epsilon / 2.0;
  double p_singleton = n > 0 ? dist.accepted_mass / n : 0.0;
  double residual = theta.epsilon / 2.0 - dist.accepted_mass;
  if (residual < 0.0) {
    if (policy == InvalidMassPolicy::kReject) {
      throw InvalidDistributionError(residual);
    }
    p_singleton = n > 0 ? (theta.epsilon / 2.0) / n : 0.0;
    residual = 0.0;
    dist.renormalized = true;
  }

  dist.support.reserve(static_cast<std::size_t>(n) + 2);
  dist.support.push_back({solved, p_solved});
  for (int i = 0; i < n; ++i) {
    Allocation basis(n);
    basis[i] = 1;
    dist.support.push_back({std::move(basis), p_singleton});
  }
  dist.support.push_back({Allocation(n), residual});
  return dist;
}

int sample_support_index(const AllocationDistribution& distribution,
                         RngStream& stream) {
  const double u = stream.uniform01();
  double cumulative = 0.0;
  for (std::size_t i = 0; i < distribution.support.size(); ++i) {
    cumulative += distribution.support[i].probability;
    if (u < cumulative) return static_cast<int>(i);
  }
  return static_cast<int>(distribution.support.size()) - 1;
}

Allocation sample_allocation(const AllocationDistribution& distribution,
                             RngStream& stream) {
  return distribution.support[sample_support_index(distribution, stream)]
      .allocation;
}

AllocateResult allocate(const AuctionInstance& instance,
                        const AllocateOptions& options, std::uint64_t seed) {
  return allocate_with_prices(
      instance, std::span<const Money>(instance.prices()), options, seed);
}

AllocateResult allocate_with_prices(const AuctionInstance& instance,
                                    std::span<const Money> prices,
                                    const AllocateOptions& options,
                                    std::uint64_t seed) {
  if (!(options.epsilon > 0.0) || !(options.epsilon < 1.0)) {
    throw ParameterError("allocate: epsilon must be in (0, 1)");
  }
  if (static_cast<int>(prices.size()) != instance.bid_count()) {
    throw ContractError("allocate: price vector length mismatch");
  }
  const int n = instance.bid_count();
  const int kd = instance.dimension_count();

  AllocateResult result;
  result.trace.seed = seed;
  std::vector<int>& kept = result.trace.kept_bids;
  for (int i = 0; i < n; ++i) {
    if (singleton_fits(instance, i)) {
      kept.push_back(i);
    } else {
      result.trace.forced_zero_bids.push_back(i);
    }
  }

  RngStream master(seed);
  RngStream theta_stream = master.derive("theta");
  RngStream omega_stream = master.derive("omega");

  // Nothing survives the filter (or the instance is empty): the outcome is
  // the zero allocation with the degenerate two-point distribution.
  if (kept.empty()) {
    result.trace.theta = ThetaDraw::zero(options.epsilon, 0, kd);
    result.trace.solved = Allocation(n);
    result.trace.distribution.epsilon = options.epsilon;
    result.trace.distribution.support = {
        {Allocation(n), 1.0 - options.epsilon / 2.0},
        {Allocation(n), options.epsilon / 2.0}};
    result.trace.sampled_index = 0;
    result.y = Allocation(n);
    return result;
  }

  const bool filtered = kept.size() != static_cast<std::size_t>(n);
  std::optional<AuctionInstance> sub_storage;
  const AuctionInstance* solver_instance = &instance;
  std::vector<Money> sub_prices;
  std::span<const Money> solver_prices = prices;
  if (filtered) {
    std::vector<BidRequest> sub_bids;
    sub_bids.reserve(kept.size());
    for (int i : kept) {
      BidRequest bid = instance.bids()[i];
      // Demands were already resolved against the catalog; carry them as
      // explicit rows so the sub-instance cannot drift.
      bid.demand_row.emplace(instance.demand_row(i).begin(),
                             instance.demand_row(i).end());
      sub_bids.push_back(std::move(bid));
      sub_prices.push_back(prices[i]);
    }
    sub_storage = AuctionInstance::build(
        instance.catalog(), instance.datacenter_count(), std::move(sub_bids),
        instance.capacities(), instance.default_epsilon());
    solver_instance = &*sub_storage;
    solver_prices = sub_prices;
  }

  const int sub_n = static_cast<int>(kept.size());
  ThetaDraw theta =
      options.zero_theta
          ? ThetaDraw::zero(options.epsilon, sub_n, kd)
          : draw_thetas(options.epsilon, sub_n, kd, theta_stream);

  PerturbedInstance perturbed =
      perturb_instance(*solver_instance, solver_prices, theta,
                       options.unperturbed_dimension);
  ExactSolution solution = solve_exact(perturbed, options.solver);

  AllocationDistribution sub_dist = build_distribution(
      solution.x, theta, *solver_instance, options.policy);
  const int sampled =
      options.force_solved_sample ? 0
                                  : sample_support_index(sub_dist, omega_stream);

  result.trace.theta = std::move(theta);
  result.trace.perturbed_welfare = solution.welfare;
  result.trace.sampled_index = sampled;
  if (filtered) {
    result.trace.solved = expand(solution.x, kept, n);
    result.trace.distribution.epsilon = sub_dist.epsilon;
    result.trace.distribution.accepted_mass = sub_dist.accepted_mass;
    result.trace.distribution.renormalized = sub_dist.renormalized;
    result.trace.distribution.support.reserve(sub_dist.support.size());
    for (const auto& [allocation, probability] : sub_dist.support) {
      result.trace.distribution.support.push_back(
          {expand(allocation, kept, n), probability});
    }
  } else {
    result.trace.solved = solution.x;
    result.trace.distribution = std::move(sub_dist);
  }
  result.y = result.trace.distribution.support[sampled].allocation;
  return result;
}

}  // namespace vmauction
