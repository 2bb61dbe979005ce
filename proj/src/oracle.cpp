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

#include "vmauction/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace vmauction {

namespace {

struct FlatView {
  const AuctionInstance* instance;
  const Money* prices;
  const double* demands;
};

void check_limit(const AuctionInstance& instance, int max_bids) {
  if (instance.bid_count() > max_bids) {
    throw ParameterError("oracle: instance exceeds the exhaustive limit of " +
                         std::to_string(max_bids) + " bids");
  }
}

Allocation from_mask(std::uint32_t mask, int n) {
  Allocation x(n);
  for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
  return x;
}

bool mask_feasible(const FlatView& view, std::uint32_t mask) {
  const AuctionInstance& inst = *view.instance;
  const int n = inst.bid_count();
  const int kd = inst.dimension_count();
  std::vector<double> usage(kd, 0.0);
  std::vector<int> wins(inst.user_count(), 0);
  for (int i = 0; i < n; ++i) {
    if (!((mask >> i) & 1u)) continue;
    if (++wins[inst.user_of_bid(i)] > 1) return false;
    const double* row = view.demands + static_cast<std::size_t>(i) * kd;
    for (int j = 0; j < kd; ++j) usage[j] += row[j];
  }
  for (int j = 0; j < kd; ++j) {
    if (usage[j] > inst.capacities()[j]) return false;
  }
  return true;
}

struct Candidate {
  std::uint32_t mask;
  Money welfare;
  std::vector<double> usage;
  std::vector<std::uint8_t> winners;  // one flag per user
};

Candidate evaluate(const FlatView& view, std::uint32_t mask) {
  const AuctionInstance& inst = *view.instance;
  const int n = inst.bid_count();
  const int kd = inst.dimension_count();
  Candidate c{mask, 0.0, std::vector<double>(kd, 0.0),
              std::vector<std::uint8_t>(inst.user_count(), 0)};
  for (int i = 0; i < n; ++i) {
    if (!((mask >> i) & 1u)) continue;
    c.welfare += view.prices[i];
    c.winners[inst.user_of_bid(i)] = 1;
    const double* row = view.demands + static_cast<std::size_t>(i) * kd;
    for (int j = 0; j < kd; ++j) c.usage[j] += row[j];
  }
  return c;
}

// Lexicographic order on accept vectors; bid 0 is the most significant
// position, and rejecting sorts before accepting.
bool mask_lex_less(std::uint32_t a, std::uint32_t b, int n) {
  for (int i = 0; i < n; ++i) {
    const std::uint32_t abit = (a >> i) & 1u;
    const std::uint32_t bbit = (b >> i) & 1u;
    if (abit != bbit) return abit < bbit;
  }
  return false;
}

OracleSolution optimal(const FlatView& view, int max_bids) {
  const AuctionInstance& inst = *view.instance;
  check_limit(inst, max_bids);
  const int n = inst.bid_count();
  std::uint32_t best_mask = 0;
  Money best_welfare = 0.0;
  bool have = false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!mask_feasible(view, mask)) continue;
    Money welfare = 0.0;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) welfare += view.prices[i];
    }
    if (!have || welfare > best_welfare ||
        (welfare == best_welfare && mask_lex_less(mask, best_mask, n))) {
      best_mask = mask;
      best_welfare = welfare;
      have = true;
    }
  }
  return {from_mask(best_mask, n), best_welfare};
}

std::vector<Allocation> pareto(const FlatView& view, int max_bids) {
  const AuctionInstance& inst = *view.instance;
  check_limit(inst, max_bids);
  const int n = inst.bid_count();
  std::vector<Candidate> feasible;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (mask_feasible(view, mask)) feasible.push_back(evaluate(view, mask));
  }

  auto dominates_c = [](const Candidate& a, const Candidate& b) {
    bool strict = a.welfare > b.welfare;
    if (a.welfare < b.welfare) return false;
    for (std::size_t j = 0; j < a.usage.size(); ++j) {
      if (a.usage[j] > b.usage[j]) return false;
      if (a.usage[j] < b.usage[j]) strict = true;
    }
    return strict;
  };

  std::vector<Allocation> front;
  for (const Candidate& c : feasible) {
    bool dominated = false;
    bool duplicate = false;
    for (const Candidate& other : feasible) {
      if (&other == &c) continue;
      if (dominates_c(other, c)) {
        dominated = true;
        break;
      }
      // Exact value-and-winner ties collapse to the lexicographically
      // smallest accept vector.
      if (other.welfare == c.welfare && other.usage == c.usage &&
          other.winners == c.winners &&
          mask_lex_less(other.mask, c.mask, n)) {
        duplicate = true;
        break;
      }
    }
    if (!dominated && !duplicate) front.push_back(from_mask(c.mask, n));
  }
  return front;
}

std::vector<Allocation> feasible_set(const FlatView& view, int max_bids) {
  const AuctionInstance& inst = *view.instance;
  check_limit(inst, max_bids);
  const int n = inst.bid_count();
  std::vector<Allocation> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (mask_feasible(view, mask)) out.push_back(from_mask(mask, n));
  }
  return out;
}

}  // namespace

OracleSolution brute_force_optimal(const AuctionInstance& instance,
                                   std::span<const Money> prices,
                                   int max_bids) {
  return optimal({&instance, prices.data(), instance.demand_matrix().data()},
                 max_bids);
}

OracleSolution brute_force_optimal(const PerturbedInstance& perturbed,
                                   int max_bids) {
  return optimal(
      {perturbed.base, perturbed.prices.data(), perturbed.demands.data()},
      max_bids);
}

std::vector<Allocation> brute_force_pareto(const AuctionInstance& instance,
                                           std::span<const Money> prices,
                                           int max_bids) {
  return pareto({&instance, prices.data(), instance.demand_matrix().data()},
                max_bids);
}

std::vector<Allocation> brute_force_pareto(const PerturbedInstance& perturbed,
                                           int max_bids) {
  return pareto(
      {perturbed.base, perturbed.prices.data(), perturbed.demands.data()},
      max_bids);
}

std::vector<Allocation> enumerate_feasible(const AuctionInstance& instance,
                                           int max_bids) {
  return feasible_set(
      {&instance, instance.prices().data(), instance.demand_matrix().data()},
      max_bids);
}

std::vector<Allocation> enumerate_feasible(const PerturbedInstance& perturbed,
                                           int max_bids) {
  return feasible_set(
      {perturbed.base, perturbed.prices.data(), perturbed.demands.data()},
      max_bids);
}

FractionalAllocation exact_expected_allocation(
    const AllocationDistribution& distribution) {
  FractionalAllocation out;
  if (distribution.support.empty()) return out;
  out.x.assign(distribution.support.front().allocation.size(), 0.0);
  for (const auto& [allocation, probability] : distribution.support) {
    for (std::size_t i = 0; i < allocation.size(); ++i) {
      if (allocation[i]) out.x[i] += probability;
    }
  }
  return out;
}

}  // namespace vmauction
