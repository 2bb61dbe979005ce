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

#include "vmauction/analysis.hpp"

#include <algorithm>
#include <limits>

namespace vmauction {

RepairReport drop_on_sort(const Allocation& accepted,
                          const PerturbedInstance& perturbed) {
  const AuctionInstance& base = *perturbed.base;
  const int n = base.bid_count();
  const int kd = base.dimension_count();
  if (static_cast<int>(accepted.size()) != n) {
    throw ContractError("drop_on_sort: allocation length mismatch");
  }

  RepairReport report;
  report.repaired = accepted;

  std::vector<double> usage(kd, 0.0);
  Money total_welfare = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!accepted[i]) continue;
    total_welfare += perturbed.prices[i];
    const auto row = perturbed.demand_row(i);
    for (int j = 0; j < kd; ++j) usage[j] += row[j];
  }

  // Violated dimensions are fixed up front; a later round may find its
  // dimension already repaired by earlier drops and drop nothing.
  std::vector<int> violated;
  for (int j = 0; j < kd; ++j) {
    if (usage[j] > base.capacities()[j]) violated.push_back(j);
  }

  Money dropped_welfare = 0.0;
  for (int j : violated) {
    std::vector<int> survivors;
    for (int i = 0; i < n; ++i) {
      if (report.repaired[i]) survivors.push_back(i);
    }
    std::sort(survivors.begin(), survivors.end(), [&](int a, int b) {
      const double da = perturbed.demand_row(a)[j];
      const double db = perturbed.demand_row(b)[j];
      const double ra = da > 0.0 ? perturbed.prices[a] / da
                                 : std::numeric_limits<double>::infinity();
      const double rb = db > 0.0 ? perturbed.prices[b] / db
                                 : std::numeric_limits<double>::infinity();
      if (ra != rb) return ra < rb;
      return a < b;
    });

    std::vector<int> dropped;
    for (int i : survivors) {
      if (usage[j] <= base.capacities()[j]) break;
      report.repaired[i] = 0;
      dropped.push_back(i);
      dropped_welfare += perturbed.prices[i];
      const auto row = perturbed.demand_row(i);
      for (int jj = 0; jj < kd; ++jj) usage[jj] -= row[jj];
    }
    report.dropped_per_round.emplace_back(j, std::move(dropped));
  }

  report.welfare_retained_fraction =
      total_welfare > 0.0 ? 1.0 - dropped_welfare / total_welfare : 1.0;
  return report;
}

OptimumComparison lemma1_ratio(const AuctionInstance& instance, double epsilon,
                               const ThetaDraw& theta,
                               const SolveOptions& options) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw ParameterError("lemma1_ratio: epsilon must be in (0, 1)");
  }
  if (theta.epsilon != epsilon) {
    throw ContractError("lemma1_ratio: theta drawn for a different epsilon");
  }
  OptimumComparison out;
  PerturbedInstance perturbed = perturb_instance(instance, theta);
  out.perturbed_opt = solve_exact(perturbed, options).welfare;
  out.base_opt =
      solve_exact(instance, std::span<const Money>(instance.prices()), options)
          .welfare;
  if (out.base_opt > 0.0) {
    out.ratio = out.perturbed_opt / out.base_opt;
  }
  return out;
}

}  // namespace vmauction
