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

#include "vmauction/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace vmauction {

Allocation greedy_allocate(const AuctionInstance& instance) {
  const int n = instance.bid_count();
  const int kd = instance.dimension_count();

  // Density b_i / sum_j (R_ij / c_j); zero normalized demand means the bid
  // consumes nothing that is scarce, so it sorts ahead of everything and
  // within that class by price. Positive demand on a zero-capacity
  // dimension can never be served.
  std::vector<double> density(n);
  std::vector<bool> servable(n, true);
  for (int i = 0; i < n; ++i) {
    const auto row = instance.demand_row(i);
    double normalized = 0.0;
    for (int j = 0; j < kd; ++j) {
      if (row[j] <= 0.0) continue;
      if (instance.capacities()[j] <= 0.0) {
        servable[i] = false;
        break;
      }
      normalized += row[j] / instance.capacities()[j];
    }
    density[i] = normalized > 0.0 ? instance.prices()[i] / normalized
                                  : std::numeric_limits<double>::infinity();
  }

  std::vector<int> order;
  order.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (servable[i]) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const bool za = std::isinf(density[a]);
    const bool zb = std::isinf(density[b]);
    if (za != zb) return za;
    if (za && zb) {
      if (instance.prices()[a] != instance.prices()[b]) {
        return instance.prices()[a] > instance.prices()[b];
      }
      return a < b;
    }
    if (density[a] != density[b]) return density[a] > density[b];
    return a < b;
  });

  Allocation x(n);
  std::vector<double> usage(kd, 0.0);
  std::vector<std::uint8_t> user_won(instance.user_count(), 0);
  for (int i : order) {
    if (user_won[instance.user_of_bid(i)]) continue;
    const auto row = instance.demand_row(i);
    bool fits = true;
    for (int j = 0; j < kd; ++j) {
      if (usage[j] + row[j] > instance.capacities()[j]) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    x[i] = 1;
    user_won[instance.user_of_bid(i)] = 1;
    for (int j = 0; j < kd; ++j) usage[j] += row[j];
  }
  return x;
}

}  // namespace vmauction
