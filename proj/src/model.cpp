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

#include "vmauction/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace vmauction {

void VmCatalog::validate() const {
  if (resource_count < 1) {
    throw SchemaError("catalog: resource_count must be >= 1");
  }
  for (const auto& vm : vm_types) {
    if (static_cast<int>(vm.size()) != resource_count) {
      throw SchemaError("catalog: vm type row length != resource_count");
    }
    bool any_positive = false;
    for (double r : vm) {
      if (!(r >= 0.0) || !std::isfinite(r)) {
        throw SchemaError("catalog: vm resource amounts must be finite and >= 0");
      }
      any_positive = any_positive || r > 0.0;
    }
    if (!any_positive) {
      throw SchemaError("catalog: vm type with all-zero resource amounts");
    }
  }
}

std::vector<double> assemble_demands(const BidRequest& bid,
                                     const VmCatalog& catalog,
                                     int datacenter_count) {
  const int k = catalog.resource_count;
  std::vector<double> row(static_cast<std::size_t>(k) * datacenter_count, 0.0);
  for (const VmCount& q : bid.vm_counts) {
    if (q.vm_type < 1 || q.vm_type > catalog.type_count()) {
      throw SchemaError("bid references unknown vm type " +
                        std::to_string(q.vm_type));
    }
    if (q.datacenter < 1 || q.datacenter > datacenter_count) {
      throw SchemaError("bid references unknown datacenter " +
                        std::to_string(q.datacenter));
    }
    if (q.count < 0) {
      throw SchemaError("bid with negative vm count");
    }
    const auto& vm = catalog.vm_types[q.vm_type - 1];
    for (int r = 1; r <= k; ++r) {
      row[constraint_index(r, q.datacenter, k)] += q.count * vm[r - 1];
    }
  }
  return row;
}

AuctionInstance AuctionInstance::build(VmCatalog catalog, int datacenter_count,
                                       std::vector<BidRequest> bids,
                                       std::vector<double> capacities,
                                       std::optional<double> epsilon) {
  AuctionInstance inst;
  if (datacenter_count < 1) {
    throw SchemaError("instance: datacenter_count must be >= 1");
  }
  if (catalog.resource_count < 1) {
    throw SchemaError("instance: resource_count must be >= 1");
  }
  if (!catalog.vm_types.empty()) {
    catalog.validate();
  }
  const int kd = catalog.resource_count * datacenter_count;
  if (static_cast<int>(capacities.size()) != kd) {
    throw SchemaError("instance: capacities length != K*D");
  }
  for (double c : capacities) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw SchemaError("instance: capacities must be finite and >= 0");
    }
  }

  inst.catalog_ = std::move(catalog);
  inst.resource_count_ = inst.catalog_.resource_count;
  inst.datacenter_count_ = datacenter_count;
  inst.capacities_ = std::move(capacities);
  inst.epsilon_ = epsilon;
  inst.bids_ = std::move(bids);

  const int n = static_cast<int>(inst.bids_.size());
  inst.prices_.reserve(n);
  inst.demands_.reserve(static_cast<std::size_t>(n) * kd);
  inst.user_of_bid_.reserve(n);
  std::unordered_map<std::string, int> user_index;

  for (int i = 0; i < n; ++i) {
    const BidRequest& bid = inst.bids_[i];
    if (!std::isfinite(bid.price) || bid.price < 0.0) {
      throw SchemaError("bid " + std::to_string(i) +
                        ": price must be finite and >= 0");
    }
    std::vector<double> row;
    if (bid.demand_row.has_value()) {
      row = *bid.demand_row;
      if (static_cast<int>(row.size()) != kd) {
        throw SchemaError("bid " + std::to_string(i) +
                          ": explicit demand row length != K*D");
      }
      for (double v : row) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
          throw SchemaError("bid " + std::to_string(i) +
                            ": demands must be finite and >= 0");
        }
      }
    } else {
      row = assemble_demands(bid, inst.catalog_, datacenter_count);
      bool any_positive = false;
      for (const VmCount& q : bid.vm_counts) {
        any_positive = any_positive || q.count > 0;
      }
      if (!any_positive && bid.price > 0.0) {
        throw SchemaError("bid " + std::to_string(i) +
                          ": empty bundle with positive price");
      }
    }
    inst.prices_.push_back(bid.price);
    inst.demands_.insert(inst.demands_.end(), row.begin(), row.end());

    auto [it, inserted] =
        user_index.try_emplace(bid.user_id, static_cast<int>(inst.users_.size()));
    if (inserted) {
      inst.users_.push_back(bid.user_id);
      inst.user_bids_.emplace_back();
    }
    inst.user_of_bid_.push_back(it->second);
    inst.user_bids_[it->second].push_back(i);
  }
  return inst;
}

Money social_welfare(const Allocation& x, const AuctionInstance& instance) {
  return social_welfare(x, std::span<const Money>(instance.prices()));
}

Money social_welfare(const Allocation& x, std::span<const Money> prices) {
  if (x.size() != prices.size()) {
    throw ContractError("social_welfare: allocation/price length mismatch");
  }
  Money total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) total += prices[i];
  }
  return total;
}

std::vector<double> resource_usage(const Allocation& x,
                                   const AuctionInstance& instance) {
  if (static_cast<int>(x.size()) != instance.bid_count()) {
    throw ContractError("resource_usage: allocation length mismatch");
  }
  const int kd = instance.dimension_count();
  std::vector<double> usage(kd, 0.0);
  for (int i = 0; i < instance.bid_count(); ++i) {
    if (!x[i]) continue;
    const auto row = instance.demand_row(i);
    for (int j = 0; j < kd; ++j) usage[j] += row[j];
  }
  return usage;
}

FeasibilityReport check_feasible(const Allocation& x,
                                 const AuctionInstance& instance) {
  FeasibilityReport report;
  const std::vector<double> usage = resource_usage(x, instance);
  for (int j = 0; j < instance.dimension_count(); ++j) {
    if (usage[j] > instance.capacities()[j]) {
      report.violated_dimensions.push_back(j);
    }
  }
  std::vector<int> wins(instance.user_count(), 0);
  for (int i = 0; i < instance.bid_count(); ++i) {
    if (x[i]) ++wins[instance.user_of_bid(i)];
  }
  for (int u = 0; u < instance.user_count(); ++u) {
    if (wins[u] > 1) report.violated_users.push_back(instance.users()[u]);
  }
  report.feasible =
      report.violated_dimensions.empty() && report.violated_users.empty();
  return report;
}

SmallBidReport check_small_bid(const AuctionInstance& instance, double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw ParameterError("check_small_bid: epsilon must be in (0, 1)");
  }
  SmallBidReport report;
  const int kd = instance.dimension_count();
  report.threshold = 1.0 / (2.0 * kd * (2.0 + 1.0 / epsilon));
  for (int i = 0; i < instance.bid_count(); ++i) {
    const auto row = instance.demand_row(i);
    for (int j = 0; j < kd; ++j) {
      if (row[j] <= 0.0) continue;
      const double c = instance.capacities()[j];
      const double ratio =
          c > 0.0 ? row[j] / c : std::numeric_limits<double>::infinity();
      report.max_ratio = std::max(report.max_ratio, ratio);
    }
  }
  report.pass = report.max_ratio <= report.threshold;
  return report;
}

}  // namespace vmauction
