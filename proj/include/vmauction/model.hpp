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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vmauction/errors.hpp"

namespace vmauction {

using Money = double;

// Requested VM count for one (type, datacenter) slot. Indices are 1-based,
// matching the instance file format.
struct VmCount {
  int vm_type = 0;
  int datacenter = 0;
  int count = 0;
};

// The menu of assemblable VM types: M rows, each giving the per-VM
// consumption of the K resource types.
struct VmCatalog {
  int resource_count = 0;
  std::vector<std::vector<double>> vm_types;

  int type_count() const { return static_cast<int>(vm_types.size()); }
  void validate() const;
};

// One bundle bid. Demand is given either as VM counts (resolved through the
// catalog) or as an explicit per-dimension demand row, which synthetic
// instances use directly.
struct BidRequest {
  std::string user_id;
  Money price = 0.0;
  std::vector<VmCount> vm_counts;
  std::optional<std::vector<double>> demand_row;
};

// Binary accept/reject vector over the instance's bids.
struct Allocation {
  std::vector<std::uint8_t> x;

  Allocation() = default;
  explicit Allocation(std::size_t n, std::uint8_t fill = 0) : x(n, fill) {}

  std::size_t size() const { return x.size(); }
  bool empty() const { return x.empty(); }
  std::uint8_t operator[](std::size_t i) const { return x[i]; }
  std::uint8_t& operator[](std::size_t i) { return x[i]; }
  bool operator==(const Allocation&) const = default;

  /// Strict lexicographic order on the accept/reject vector.
  bool lex_less(const Allocation& other) const { return x < other.x; }
};

struct FractionalAllocation {
  std::vector<double> x;
};

/// Flat constraint dimension for 1-based resource k and datacenter d:
/// j = (d-1)*K + k, returned 0-based. The last dimension (K*D - 1) is the
/// one left untouched by perturbation.
inline int constraint_index(int k, int d, int resource_count) {
  return (d - 1) * resource_count + (k - 1);
}

/// Demand row of one bid over all K*D dimensions: entry (k,d) is
/// sum_m q_{md} * r_m^k. Throws SchemaError on unknown type/datacenter.
std::vector<double> assemble_demands(const BidRequest& bid,
                                     const VmCatalog& catalog,
                                     int datacenter_count);

// Immutable auction input: bids grouped by user, the derived N x (K*D)
// demand matrix, and per-dimension capacities. Construct through build(),
// which validates invariants and precomputes the demand matrix and user
// grouping; instances are safe to share across threads afterwards.
class AuctionInstance {
 public:
  static AuctionInstance build(VmCatalog catalog, int datacenter_count,
                               std::vector<BidRequest> bids,
                               std::vector<double> capacities,
                               std::optional<double> epsilon = std::nullopt);

  int bid_count() const { return static_cast<int>(bids_.size()); }
  int resource_count() const { return resource_count_; }
  int datacenter_count() const { return datacenter_count_; }
  int dimension_count() const { return resource_count_ * datacenter_count_; }
  int user_count() const { return static_cast<int>(users_.size()); }

  const VmCatalog& catalog() const { return catalog_; }
  const std::vector<BidRequest>& bids() const { return bids_; }
  const std::vector<double>& capacities() const { return capacities_; }
  std::optional<double> default_epsilon() const { return epsilon_; }

  /// Bid prices in bid order.
  const std::vector<Money>& prices() const { return prices_; }

  /// Row-major N x (K*D) demand matrix.
  const std::vector<double>& demand_matrix() const { return demands_; }
  std::span<const double> demand_row(int bid) const {
    return {demands_.data() + static_cast<std::size_t>(bid) * dimension_count(),
            static_cast<std::size_t>(dimension_count())};
  }

  /// Distinct user ids in first-appearance order.
  const std::vector<std::string>& users() const { return users_; }
  int user_of_bid(int bid) const { return user_of_bid_[bid]; }
  const std::vector<std::vector<int>>& user_bids() const { return user_bids_; }

 private:
  AuctionInstance() = default;

  VmCatalog catalog_;
  int resource_count_ = 0;
  int datacenter_count_ = 0;
  std::vector<BidRequest> bids_;
  std::vector<double> capacities_;
  std::optional<double> epsilon_;

  std::vector<Money> prices_;
  std::vector<double> demands_;
  std::vector<std::string> users_;
  std::vector<int> user_of_bid_;
  std::vector<std::vector<int>> user_bids_;
};

/// Sum of accepted bid prices under the given allocation.
Money social_welfare(const Allocation& x, const AuctionInstance& instance);

/// Same, under an externally supplied price vector.
Money social_welfare(const Allocation& x, std::span<const Money> prices);

/// Per-dimension resource consumption of the allocation.
std::vector<double> resource_usage(const Allocation& x,
                                   const AuctionInstance& instance);

struct FeasibilityReport {
  bool feasible = true;
  std::vector<int> violated_dimensions;    // 0-based flat constraint indices
  std::vector<std::string> violated_users; // users winning more than one bid
};

/// Checks capacity (inclusive) and the one-winning-bid-per-user rule.
FeasibilityReport check_feasible(const Allocation& x,
                                 const AuctionInstance& instance);

struct SmallBidReport {
  double max_ratio = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Largest demand-to-capacity ratio versus the bound 1/(2*K*D*(2 + 1/eps)).
/// A positive demand on a zero-capacity dimension yields an infinite ratio.
SmallBidReport check_small_bid(const AuctionInstance& instance, double epsilon);

}  // namespace vmauction
