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

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vmauction/model.hpp"
#include "vmauction/rng.hpp"

namespace vmauction {

// One normalized cluster task: job it belongs to plus CPU/RAM/disk demand.
struct TaskRecord {
  std::string job_id;
  double cpu = 0.0;
  double ram = 0.0;
  double disk = 0.0;
};

struct ParsedTasks {
  std::vector<TaskRecord> tasks;
  std::size_t malformed_rows = 0;
};

// CSV schema: job_id,cpu,ram,disk (an optional header line with exactly
// those names is skipped). Malformed rows - wrong column count, non-numeric
// or negative values - are counted and skipped; more than 10% malformed
// rows fails the ingest.
ParsedTasks parse_tasks(const std::filesystem::path& path);

struct IngestConfig {
  int users = 500;              // W
  int max_bids_per_user = 4;    // |B_w|
  int datacenters = 8;          // D
  // Per-unit resource prices for CPU, RAM, disk used to seed bundle prices.
  std::array<double, 3> unit_prices = {0.045, 0.01, 0.005};
  double price_scale_lo = 0.75;
  double price_scale_hi = 1.5;
  // Capacities scale the per-dimension total demand by a uniform factor in
  // [lo, hi_scale * W / N].
  double capacity_factor_lo = 0.0;
  double capacity_factor_hi_scale = 0.5;
  int vm_type_limit = 1000;
  int kmeans_iterations = 20;
  std::uint64_t seed = 1;
  // Test hooks replacing the random draws with fixed values.
  std::optional<double> force_price_scale;
  std::optional<double> force_capacity_factor;
};

// One job translated into a biddable VM bundle.
struct BidBundle {
  std::string job_id;
  std::vector<VmCount> vm_counts;
  Money price = 0.0;
};

struct BidPool {
  VmCatalog catalog;  // K = 3 resources: cpu, ram, disk
  std::vector<BidBundle> bundles;
  std::size_t zero_demand_tasks = 0;  // excluded from clustering
};

// Clusters tasks into at most vm_type_limit VM types (seeded k-means on the
// demand triples), maps each task to its type and a uniformly random
// datacenter, aggregates per job, and prices each bundle from its total
// catalog demand times the unit prices, scaled by a uniform factor in
// [price_scale_lo, price_scale_hi].
BidPool build_bids(const std::vector<TaskRecord>& tasks,
                   const IngestConfig& config);

/// Capacity per dimension: total demand of the submitted bids scaled by a
/// per-dimension uniform factor in [lo, hi_scale * W / N].
std::vector<double> derive_capacities(const std::vector<BidRequest>& bids,
                                      const VmCatalog& catalog,
                                      const IngestConfig& config,
                                      RngStream& stream);

/// Users draw up to max_bids_per_user bundles each (without replacement)
/// from the pool; capacities derive from the submitted bids.
AuctionInstance assemble_instance(const BidPool& pool,
                                  const IngestConfig& config);

}  // namespace vmauction
