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

#include "vmauction/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <unordered_map>

namespace vmauction {

namespace {

bool parse_field(std::string_view field, double* out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, *out);
  return ec == std::errc{} && ptr == end && std::isfinite(*out) && *out >= 0.0;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

}  // namespace

ParsedTasks parse_tasks(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read task file " + path.string());
  }
  ParsedTasks out;
  std::string line;
  std::size_t data_rows = 0;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line == "job_id,cpu,ram,disk") continue;
    }
    ++data_rows;
    const auto fields = split_csv(line);
    TaskRecord record;
    if (fields.size() != 4 || fields[0].empty() ||
        !parse_field(fields[1], &record.cpu) ||
        !parse_field(fields[2], &record.ram) ||
        !parse_field(fields[3], &record.disk)) {
      ++out.malformed_rows;
      continue;
    }
    record.job_id = std::string(fields[0]);
    out.tasks.push_back(std::move(record));
  }
  if (data_rows > 0 &&
      out.malformed_rows * 10 > data_rows) {  // strictly more than 10%
    throw IngestError("task file " + path.string() + ": " +
                      std::to_string(out.malformed_rows) + " of " +
                      std::to_string(data_rows) + " rows malformed");
  }
  return out;
}

namespace {

using Point = std::array<double, 3>;

double squared_distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

// Seeded k-means with a fixed iteration cap. Returns centroids and the
// final assignment.
std::pair<std::vector<Point>, std::vector<int>> cluster_tasks(
    const std::vector<Point>& points, int k, int iterations,
    RngStream& stream) {
  const int n = static_cast<int>(points.size());
  k = std::min(k, n);
  std::vector<Point> centroids;
  centroids.reserve(k);
  // Draw k distinct start indices.
  std::vector<int> indices(n);
  std::iota(indices.begin(), indices.end(), 0);
  for (int c = 0; c < k; ++c) {
    const int pick =
        c + static_cast<int>(stream.uniform_below(
                static_cast<std::uint64_t>(n - c)));
    std::swap(indices[c], indices[pick]);
    centroids.push_back(points[indices[c]]);
  }

  std::vector<int> assignment(n, 0);
  for (int it = 0; it < iterations; ++it) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      int best = assignment[i];
      double best_d = squared_distance(points[i], centroids[best]);
      for (int c = 0; c < k; ++c) {
        const double d = squared_distance(points[i], centroids[c]);
        if (d < best_d) {
          best = c;
          best_d = d;
        }
      }
      if (best != assignment[i]) {
        assignment[i] = best;
        changed = true;
      }
    }
    std::vector<Point> sums(k, Point{0, 0, 0});
    std::vector<int> counts(k, 0);
    for (int i = 0; i < n; ++i) {
      for (int d = 0; d < 3; ++d) sums[assignment[i]][d] += points[i][d];
      ++counts[assignment[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;  // empty cluster keeps its centroid
      for (int d = 0; d < 3; ++d) centroids[c][d] = sums[c][d] / counts[c];
    }
    if (!changed && it > 0) break;
  }
  return {std::move(centroids), std::move(assignment)};
}

}  // namespace

BidPool build_bids(const std::vector<TaskRecord>& tasks,
                   const IngestConfig& config) {
  BidPool pool;
  pool.catalog.resource_count = 3;
  if (tasks.empty()) return pool;

  RngStream root(config.seed);
  RngStream cluster_stream = root.derive("cluster");
  RngStream dc_stream = root.derive("datacenter");
  RngStream price_stream = root.derive("price");

  std::vector<Point> points;
  std::vector<int> point_task;  // index into tasks
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const TaskRecord& task = tasks[t];
    if (task.cpu <= 0.0 && task.ram <= 0.0 && task.disk <= 0.0) {
      ++pool.zero_demand_tasks;
      continue;
    }
    points.push_back({task.cpu, task.ram, task.disk});
    point_task.push_back(static_cast<int>(t));
  }
  if (points.empty()) return pool;

  auto [centroids, assignment] =
      cluster_tasks(points, config.vm_type_limit, config.kmeans_iterations,
                    cluster_stream);

  // Drop empty clusters and renumber.
  std::vector<int> remap(centroids.size(), -1);
  for (int a : assignment) remap[a] = 0;
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    if (remap[c] == 0) {
      remap[c] = pool.catalog.type_count();
      pool.catalog.vm_types.push_back(
          {centroids[c][0], centroids[c][1], centroids[c][2]});
    }
  }

  // Aggregate per job: count tasks per (vm type, random datacenter).
  // Jobs keep their first-appearance order so output is seed-stable.
  std::vector<std::string> job_order;
  std::unordered_map<std::string, std::map<std::pair<int, int>, int>> job_q;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const TaskRecord& task = tasks[point_task[p]];
    const int vm_type = remap[assignment[p]] + 1;  // 1-based
    const int dc = 1 + static_cast<int>(dc_stream.uniform_below(
                           static_cast<std::uint64_t>(config.datacenters)));
    auto [it, inserted] = job_q.try_emplace(task.job_id);
    if (inserted) job_order.push_back(task.job_id);
    ++it->second[{vm_type, dc}];
  }

  for (const std::string& job : job_order) {
    BidBundle bundle;
    bundle.job_id = job;
    std::array<double, 3> total = {0.0, 0.0, 0.0};
    for (const auto& [slot, count] : job_q[job]) {
      bundle.vm_counts.push_back({slot.first, slot.second, count});
      const auto& vm = pool.catalog.vm_types[slot.first - 1];
      for (int k = 0; k < 3; ++k) total[k] += count * vm[k];
    }
    double base_price = 0.0;
    for (int k = 0; k < 3; ++k) base_price += total[k] * config.unit_prices[k];
    const double scale =
        config.force_price_scale
            ? *config.force_price_scale
            : price_stream.uniform(config.price_scale_lo, config.price_scale_hi);
    bundle.price = base_price * scale;
    pool.bundles.push_back(std::move(bundle));
  }
  return pool;
}

std::vector<double> derive_capacities(const std::vector<BidRequest>& bids,
                                      const VmCatalog& catalog,
                                      const IngestConfig& config,
                                      RngStream& stream) {
  const int kd = catalog.resource_count * config.datacenters;
  std::vector<double> total(kd, 0.0);
  for (const BidRequest& bid : bids) {
    const auto row = assemble_demands(bid, catalog, config.datacenters);
    for (int j = 0; j < kd; ++j) total[j] += row[j];
  }
  const double hi =
      bids.empty() ? config.capacity_factor_lo
                   : config.capacity_factor_hi_scale * config.users /
                         static_cast<double>(bids.size());
  std::vector<double> capacities(kd);
  for (int j = 0; j < kd; ++j) {
    const double factor =
        config.force_capacity_factor
            ? *config.force_capacity_factor
            : stream.uniform(config.capacity_factor_lo, hi);
    capacities[j] = total[j] * factor;
  }
  return capacities;
}

AuctionInstance assemble_instance(const BidPool& pool,
                                  const IngestConfig& config) {
  if (config.users < 1 || config.datacenters < 1 ||
      config.max_bids_per_user < 1) {
    throw ParameterError("ingest: users, datacenters and bids per user must be >= 1");
  }
  RngStream root(config.seed);
  RngStream user_stream = root.derive("users");
  RngStream capacity_stream = root.derive("capacity");

  std::vector<BidRequest> bids;
  const int pool_size = static_cast<int>(pool.bundles.size());
  for (int u = 0; u < config.users; ++u) {
    if (pool_size == 0) break;
    const int want = user_stream.uniform_int(1, config.max_bids_per_user);
    const int take = std::min(want, pool_size);
    // Partial Fisher-Yates over bundle indices, seeded per user.
    std::vector<int> indices(pool_size);
    std::iota(indices.begin(), indices.end(), 0);
    for (int t = 0; t < take; ++t) {
      const int pick =
          t + static_cast<int>(user_stream.uniform_below(
                  static_cast<std::uint64_t>(pool_size - t)));
      std::swap(indices[t], indices[pick]);
      const BidBundle& bundle = pool.bundles[indices[t]];
      BidRequest bid;
      bid.user_id = "u" + std::to_string(u + 1);
      bid.price = bundle.price;
      bid.vm_counts = bundle.vm_counts;
      bids.push_back(std::move(bid));
    }
  }

  std::vector<double> capacities =
      derive_capacities(bids, pool.catalog, config, capacity_stream);
  return AuctionInstance::build(pool.catalog, config.datacenters,
                                std::move(bids), std::move(capacities));
}

}  // namespace vmauction
