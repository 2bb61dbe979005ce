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

#include "vmauction/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace vmauction {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw SchemaError("invalid JSON");
  }
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << text;
}

json allocation_to_json(const Allocation& x) {
  json arr = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) arr.push_back(int(x[i]));
  return arr;
}

}  // namespace

AuctionInstance instance_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    VmCatalog catalog;
    catalog.resource_count = j.at("K").get<int>();
    const int dcs = j.at("D").get<int>();
    if (j.contains("catalog")) {
      for (const auto& row : j.at("catalog")) {
        catalog.vm_types.push_back(row.get<std::vector<double>>());
      }
    }
    std::vector<BidRequest> bids;
    for (const auto& user : j.at("users")) {
      const std::string id = user.at("id").get<std::string>();
      for (const auto& jb : user.at("bids")) {
        BidRequest bid;
        bid.user_id = id;
        bid.price = jb.at("price").get<double>();
        if (jb.contains("R")) {
          bid.demand_row = jb.at("R").get<std::vector<double>>();
        } else {
          for (const auto& q : jb.at("q")) {
            if (!q.is_array() || q.size() != 3) {
              throw SchemaError("bid q entries must be [type, dc, count]");
            }
            bid.vm_counts.push_back(
                {q[0].get<int>(), q[1].get<int>(), q[2].get<int>()});
          }
        }
        bids.push_back(std::move(bid));
      }
    }
    std::optional<double> epsilon;
    if (j.contains("epsilon")) epsilon = j.at("epsilon").get<double>();
    return AuctionInstance::build(std::move(catalog), dcs, std::move(bids),
                                  j.at("capacities").get<std::vector<double>>(),
                                  epsilon);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("instance JSON: ") + e.what());
  }
}

AuctionInstance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_file(path));
}

std::string instance_to_json(const AuctionInstance& instance) {
  json j;
  if (instance.default_epsilon()) j["epsilon"] = *instance.default_epsilon();
  j["K"] = instance.resource_count();
  j["D"] = instance.datacenter_count();
  json catalog = json::array();
  for (const auto& vm : instance.catalog().vm_types) catalog.push_back(vm);
  j["catalog"] = catalog;

  json users = json::array();
  for (int u = 0; u < instance.user_count(); ++u) {
    json user;
    user["id"] = instance.users()[u];
    json jbids = json::array();
    for (int i : instance.user_bids()[u]) {
      const BidRequest& bid = instance.bids()[i];
      json jb;
      jb["price"] = bid.price;
      if (bid.demand_row) {
        jb["R"] = *bid.demand_row;
      } else {
        json q = json::array();
        for (const VmCount& v : bid.vm_counts) {
          q.push_back(json::array({v.vm_type, v.datacenter, v.count}));
        }
        jb["q"] = q;
      }
      jbids.push_back(std::move(jb));
    }
    user["bids"] = std::move(jbids);
    users.push_back(std::move(user));
  }
  j["users"] = std::move(users);
  j["capacities"] = instance.capacities();
  return j.dump(2) + "\n";
}

void save_instance(const AuctionInstance& instance,
                   const std::filesystem::path& path) {
  write_file(path, instance_to_json(instance));
}

std::string theta_to_json(const ThetaDraw& theta) {
  json j;
  j["epsilon"] = theta.epsilon;
  j["N"] = theta.bid_count;
  j["KD"] = theta.dimension_count;
  j["seed"] = theta.seed;
  j["values"] = theta.values;
  return j.dump() + "\n";
}

ThetaDraw theta_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    ThetaDraw theta;
    theta.epsilon = j.at("epsilon").get<double>();
    theta.bid_count = j.at("N").get<int>();
    theta.dimension_count = j.at("KD").get<int>();
    theta.seed = j.at("seed").get<std::uint64_t>();
    theta.values = j.at("values").get<std::vector<double>>();
    if (theta.values.size() != static_cast<std::size_t>(theta.bid_count) *
                                   theta.dimension_count) {
      throw SchemaError("theta JSON: values length mismatch");
    }
    return theta;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("theta JSON: ") + e.what());
  }
}

std::string trace_to_json(const AllocateTrace& trace) {
  json j;
  j["seed"] = trace.seed;
  j["theta"] = json::parse(theta_to_json(trace.theta));
  j["kept_bids"] = trace.kept_bids;
  j["forced_zero_bids"] = trace.forced_zero_bids;
  j["solved"] = allocation_to_json(trace.solved);
  j["perturbed_welfare"] = trace.perturbed_welfare;
  j["sampled_index"] = trace.sampled_index;
  j["renormalized"] = trace.distribution.renormalized;
  j["accepted_mass"] = trace.distribution.accepted_mass;
  json support = json::array();
  for (const auto& [allocation, probability] : trace.distribution.support) {
    json entry;
    entry["p"] = probability;
    entry["x"] = allocation_to_json(allocation);
    support.push_back(std::move(entry));
  }
  j["support"] = std::move(support);
  return j.dump() + "\n";
}

std::string repair_report_to_json(const RepairReport& report) {
  json j;
  j["repaired"] = allocation_to_json(report.repaired);
  j["welfare_retained_fraction"] = report.welfare_retained_fraction;
  json rounds = json::array();
  for (const auto& [dimension, dropped] : report.dropped_per_round) {
    json round;
    round["dimension"] = dimension;
    round["dropped"] = dropped;
    rounds.push_back(std::move(round));
  }
  j["rounds"] = std::move(rounds);
  return j.dump() + "\n";
}

}  // namespace vmauction
