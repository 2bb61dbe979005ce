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

#include <filesystem>
#include <string>

#include "vmauction/allocation.hpp"
#include "vmauction/analysis.hpp"
#include "vmauction/model.hpp"
#include "vmauction/perturb.hpp"

namespace vmauction {

// Instance file format (JSON):
// {
//   "epsilon": 0.05,                 // optional
//   "K": 2, "D": 1,
//   "catalog": [[r_1..r_K], ...],    // may be empty
//   "users": [
//     {"id": "u1", "bids": [
//        {"price": 3.5, "q": [[m, d, count], ...]},   // 1-based m, d
//        {"price": 1.0, "R": [r_1..r_KD]}             // explicit demand row
//     ]}
//   ],
//   "capacities": [c_1..c_KD]
// }
// Flat dimension order is j = (d-1)*K + k.

AuctionInstance instance_from_json(const std::string& text);
AuctionInstance load_instance(const std::filesystem::path& path);
std::string instance_to_json(const AuctionInstance& instance);
void save_instance(const AuctionInstance& instance,
                   const std::filesystem::path& path);

std::string theta_to_json(const ThetaDraw& theta);
ThetaDraw theta_from_json(const std::string& text);

/// Replayable record of one allocation run: noise, solved allocation,
/// support probabilities, sampled index, seed.
std::string trace_to_json(const AllocateTrace& trace);

std::string repair_report_to_json(const RepairReport& report);

}  // namespace vmauction
