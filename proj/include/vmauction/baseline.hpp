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

#include "vmauction/model.hpp"

namespace vmauction {

// Greedy density baseline ("PDAA-proxy" in comparison outputs): bids sorted
// by price per unit of capacity-normalized aggregate demand, zero-demand
// bids first by price, accepted when capacity and the one-bid-per-user rule
// allow. Deterministic; no claim to match any particular primal-dual
// scheme.
Allocation greedy_allocate(const AuctionInstance& instance);

}  // namespace vmauction
