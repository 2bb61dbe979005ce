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
#include <string>
#include <vector>

#include "vmauction/allocation.hpp"
#include "vmauction/model.hpp"

namespace vmauction {

struct AuctionOutcome {
  Allocation y;
  // Raw payment value for every bid, winner or loser; losers often carry a
  // nonzero realization. Settlement charges winners only.
  std::vector<Money> payments_realized;
  std::vector<Money> payments_charged;
  AllocateTrace trace;
  std::vector<AllocateTrace> marginal_traces;  // one per bid, when kept
  std::uint64_t seed = 0;
};

// Randomized payment for one bid: rerun the allocation with that bid's
// price zeroed (demands stay) on fresh randomness, then charge the welfare
// externality:
//   p_i = b_{-i}' y_{-i}  -  (b' y - b_i y_i).
// Realizations may be negative; callers decide what to settle.
Money vcg_payment(const AuctionInstance& instance,
                  const AllocateOptions& options, int bid,
                  const AllocateResult& main_run, std::uint64_t seed,
                  AllocateTrace* marginal_trace = nullptr);

/// One allocation run plus a marginal rerun per bid. Marginal randomness is
/// derived from (seed, "marginal", bid), independent of the main run.
AuctionOutcome run_auction(const AuctionInstance& instance,
                           const AllocateOptions& options, std::uint64_t seed,
                           bool keep_marginal_traces = true);

/// CSV with columns bid_id,user_id,price,won,payment_realized,
/// payment_charged,seed.
std::string outcome_csv(const AuctionOutcome& outcome,
                        const AuctionInstance& instance);

}  // namespace vmauction
